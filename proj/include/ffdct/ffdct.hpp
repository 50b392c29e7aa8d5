// Copyright 2026 The ffdct Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header.

#pragma once

#include "ffdct/errors.hpp"
#include "ffdct/fast_path.hpp"
#include "ffdct/gaussian.hpp"
#include "ffdct/ntt.hpp"
#include "ffdct/number_theory.hpp"
#include "ffdct/params.hpp"
#include "ffdct/prime_field.hpp"
#include "ffdct/selftest.hpp"
#include "ffdct/transform.hpp"
#include "ffdct/trig.hpp"
