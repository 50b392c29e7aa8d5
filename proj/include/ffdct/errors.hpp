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

#pragma once

#include <stdexcept>
#include <string>

namespace ffdct {

/// Base class of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands bound to different primes were combined.
class context_mismatch : public error {
 public:
  using error::error;
};

/// Inverse of zero was requested.
class not_invertible : public error {
 public:
  using error::error;
};

/// An argument lies outside the domain of the operation (bad prime,
/// residue out of range, zero passed to a quadratic-residue test, ...).
class domain_error : public error {
 public:
  using error::error;
};

/// A requested element order does not divide the group order.
class unsupported_order : public error {
 public:
  using error::error;
};

/// No real kernel exists for the requested blocklength (4N does not divide p + 1).
class unsupported_length : public error {
 public:
  using error::error;
};

/// A caller-supplied kernel element is not unimodular or has the wrong order.
class invalid_lambda : public error {
 public:
  using error::error;
};

/// Input sequence length disagrees with the plan.
class length_mismatch : public error {
 public:
  using error::error;
};

/// The radix-2 path only handles power-of-two blocklengths.
class fast_path_unsupported : public error {
 public:
  using error::error;
};

/// An internal invariant broke. Seeing this means a bug or a tampered table.
class internal_error : public error {
 public:
  using error::error;
};

}  // namespace ffdct
