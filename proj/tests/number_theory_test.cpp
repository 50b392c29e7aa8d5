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

#include "ffdct/number_theory.hpp"

#include <cstdint>
#include <map>
#include <random>

#include "gtest/gtest.h"

namespace ffdct {
namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

TEST(IsPrimeTest, SmallValues) {
  EXPECT_TRUE(is_prime(31));
  EXPECT_TRUE(is_prime(8191));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(0));
  EXPECT_TRUE(is_prime(2));
}

TEST(IsPrimeTest, AgreesWithTrialDivisionBelow20000) {
  for (std::uint64_t n = 0; n < 20000; ++n) ASSERT_EQ(is_prime(n), trial_division_prime(n)) << n;
}

TEST(IsPrimeTest, LargeKnownValues) {
  EXPECT_TRUE(is_prime((std::uint64_t{1} << 61) - 1));
  EXPECT_TRUE(is_prime(2147483647));
  EXPECT_FALSE(is_prime((std::uint64_t{1} << 59) - 1));  // 179951 * 3203431780337
  EXPECT_FALSE(is_prime(3215031751));                     // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_TRUE(is_prime(18446744073709551557ULL));         // largest 64-bit prime
}

TEST(FactorizeTest, Examples) {
  EXPECT_EQ(factorize(32), (std::map<std::uint64_t, unsigned>{{2, 5}}));
  EXPECT_EQ(factorize(24), (std::map<std::uint64_t, unsigned>{{2, 3}, {3, 1}}));
  EXPECT_EQ(factorize(960), (std::map<std::uint64_t, unsigned>{{2, 6}, {3, 1}, {5, 1}}));
  EXPECT_TRUE(factorize(1).empty());
}

TEST(FactorizeTest, PollardRhoCofactor) {
  // Both factors exceed the trial-division bound.
  const std::uint64_t a = 1000003, b = 1000033;
  EXPECT_EQ(factorize(a * b), (std::map<std::uint64_t, unsigned>{{a, 1}, {b, 1}}));
  EXPECT_EQ(factorize(a * a), (std::map<std::uint64_t, unsigned>{{a, 2}}));
}

TEST(FactorizeTest, ProductReconstructsRandomInputs) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const std::uint64_t n = rng() >> (rng() % 40) | 1;
    std::uint64_t prod = 1;
    for (auto [q, e] : factorize(n)) {
      ASSERT_TRUE(is_prime(q)) << q;
      for (unsigned k = 0; k < e; ++k) prod *= q;
    }
    ASSERT_EQ(prod, n);
  }
}

TEST(DivisorsTest, Enumerates) {
  EXPECT_EQ(divisors(8), (std::vector<std::uint64_t>{1, 2, 4, 8}));
  EXPECT_EQ(divisors(50), (std::vector<std::uint64_t>{1, 2, 5, 10, 25, 50}));
  EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
}

TEST(MersenneExponentTest, Examples) {
  EXPECT_EQ(mersenne_exponent(31), 5u);
  EXPECT_EQ(mersenne_exponent(23), std::nullopt);
  EXPECT_EQ(mersenne_exponent(127), 7u);
  EXPECT_EQ(mersenne_exponent(8191), 13u);
  EXPECT_EQ(mersenne_exponent(2047), std::nullopt);  // 23 * 89
  EXPECT_EQ(mersenne_exponent(~std::uint64_t{0}), std::nullopt);
}

}  // namespace
}  // namespace ffdct
