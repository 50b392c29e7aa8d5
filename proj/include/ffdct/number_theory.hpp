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

// Elementary number theory on 64-bit integers: primality, factorization,
// Mersenne detection. Independent of any field context.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

namespace ffdct {

using u128 = unsigned __int128;

namespace detail {

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

inline std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

inline bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
  std::uint64_t x = powmod64(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mulmod64(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace detail

/// Deterministic for every 64-bit n: the first twelve primes form a
/// complete Miller-Rabin witness set below 3.3e24.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : kWitnesses) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kWitnesses) {
    if (detail::miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

namespace detail {

// Brent's variant of Pollard rho. n must be odd and composite.
inline std::uint64_t pollard_rho(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [n, c](std::uint64_t x) { return (mulmod64(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mulmod64(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void factor_into(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  std::uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace detail

/// Prime factorization as a map prime -> multiplicity. Trial division up to
/// 10^6, Pollard rho on whatever cofactor remains. factorize(1) is empty.
inline std::map<std::uint64_t, unsigned> factorize(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> factors;
  if (n <= 1) return factors;
  constexpr std::uint64_t kTrialLimit = 1'000'000;
  for (std::uint64_t d = 2; d <= kTrialLimit && d * d <= n; d += (d == 2 ? 1 : 2)) {
    while (n % d == 0) {
      ++factors[d];
      n /= d;
    }
  }
  detail::factor_into(n, factors);
  return factors;
}

/// All positive divisors of n, ascending.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [q, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t qk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      qk *= q;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * qk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// s such that p = 2^s - 1 is a Mersenne prime; empty otherwise.
inline std::optional<unsigned> mersenne_exponent(std::uint64_t p) {
  if (p == ~std::uint64_t{0} || !std::has_single_bit(p + 1)) return std::nullopt;
  if (!is_prime(p)) return std::nullopt;
  return static_cast<unsigned>(std::countr_zero(p + 1));
}

}  // namespace ffdct
