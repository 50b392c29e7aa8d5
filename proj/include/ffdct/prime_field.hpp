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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "ffdct/errors.hpp"
#include "ffdct/number_theory.hpp"

namespace ffdct {

/// How Prime::reduce folds a double-width product back into [0, p).
enum class MulBackend : std::uint8_t {
  generic,        ///< 128-bit remainder.
  mersenne_fold,  ///< shift-and-add at bit s; only for p = 2^s - 1.
};

/// A validated prime modulus p = 3 (mod 4), p <= 2^61 - 1.
///
/// Carries the raw canonical-form arithmetic used by every hot loop in the
/// library. Values passed to the raw members must already lie in [0, p).
/// Two Prime objects compare equal when their moduli agree; the backend is
/// an implementation detail and never affects results.
class Prime {
 public:
  static constexpr std::uint64_t kMaxValue = (std::uint64_t{1} << 61) - 1;

  explicit Prime(std::uint64_t p, MulBackend backend = MulBackend::generic) : p_(p), backend_(backend) {
    if (p < 3 || p > kMaxValue) {
      throw domain_error("prime " + std::to_string(p) + " outside supported range [3, 2^61 - 1]");
    }
    if (!is_prime(p)) throw domain_error(std::to_string(p) + " is not prime");
    if (p % 4 != 3) {
      throw domain_error("p = " + std::to_string(p) + " is not 3 mod 4; -1 is a square and GI(p) is not a field");
    }
    if (auto s = ffdct::mersenne_exponent(p)) mersenne_s_ = static_cast<std::uint8_t>(*s);
    if (backend == MulBackend::mersenne_fold && mersenne_s_ == 0) {
      throw domain_error("mersenne_fold backend requested for non-Mersenne prime " + std::to_string(p));
    }
  }

  std::uint64_t value() const { return p_; }
  MulBackend backend() const { return backend_; }

  std::optional<unsigned> mersenne_exponent() const {
    if (mersenne_s_ == 0) return std::nullopt;
    return mersenne_s_;
  }

  Prime with_backend(MulBackend backend) const { return Prime(p_, backend); }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = a + b;  // < 2^62, no overflow
    return r >= p_ ? r - p_ : r;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint64_t reduce(u128 x) const {
    if (backend_ == MulBackend::mersenne_fold) {
      // 2^s = 1 (mod p): add the high part onto the low part until it fits.
      const unsigned s = mersenne_s_;
      while (x >> s != 0) x = (x & p_) + (x >> s);
      auto r = static_cast<std::uint64_t>(x);
      return r == p_ ? 0 : r;
    }
    if ((x >> 64) == 0) return static_cast<std::uint64_t>(x) % p_;
    return static_cast<std::uint64_t>(x % p_);
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(static_cast<u128>(a) * b); }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e != 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// Fermat inverse; throws not_invertible on zero.
  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw not_invertible("0 has no inverse mod " + std::to_string(p_));
    return pow(a, p_ - 2);
  }

  std::uint64_t half() const { return (p_ + 1) / 2; }

  friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
  MulBackend backend_;
  std::uint8_t mersenne_s_ = 0;
};

inline void require_same_prime(const Prime& a, const Prime& b) {
  if (!(a == b)) {
    throw context_mismatch("operands bound to different primes " + std::to_string(a.value()) + " and " +
                           std::to_string(b.value()));
  }
}

/// An element of GF(p) in canonical form, bound to its prime.
class Residue {
 public:
  Residue(const Prime& prime, std::uint64_t value) : prime_(prime), value_(value) {
    if (value >= prime.value()) {
      throw domain_error("residue " + std::to_string(value) + " not canonical mod " + std::to_string(prime.value()));
    }
  }

  std::uint64_t value() const { return value_; }
  const Prime& prime() const { return prime_; }

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.prime_ == b.prime_ && a.value_ == b.value_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Residue& r) { return os << r.value_; }

 private:
  Prime prime_;
  std::uint64_t value_;
};

/// x mod p mapped into [0, p); negative inputs map to their positive representative.
inline Residue normalize(std::int64_t x, const Prime& prime) {
  const auto p = static_cast<std::int64_t>(prime.value());
  std::int64_t r = x % p;
  if (r < 0) r += p;
  return Residue(prime, static_cast<std::uint64_t>(r));
}

inline Residue add(const Residue& a, const Residue& b) {
  require_same_prime(a.prime(), b.prime());
  return Residue(a.prime(), a.prime().add(a.value(), b.value()));
}

inline Residue sub(const Residue& a, const Residue& b) {
  require_same_prime(a.prime(), b.prime());
  return Residue(a.prime(), a.prime().sub(a.value(), b.value()));
}

inline Residue mul(const Residue& a, const Residue& b) {
  require_same_prime(a.prime(), b.prime());
  return Residue(a.prime(), a.prime().mul(a.value(), b.value()));
}

inline Residue operator+(const Residue& a, const Residue& b) { return add(a, b); }
inline Residue operator-(const Residue& a, const Residue& b) { return sub(a, b); }
inline Residue operator*(const Residue& a, const Residue& b) { return mul(a, b); }

inline Residue inv(const Residue& a) { return Residue(a.prime(), a.prime().inv(a.value())); }

inline Residue pow(const Residue& a, std::uint64_t e) { return Residue(a.prime(), a.prime().pow(a.value(), e)); }

/// Euler's criterion. Zero is neither residue nor nonresidue here.
inline bool is_quadratic_residue(const Residue& a) {
  if (a.value() == 0) throw domain_error("quadratic character of 0 is undefined");
  return a.prime().pow(a.value(), (a.prime().value() - 1) / 2) == 1;
}

}  // namespace ffdct
