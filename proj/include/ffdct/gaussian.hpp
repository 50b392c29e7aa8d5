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

// Gaussian integers over GF(p): GI(p) = {a + jb}, j^2 = -1, which is a field
// isomorphic to GF(p^2) because p = 3 (mod 4). The unimodular elements
// (a^2 + b^2 = 1) form a cyclic subgroup of order p + 1.

#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ffdct/errors.hpp"
#include "ffdct/number_theory.hpp"
#include "ffdct/prime_field.hpp"

namespace ffdct {

/// Unbound pair of canonical residues. Used inside kernels where the prime
/// is known from the surrounding plan.
struct GaussRaw {
  std::uint64_t re = 0;
  std::uint64_t im = 0;
  friend bool operator==(const GaussRaw&, const GaussRaw&) = default;
};

namespace detail {

inline GaussRaw gi_add(const Prime& p, GaussRaw x, GaussRaw y) { return {p.add(x.re, y.re), p.add(x.im, y.im)}; }
inline GaussRaw gi_sub(const Prime& p, GaussRaw x, GaussRaw y) { return {p.sub(x.re, y.re), p.sub(x.im, y.im)}; }

// (a + jb)(c + jd) = (ac - bd) + j(ad + bc). The imaginary part is summed
// in 128 bits before a single reduction.
inline GaussRaw gi_mul(const Prime& p, GaussRaw x, GaussRaw y) {
  const std::uint64_t ac = p.mul(x.re, y.re);
  const std::uint64_t bd = p.mul(x.im, y.im);
  const u128 cross = static_cast<u128>(x.re) * y.im + static_cast<u128>(x.im) * y.re;
  return {p.sub(ac, bd), p.reduce(cross)};
}

inline GaussRaw gi_scale(const Prime& p, GaussRaw x, std::uint64_t s) { return {p.mul(x.re, s), p.mul(x.im, s)}; }
inline GaussRaw gi_conj(const Prime& p, GaussRaw x) { return {x.re, p.neg(x.im)}; }

inline std::uint64_t gi_norm(const Prime& p, GaussRaw x) {
  return p.reduce(static_cast<u128>(x.re) * x.re + static_cast<u128>(x.im) * x.im);
}

inline GaussRaw gi_pow(const Prime& p, GaussRaw x, std::uint64_t e) {
  GaussRaw r{1, 0};
  while (e != 0) {
    if (e & 1) r = gi_mul(p, r, x);
    x = gi_mul(p, x, x);
    e >>= 1;
  }
  return r;
}

inline GaussRaw gi_inv(const Prime& p, GaussRaw x) {
  const std::uint64_t n = gi_norm(p, x);
  if (n == 0) throw not_invertible("0 + j0 has no inverse in GI(" + std::to_string(p.value()) + ")");
  return gi_scale(p, gi_conj(p, x), p.inv(n));
}

// x has order exactly t, given t divides the order of the group x lives in.
inline bool has_exact_order(const Prime& p, GaussRaw x, std::uint64_t t,
                            const std::map<std::uint64_t, unsigned>& t_factors) {
  if (gi_pow(p, x, t) != GaussRaw{1, 0}) return false;
  for (const auto& [q, e] : t_factors) {
    if (gi_pow(p, x, t / q) == GaussRaw{1, 0}) return false;
  }
  return true;
}

}  // namespace detail

/// An element re + j*im of GI(p), bound to its prime.
class GaussInt {
 public:
  GaussInt(const Prime& prime, std::uint64_t re, std::uint64_t im) : prime_(prime), v_{re, im} {
    if (re >= prime.value() || im >= prime.value()) {
      throw domain_error("Gaussian integer components must lie in [0, " + std::to_string(prime.value()) + ")");
    }
  }
  GaussInt(const Prime& prime, GaussRaw v) : GaussInt(prime, v.re, v.im) {}

  static GaussInt one(const Prime& prime) { return GaussInt(prime, 1, 0); }

  Residue re() const { return Residue(prime_, v_.re); }
  Residue im() const { return Residue(prime_, v_.im); }
  const GaussRaw& raw() const { return v_; }
  const Prime& prime() const { return prime_; }
  bool is_zero() const { return v_.re == 0 && v_.im == 0; }

  friend bool operator==(const GaussInt& a, const GaussInt& b) { return a.prime_ == b.prime_ && a.v_ == b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const GaussInt& x) {
    return os << x.v_.re << "+j" << x.v_.im;
  }

 private:
  Prime prime_;
  GaussRaw v_;
};

/// Multiplicative order of an element of GI(p).
struct ElementOrder {
  std::uint64_t value = 1;
  friend auto operator<=>(const ElementOrder&, const ElementOrder&) = default;
};

inline GaussInt gi_add(const GaussInt& x, const GaussInt& y) {
  require_same_prime(x.prime(), y.prime());
  return GaussInt(x.prime(), detail::gi_add(x.prime(), x.raw(), y.raw()));
}

inline GaussInt gi_sub(const GaussInt& x, const GaussInt& y) {
  require_same_prime(x.prime(), y.prime());
  return GaussInt(x.prime(), detail::gi_sub(x.prime(), x.raw(), y.raw()));
}

inline GaussInt gi_mul(const GaussInt& x, const GaussInt& y) {
  require_same_prime(x.prime(), y.prime());
  return GaussInt(x.prime(), detail::gi_mul(x.prime(), x.raw(), y.raw()));
}

inline GaussInt gi_conj(const GaussInt& x) { return GaussInt(x.prime(), detail::gi_conj(x.prime(), x.raw())); }

inline Residue gi_norm(const GaussInt& x) { return Residue(x.prime(), detail::gi_norm(x.prime(), x.raw())); }

inline GaussInt gi_inv(const GaussInt& x) { return GaussInt(x.prime(), detail::gi_inv(x.prime(), x.raw())); }

/// Square-and-multiply; negative exponents go through gi_inv.
inline GaussInt gi_pow(const GaussInt& x, std::int64_t e) {
  GaussRaw base = x.raw();
  std::uint64_t mag = 0;
  if (e < 0) {
    base = detail::gi_inv(x.prime(), base);
    mag = static_cast<std::uint64_t>(-(e + 1)) + 1;
  } else {
    mag = static_cast<std::uint64_t>(e);
  }
  return GaussInt(x.prime(), detail::gi_pow(x.prime(), base, mag));
}

inline bool is_unimodular(const GaussInt& x) { return detail::gi_norm(x.prime(), x.raw()) == 1; }

/// Smallest t >= 1 with x^t = 1. Strips prime factors from the order of the
/// enclosing group: p + 1 for unimodular x, p^2 - 1 otherwise. The second
/// case needs p^2 - 1 to fit in 64 bits.
inline ElementOrder order(const GaussInt& x) {
  if (x.is_zero()) throw not_invertible("0 + j0 has no multiplicative order");
  const Prime& prime = x.prime();
  const std::uint64_t p = prime.value();
  std::uint64_t group_order = 0;
  if (is_unimodular(x)) {
    group_order = p + 1;
  } else {
    if (p > std::numeric_limits<std::uint32_t>::max()) {
      throw domain_error("order of a non-unimodular element needs p^2 - 1 < 2^64");
    }
    group_order = p * p - 1;
  }
  std::uint64_t t = group_order;
  for (const auto& [q, e] : factorize(group_order)) {
    for (unsigned k = 0; k < e; ++k) {
      if (detail::gi_pow(prime, x.raw(), t / q) != GaussRaw{1, 0}) break;
      t /= q;
    }
  }
  return ElementOrder{t};
}

namespace detail {

// Square root of r in GF(p) for p = 3 (mod 4), if one exists.
inline std::optional<std::uint64_t> sqrt_mod(const Prime& p, std::uint64_t r) {
  if (r == 0) return 0;
  const std::uint64_t s = p.pow(r, (p.value() + 1) / 4);
  if (p.mul(s, s) != r) return std::nullopt;
  return s;
}

// Visits the unimodular elements in lexicographic (re, im) order until
// visit returns true. Each re contributes at most two elements.
template <typename Visit>
std::optional<GaussRaw> scan_unimodular(const Prime& p, Visit&& visit) {
  for (std::uint64_t a = 0; a < p.value(); ++a) {
    const std::uint64_t rhs = p.sub(1, p.mul(a, a));
    auto b = sqrt_mod(p, rhs);
    if (!b) continue;
    std::uint64_t lo = *b, hi = p.neg(*b);
    if (lo > hi) std::swap(lo, hi);
    if (visit(GaussRaw{a, lo})) return GaussRaw{a, lo};
    if (hi != lo && visit(GaussRaw{a, hi})) return GaussRaw{a, hi};
  }
  return std::nullopt;
}

}  // namespace detail

/// Lexicographically smallest (re, then im) unimodular element of exact
/// order t. Throws unsupported_order unless t divides p + 1.
///
/// Small t: build one element h of order t, then take the minimum over the
/// phi(t) powers h^k with gcd(k, t) = 1, which are exactly the elements of
/// order t. Large t: scan candidates in lexicographic order.
inline GaussInt find_unimodular_of_order(const Prime& prime, std::uint64_t t) {
  const std::uint64_t p = prime.value();
  if (t == 0 || (p + 1) % t != 0) {
    throw unsupported_order("order " + std::to_string(t) + " does not divide p + 1 = " + std::to_string(p + 1));
  }
  const auto t_factors = factorize(t);
  constexpr std::uint64_t kEnumerateLimit = std::uint64_t{1} << 20;

  std::optional<GaussRaw> found;
  if (t <= kEnumerateLimit) {
    const std::uint64_t cofactor = (p + 1) / t;
    GaussRaw h{};
    detail::scan_unimodular(prime, [&](GaussRaw x) {
      h = detail::gi_pow(prime, x, cofactor);
      return detail::has_exact_order(prime, h, t, t_factors);
    });
    GaussRaw power{1, 0};
    for (std::uint64_t k = 0; k < t; ++k) {
      if (std::gcd(k, t) == 1) {
        if (!found || power.re < found->re || (power.re == found->re && power.im < found->im)) found = power;
      }
      power = detail::gi_mul(prime, power, h);
    }
  } else {
    found = detail::scan_unimodular(prime, [&](GaussRaw x) { return detail::has_exact_order(prime, x, t, t_factors); });
  }
  if (!found) throw internal_error("no unimodular element of order " + std::to_string(t) + " found");
  return GaussInt(prime, *found);
}

/// All a + jb with a^2 + b^2 = 1, by exhaustive double loop. Limited to p <= 10^4.
inline std::vector<GaussInt> enumerate_unimodular(const Prime& prime) {
  const std::uint64_t p = prime.value();
  if (p > 10'000) throw domain_error("enumerate_unimodular limited to p <= 10^4");
  std::vector<GaussInt> out;
  out.reserve(p + 1);
  for (std::uint64_t a = 0; a < p; ++a) {
    const std::uint64_t a2 = prime.mul(a, a);
    for (std::uint64_t b = 0; b < p; ++b) {
      if (prime.add(a2, prime.mul(b, b)) == 1) out.emplace_back(prime, a, b);
    }
  }
  return out;
}

}  // namespace ffdct
