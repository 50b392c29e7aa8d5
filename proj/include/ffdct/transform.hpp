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

// The finite field discrete cosine transform pair.
//
//   forward:  C_k = sum_i 2 f_i cos_half(k, i)
//   inverse:  f_i = N^{-1} sum_k beta_k C_k cos_half(k, i)
//
// with beta_0 = 2^{-1} mod p and beta_k = 1 otherwise. Both directions are
// plain matrix-vector products against the cached cos_half table.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ffdct/errors.hpp"
#include "ffdct/gaussian.hpp"
#include "ffdct/ntt.hpp"
#include "ffdct/prime_field.hpp"
#include "ffdct/trig.hpp"

namespace ffdct {

/// Length-N sequence of canonical residues of the plan's prime.
using Signal = std::vector<std::uint64_t>;
using Spectrum = std::vector<std::uint64_t>;

enum class Strategy : std::uint8_t {
  automatic,  ///< fast when N is a power of two, naive otherwise
  naive,
  fast,
};

/// Dense row-major matrix of canonical residues.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  std::uint64_t& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::uint64_t operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

inline Matrix multiply(const Matrix& a, const Matrix& b, const Prime& p) {
  if (a.cols != b.rows) throw length_mismatch("matrix dimensions do not agree");
  Matrix out(a.rows, b.cols);
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t c = 0; c < b.cols; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < a.cols; ++k) acc = p.add(acc, p.mul(a(r, k), b(k, c)));
      out(r, c) = acc;
    }
  }
  return out;
}

/// Validated transform parameters plus precomputed tables. Immutable; copies
/// share the underlying tables.
class TransformPlan {
 public:
  /// Canonical lambda (lexicographically smallest of order 4N) when omitted.
  static TransformPlan create(const Prime& prime, std::size_t n, std::optional<GaussInt> lambda = std::nullopt,
                              Strategy strategy = Strategy::automatic) {
    const std::uint64_t p = prime.value();
    if (n == 0 || (p + 1) % (4 * static_cast<std::uint64_t>(n)) != 0) {
      throw unsupported_length("blocklength " + std::to_string(n) + " unsupported over GF(" + std::to_string(p) +
                               "): 4N must divide p + 1 = " + std::to_string(p + 1));
    }
    if (lambda) {
      require_same_prime(lambda->prime(), prime);
      // Keep the caller's multiplication backend on every table built below.
      lambda = GaussInt(prime, lambda->raw());
    } else {
      lambda = find_unimodular_of_order(prime, 4 * static_cast<std::uint64_t>(n));
    }
    return TransformPlan(TrigContext(*lambda, n), strategy);
  }

  explicit TransformPlan(TrigContext ctx, Strategy strategy = Strategy::automatic) : ctx_(std::move(ctx)) {
    const Prime& p = ctx_.prime();
    const std::size_t n = ctx_.blocklength();
    n_inv_ = p.inv(static_cast<std::uint64_t>(n) % p.value());
    beta0_ = p.half();
    const bool pow2 = std::has_single_bit(n);
    if (strategy == Strategy::fast && !pow2) {
      throw fast_path_unsupported("fast strategy needs a power-of-two blocklength, got " + std::to_string(n));
    }
    strategy_ = strategy == Strategy::automatic ? (pow2 ? Strategy::fast : Strategy::naive) : strategy;
    if (pow2) ntt_ = std::make_shared<const NttPlan>(ctx_.zeta(), 2 * n);
  }

  const TrigContext& context() const { return ctx_; }
  const Prime& prime() const { return ctx_.prime(); }
  std::size_t blocklength() const { return ctx_.blocklength(); }
  Residue n_inv() const { return Residue(prime(), n_inv_); }
  Residue beta0() const { return Residue(prime(), beta0_); }
  std::uint64_t beta(std::size_t k) const { return k == 0 ? beta0_ : 1; }
  Strategy strategy() const { return strategy_; }
  bool fast_supported() const { return ntt_ != nullptr; }

  /// The length-2N cyclic transform with root zeta; null unless N is a power of two.
  const NttPlan* ntt_plan() const { return ntt_.get(); }

 private:
  TrigContext ctx_;
  std::uint64_t n_inv_ = 1;
  std::uint64_t beta0_ = 1;
  Strategy strategy_ = Strategy::naive;
  std::shared_ptr<const NttPlan> ntt_;
};

namespace detail {

inline void check_input(const TransformPlan& plan, std::span<const std::uint64_t> v, const char* what) {
  if (v.size() != plan.blocklength()) {
    throw length_mismatch(std::string(what) + " has length " + std::to_string(v.size()) + ", plan expects " +
                          std::to_string(plan.blocklength()));
  }
  const std::uint64_t p = plan.prime().value();
  for (std::uint64_t x : v) {
    if (x >= p) throw domain_error(std::string(what) + " value " + std::to_string(x) + " is not a residue mod " + std::to_string(p));
  }
}

// Largest number of products of canonical residues that can be summed in an
// accumulator of the given width without overflow.
inline std::uint64_t safe_terms_64(const Prime& p) {
  const u128 sq = static_cast<u128>(p.value() - 1) * (p.value() - 1);
  if (sq >> 64) return 0;
  return static_cast<std::uint64_t>(~std::uint64_t{0} / static_cast<std::uint64_t>(sq));
}

inline std::uint64_t safe_terms_128(const Prime& p) {
  const u128 sq = static_cast<u128>(p.value() - 1) * (p.value() - 1);
  const u128 terms = ~u128{0} / sq;
  return terms > ~std::uint64_t{0} ? ~std::uint64_t{0} : static_cast<std::uint64_t>(terms);
}

// sum_i a_i b_i mod p with delayed reduction.
inline std::uint64_t dot_mod(const Prime& p, std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  const std::size_t n = a.size();
  if (safe_terms_64(p) >= n) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc % p.value();
  }
  const std::uint64_t chunk = safe_terms_128(p) - 1;
  u128 acc = 0;
  std::uint64_t pending = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += static_cast<u128>(a[i]) * b[i];
    if (++pending == chunk) {
      acc = p.reduce(acc);
      pending = 1;
    }
  }
  return p.reduce(acc);
}

// out_i = sum_k w_k row_k[i] mod p, rows read in order.
inline std::vector<std::uint64_t> accumulate_rows(const TrigContext& ctx, std::span<const std::uint64_t> weights) {
  const Prime& p = ctx.prime();
  const std::size_t n = ctx.blocklength();
  std::vector<std::uint64_t> out(n, 0);
  if (safe_terms_64(p) >= n) {
    std::vector<std::uint64_t> acc(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t w = weights[k];
      const auto row = ctx.cos_half_row(k);
      for (std::size_t i = 0; i < n; ++i) acc[i] += w * row[i];
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = acc[i] % p.value();
    return out;
  }
  const std::uint64_t chunk = safe_terms_128(p) - 1;
  std::vector<u128> acc(n, 0);
  std::uint64_t pending = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t w = weights[k];
    const auto row = ctx.cos_half_row(k);
    for (std::size_t i = 0; i < n; ++i) acc[i] += static_cast<u128>(w) * row[i];
    if (++pending == chunk) {
      for (auto& a : acc) a = p.reduce(a);
      pending = 1;
    }
  }
  for (std::size_t i = 0; i < n; ++i) out[i] = p.reduce(acc[i]);
  return out;
}

}  // namespace detail

/// Direct O(N^2) forward transform.
inline Spectrum forward_naive(const TransformPlan& plan, std::span<const std::uint64_t> f, OpCount* count = nullptr) {
  detail::check_input(plan, f, "signal");
  const Prime& p = plan.prime();
  const std::size_t n = plan.blocklength();
  Spectrum c(n);
  for (std::size_t k = 0; k < n; ++k) {
    c[k] = p.mul(2, detail::dot_mod(p, plan.context().cos_half_row(k), f));
  }
  if (count) count->gf_mul += static_cast<std::uint64_t>(n) * n + n;
  return c;
}

/// Direct O(N^2) inverse transform.
inline Signal inverse_naive(const TransformPlan& plan, std::span<const std::uint64_t> c, OpCount* count = nullptr) {
  detail::check_input(plan, c, "spectrum");
  const Prime& p = plan.prime();
  const std::size_t n = plan.blocklength();
  std::vector<std::uint64_t> weighted(c.begin(), c.end());
  weighted[0] = p.mul(weighted[0], plan.beta0().value());
  Signal f = detail::accumulate_rows(plan.context(), weighted);
  const std::uint64_t n_inv = plan.n_inv().value();
  for (auto& v : f) v = p.mul(v, n_inv);
  if (count) count->gf_mul += static_cast<std::uint64_t>(n) * n + n + 1;
  return f;
}

/// Row k, column i holds 2 cos_half(k, i). Row 0 is all 2s.
inline Matrix forward_matrix(const TransformPlan& plan) {
  const Prime& p = plan.prime();
  const std::size_t n = plan.blocklength();
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) m(k, i) = p.add(plan.context().cos_half_value(k, i), plan.context().cos_half_value(k, i));
  }
  return m;
}

/// Row i, column k holds N^{-1} beta_k cos_half(k, i).
inline Matrix inverse_matrix(const TransformPlan& plan) {
  const Prime& p = plan.prime();
  const std::size_t n = plan.blocklength();
  const std::uint64_t n_inv = plan.n_inv().value();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      m(i, k) = p.mul(p.mul(n_inv, plan.beta(k)), plan.context().cos_half_value(k, i));
    }
  }
  return m;
}

/// Inverse-matrix entry (i, k) obtained from forward-matrix entry (k, i):
/// m^{-1}_{i,k} = beta_k (2N)^{-1} m_{k,i}.
inline Residue matrix_element_relation(const TransformPlan& plan, std::size_t i, std::size_t k) {
  const Prime& p = plan.prime();
  const std::size_t n = plan.blocklength();
  if (i >= n || k >= n) throw length_mismatch("matrix index out of range");
  const std::uint64_t forward_entry = p.add(plan.context().cos_half_value(k, i), plan.context().cos_half_value(k, i));
  const std::uint64_t two_n_inv = p.inv(2 * static_cast<std::uint64_t>(n) % p.value());
  return Residue(p, p.mul(p.mul(plan.beta(k), two_n_inv), forward_entry));
}

}  // namespace ffdct
