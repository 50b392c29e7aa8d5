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

// k-trigonometric functions over GF(p).
//
// With zeta of order 2N,
//
//   cos_k(i) = 1/2 (zeta^{ik} + zeta^{-ik})
//   sin_k(i) = 1/2 (zeta^{ik} - zeta^{-ik}) / j
//
// The cosine kernel of the transform needs half-integer arcs (2i + 1)/2.
// Those are realized with a square root lambda of zeta (lambda^2 = zeta,
// order 4N): cos_half(k, i) = 1/2 (lambda^{k(2i+1)} + lambda^{-k(2i+1)}).
// A unimodular lambda makes every value land in GF(p).

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ffdct/errors.hpp"
#include "ffdct/gaussian.hpp"
#include "ffdct/prime_field.hpp"

namespace ffdct {

class TrigContext {
 public:
  /// Validates lambda (unimodular, order exactly 4N, 4N | p + 1) and builds
  /// the power and cos_half tables eagerly.
  TrigContext(const GaussInt& lambda, std::size_t n) : prime_(lambda.prime()), lambda_(lambda), n_(n) {
    const std::uint64_t p = prime_.value();
    if (n == 0 || (p + 1) % (4 * static_cast<std::uint64_t>(n)) != 0) {
      throw unsupported_length("blocklength " + std::to_string(n) + " unsupported over GF(" + std::to_string(p) +
                               "): 4N must divide p + 1 = " + std::to_string(p + 1));
    }
    if (!is_unimodular(lambda)) {
      throw invalid_lambda("kernel element " + to_string(lambda) + " is not unimodular");
    }
    const std::uint64_t period = 4 * static_cast<std::uint64_t>(n);
    if (order(lambda).value != period) {
      throw invalid_lambda("kernel element " + to_string(lambda) + " has order " +
                           std::to_string(order(lambda).value) + ", need " + std::to_string(period));
    }

    auto tables = std::make_shared<Tables>();
    tables->lambda_powers.resize(period);
    GaussRaw acc{1, 0};
    for (std::uint64_t m = 0; m < period; ++m) {
      tables->lambda_powers[m] = acc;
      acc = detail::gi_mul(prime_, acc, lambda.raw());
    }
    tables_ = tables;
    zeta_ = tables->lambda_powers[2];

    tables->cos_half.resize(n * n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        tables->cos_half[k * n + i] = real_part_of_sum(static_cast<std::uint64_t>(k) * (2 * i + 1) % period);
      }
    }
  }

  const Prime& prime() const { return prime_; }
  const GaussInt& lambda() const { return lambda_; }
  GaussInt zeta() const { return GaussInt(prime_, zeta_); }
  std::size_t blocklength() const { return n_; }
  Residue half() const { return Residue(prime_, prime_.half()); }

  /// 1/2 (zeta^{ik} + zeta^{-ik}); indices are reduced mod 2N.
  Residue cos_k(std::int64_t k, std::int64_t i) const {
    return Residue(prime_, real_part_of_sum(2 * reduce_product(k, i, 2 * n_)));
  }

  /// 1/2 (zeta^{ik} - zeta^{-ik}) / j; indices are reduced mod 2N.
  Residue sin_k(std::int64_t k, std::int64_t i) const {
    const std::uint64_t m = 2 * reduce_product(k, i, 2 * n_);
    const GaussRaw d = detail::gi_sub(prime_, lambda_power(m), lambda_power(period() - m));
    if (d.re != 0) throw internal_error("sin_k intermediate has nonzero real part; kernel is not unimodular");
    // (0 + j*b) / j = b
    return Residue(prime_, prime_.mul(prime_.half(), d.im));
  }

  /// cos_k((2i + 1)/2) computed from lambda powers; arbitrary integer k, i.
  Residue cos_half(std::int64_t k, std::int64_t i) const {
    const std::uint64_t four_n = period();
    const auto odd = static_cast<std::int64_t>(2 * static_cast<__int128>(i) % static_cast<__int128>(four_n)) + 1;
    return Residue(prime_, real_part_of_sum(reduce_product(k, odd, four_n)));
  }

  /// Cached cos_half(k, i) for k, i in [0, N).
  std::uint64_t cos_half_value(std::size_t k, std::size_t i) const { return tables_->cos_half[k * n_ + i]; }
  std::span<const std::uint64_t> cos_half_row(std::size_t k) const {
    return std::span<const std::uint64_t>(tables_->cos_half).subspan(k * n_, n_);
  }

  /// lambda^m for m in [0, 4N).
  GaussRaw lambda_power(std::uint64_t m) const { return tables_->lambda_powers[m % period()]; }

  /// Copy whose cached cos_half(k, i) is overwritten with value. Fault
  /// injection hook for exercising the self-test's negative path.
  TrigContext with_corrupted_entry(std::size_t k, std::size_t i, std::uint64_t value) const {
    TrigContext copy = *this;
    auto tables = std::make_shared<Tables>(*tables_);
    tables->cos_half.at(k * n_ + i) = value % prime_.value();
    copy.tables_ = tables;
    return copy;
  }

 private:
  struct Tables {
    std::vector<GaussRaw> lambda_powers;
    std::vector<std::uint64_t> cos_half;
  };

  static std::string to_string(const GaussInt& x) {
    return std::to_string(x.raw().re) + "+j" + std::to_string(x.raw().im);
  }

  std::uint64_t period() const { return 4 * static_cast<std::uint64_t>(n_); }

  // k * i mod modulus for arbitrary signed k, i.
  static std::uint64_t reduce_product(std::int64_t k, std::int64_t i, std::uint64_t modulus) {
    const auto m = static_cast<__int128>(modulus);
    __int128 r = (static_cast<__int128>(k) % m) * (static_cast<__int128>(i) % m) % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
  }

  // 1/2 (lambda^m + lambda^{-m}); lambda^{-m} = lambda^{4N - m}. The sum of a
  // unimodular power and its inverse is its conjugate sum, so the imaginary
  // part vanishes.
  std::uint64_t real_part_of_sum(std::uint64_t m) const {
    const GaussRaw s = detail::gi_add(prime_, lambda_power(m), lambda_power(period() - m));
    if (s.im != 0) throw internal_error("cosine intermediate has nonzero imaginary part; kernel is not unimodular");
    return prime_.mul(prime_.half(), s.re);
  }

  Prime prime_;
  GaussInt lambda_;
  GaussRaw zeta_;
  std::size_t n_;
  std::shared_ptr<const Tables> tables_;
};

/// Sum of cos_k(i) over k = 1 .. N-1. Equals N - 1 at i = 0 (mod 2N), -1 at
/// other even i, and 0 at odd i.
inline Residue kcos_lemma_sum(const TrigContext& ctx, std::int64_t i) {
  const Prime& p = ctx.prime();
  std::uint64_t acc = 0;
  for (std::size_t k = 1; k < ctx.blocklength(); ++k) {
    acc = p.add(acc, ctx.cos_k(static_cast<std::int64_t>(k), i).value());
  }
  return Residue(p, acc);
}

}  // namespace ffdct
