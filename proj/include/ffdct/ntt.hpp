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

// Radix-2 cyclic number-theoretic transform over GI(p).

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ffdct/errors.hpp"
#include "ffdct/gaussian.hpp"
#include "ffdct/prime_field.hpp"

namespace ffdct {

/// Multiplication counters filled in by the transform kernels.
struct OpCount {
  std::uint64_t gi_mul = 0;  ///< products in GI(p)
  std::uint64_t gf_mul = 0;  ///< products in GF(p)
};

class NttPlan {
 public:
  /// root must have exact order L, L a power of two.
  NttPlan(const GaussInt& root, std::size_t length) : prime_(root.prime()), root_(root.raw()), length_(length) {
    if (length == 0 || !std::has_single_bit(length)) {
      throw length_mismatch("NTT length " + std::to_string(length) + " is not a power of two");
    }
    const Prime& p = prime_;
    if (detail::gi_pow(p, root_, length) != GaussRaw{1, 0} ||
        (length > 1 && detail::gi_pow(p, root_, length / 2) != GaussRaw{p.value() - 1, 0})) {
      throw invalid_lambda("NTT root is not a primitive " + std::to_string(length) + "-th root of unity");
    }
    root_inv_ = detail::gi_inv(p, root_);
    length_inv_ = p.inv(static_cast<std::uint64_t>(length) % p.value());

    twiddles_.resize(length / 2);
    inv_twiddles_.resize(length / 2);
    GaussRaw w{1, 0}, wi{1, 0};
    for (std::size_t j = 0; j < length / 2; ++j) {
      twiddles_[j] = w;
      inv_twiddles_[j] = wi;
      w = detail::gi_mul(p, w, root_);
      wi = detail::gi_mul(p, wi, root_inv_);
    }

    const int bits = std::countr_zero(length);
    bit_reversal_.resize(length);
    for (std::size_t i = 0; i < length; ++i) {
      std::size_t r = 0;
      for (int b = 0; b < bits; ++b) r |= ((i >> b) & 1) << (bits - 1 - b);
      bit_reversal_[i] = r;
    }
  }

  const Prime& prime() const { return prime_; }
  std::size_t length() const { return length_; }
  GaussInt root() const { return GaussInt(prime_, root_); }
  GaussInt root_inv() const { return GaussInt(prime_, root_inv_); }
  Residue length_inv() const { return Residue(prime_, length_inv_); }
  std::span<const std::size_t> bit_reversal() const { return bit_reversal_; }

  /// In place: X_m = sum_n x_n root^{nm}.
  void forward_in_place(std::span<GaussRaw> x, OpCount* count = nullptr) const {
    run(x, twiddles_, count);
  }

  /// In place inverse including the 1/L scaling.
  void inverse_in_place(std::span<GaussRaw> x, OpCount* count = nullptr) const {
    run(x, inv_twiddles_, count);
    for (auto& v : x) v = detail::gi_scale(prime_, v, length_inv_);
    if (count) count->gf_mul += 2 * length_;
  }

 private:
  // Iterative decimation in time: bit-reverse, then log2 L butterfly passes.
  void run(std::span<GaussRaw> x, const std::vector<GaussRaw>& tw, OpCount* count) const {
    if (x.size() != length_) {
      throw length_mismatch("NTT input has length " + std::to_string(x.size()) + ", plan expects " +
                            std::to_string(length_));
    }
    for (std::size_t i = 0; i < length_; ++i) {
      if (i < bit_reversal_[i]) std::swap(x[i], x[bit_reversal_[i]]);
    }
    const Prime& p = prime_;
    for (std::size_t half = 1; half < length_; half <<= 1) {
      const std::size_t stride = length_ / (2 * half);
      for (std::size_t start = 0; start < length_; start += 2 * half) {
        for (std::size_t j = 0; j < half; ++j) {
          const GaussRaw u = x[start + j];
          const GaussRaw v = detail::gi_mul(p, x[start + j + half], tw[j * stride]);
          x[start + j] = detail::gi_add(p, u, v);
          x[start + j + half] = detail::gi_sub(p, u, v);
        }
      }
      if (count) count->gi_mul += length_ / 2;
    }
  }

  Prime prime_;
  GaussRaw root_;
  GaussRaw root_inv_;
  std::size_t length_;
  std::uint64_t length_inv_ = 1;
  std::vector<GaussRaw> twiddles_;
  std::vector<GaussRaw> inv_twiddles_;
  std::vector<std::size_t> bit_reversal_;
};

/// Out-of-place convenience wrappers over GaussInt sequences.
inline std::vector<GaussInt> ntt(const NttPlan& plan, std::span<const GaussInt> x) {
  if (x.size() != plan.length()) {
    throw length_mismatch("NTT input has length " + std::to_string(x.size()) + ", plan expects " +
                          std::to_string(plan.length()));
  }
  std::vector<GaussRaw> buf;
  buf.reserve(x.size());
  for (const auto& v : x) {
    require_same_prime(v.prime(), plan.prime());
    buf.push_back(v.raw());
  }
  plan.forward_in_place(buf);
  std::vector<GaussInt> out;
  out.reserve(buf.size());
  for (const auto& v : buf) out.emplace_back(plan.prime(), v);
  return out;
}

inline std::vector<GaussInt> intt(const NttPlan& plan, std::span<const GaussInt> x) {
  if (x.size() != plan.length()) {
    throw length_mismatch("NTT input has length " + std::to_string(x.size()) + ", plan expects " +
                          std::to_string(plan.length()));
  }
  std::vector<GaussRaw> buf;
  buf.reserve(x.size());
  for (const auto& v : x) {
    require_same_prime(v.prime(), plan.prime());
    buf.push_back(v.raw());
  }
  plan.inverse_in_place(buf);
  std::vector<GaussInt> out;
  out.reserve(buf.size());
  for (const auto& v : buf) out.emplace_back(plan.prime(), v);
  return out;
}

}  // namespace ffdct
