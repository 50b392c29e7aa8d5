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

// O(N log N) evaluation of the transform pair for power-of-two N.
//
// Expanding the cosine kernel with lambda^2 = zeta gives
//
//   C_k = sum_i f_i (lambda^{k(2i+1)} + lambda^{-k(2i+1)})
//       = lambda^k X_k + lambda^{-k} X_{2N-k},
//
// where X is the length-2N cyclic transform (root zeta) of f zero-padded to
// 2N. The inverse runs the same transform on Y_k = beta_k C_k lambda^k and
// keeps the real part: because lambda is unimodular and C lies in GF(p),
// the lambda^{-k(2i+1)} half of the kernel contributes the conjugate.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "ffdct/errors.hpp"
#include "ffdct/gaussian.hpp"
#include "ffdct/ntt.hpp"
#include "ffdct/transform.hpp"

namespace ffdct {

namespace detail {

inline const NttPlan& require_fast(const TransformPlan& plan) {
  if (!plan.fast_supported()) {
    throw fast_path_unsupported("fast path needs a power-of-two blocklength, got " +
                                std::to_string(plan.blocklength()));
  }
  return *plan.ntt_plan();
}

}  // namespace detail

inline Spectrum fast_forward(const TransformPlan& plan, std::span<const std::uint64_t> f, OpCount* count = nullptr) {
  const NttPlan& ntt = detail::require_fast(plan);
  detail::check_input(plan, f, "signal");
  const Prime& p = plan.prime();
  const TrigContext& ctx = plan.context();
  const std::size_t n = plan.blocklength();
  const std::size_t two_n = 2 * n;
  const std::uint64_t four_n = 4 * static_cast<std::uint64_t>(n);

  std::vector<GaussRaw> x(two_n);
  for (std::size_t i = 0; i < n; ++i) x[i] = GaussRaw{f[i], 0};
  ntt.forward_in_place(x, count);

  Spectrum c(n);
  for (std::size_t k = 0; k < n; ++k) {
    const GaussRaw up = detail::gi_mul(p, ctx.lambda_power(k), x[k]);
    const GaussRaw down = detail::gi_mul(p, ctx.lambda_power((four_n - k) % four_n), x[(two_n - k) % two_n]);
    const GaussRaw sum = detail::gi_add(p, up, down);
    if (sum.im != 0) throw internal_error("fast_forward produced a non-real spectrum component");
    c[k] = sum.re;
  }
  if (count) count->gi_mul += 2 * n;
  return c;
}

inline Signal fast_inverse(const TransformPlan& plan, std::span<const std::uint64_t> c, OpCount* count = nullptr) {
  const NttPlan& ntt = detail::require_fast(plan);
  detail::check_input(plan, c, "spectrum");
  const Prime& p = plan.prime();
  const TrigContext& ctx = plan.context();
  const std::size_t n = plan.blocklength();

  std::vector<GaussRaw> y(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    y[k] = detail::gi_scale(p, ctx.lambda_power(k), p.mul(plan.beta(k), c[k]));
  }
  if (count) count->gf_mul += 3 * n;
  ntt.forward_in_place(y, count);

  const std::uint64_t n_inv = plan.n_inv().value();
  Signal f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = p.mul(n_inv, y[i].re);
  if (count) count->gf_mul += n;
  return f;
}

/// Dispatch on the plan's resolved strategy.
inline Spectrum forward(const TransformPlan& plan, std::span<const std::uint64_t> f, OpCount* count = nullptr) {
  return plan.strategy() == Strategy::fast ? fast_forward(plan, f, count) : forward_naive(plan, f, count);
}

inline Signal inverse(const TransformPlan& plan, std::span<const std::uint64_t> c, OpCount* count = nullptr) {
  return plan.strategy() == Strategy::fast ? fast_inverse(plan, c, count) : inverse_naive(plan, c, count);
}

/// One benchmark entry per requested blocklength.
struct BenchRecord {
  std::uint64_t p = 0;
  std::size_t n = 0;
  bool supported = false;
  std::string reason;  ///< why an entry is unsupported
  std::uint64_t naive_median_ns = 0;
  std::uint64_t naive_min_ns = 0;
  std::uint64_t fast_median_ns = 0;
  std::uint64_t fast_min_ns = 0;
  bool match = false;

  double speedup() const {
    return fast_median_ns == 0 ? 0.0 : static_cast<double>(naive_median_ns) / static_cast<double>(fast_median_ns);
  }

  /// key=value record, one line.
  std::string to_record() const {
    std::ostringstream os;
    os << "p=" << p << " N=" << n;
    if (!supported) {
      os << " status=unsupported reason=\"" << reason << "\"";
      return os.str();
    }
    os.setf(std::ios::fixed);
    os.precision(2);
    os << " naive_median_ns=" << naive_median_ns << " naive_min_ns=" << naive_min_ns
       << " fast_median_ns=" << fast_median_ns << " fast_min_ns=" << fast_min_ns << " speedup=" << speedup()
       << " match=" << (match ? "true" : "false");
    return os.str();
  }
};

namespace detail {

inline std::uint64_t median(std::vector<std::uint64_t> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : (v[m - 1] + v[m]) / 2;
}

}  // namespace detail

/// Naive vs fast timing on identical random inputs, a forward+inverse pair
/// per repetition. The first (warm-up) repetition is discarded. The
/// correctness cross-check runs outside the timed region.
inline std::vector<BenchRecord> bench(const Prime& prime, std::span<const std::size_t> lengths, std::size_t repetitions,
                                      std::uint64_t seed = 0x5eed) {
  std::vector<BenchRecord> out;
  std::mt19937_64 rng(seed);
  using clock = std::chrono::steady_clock;
  for (std::size_t n : lengths) {
    BenchRecord rec;
    rec.p = prime.value();
    rec.n = n;
    std::optional<TransformPlan> plan;
    try {
      plan = TransformPlan::create(prime, n);
      detail::require_fast(*plan);
    } catch (const error& e) {
      rec.reason = e.what();
      out.push_back(rec);
      continue;
    }
    rec.supported = true;
    rec.match = true;
    std::uniform_int_distribution<std::uint64_t> dist(0, prime.value() - 1);
    std::vector<std::uint64_t> naive_ns, fast_ns;
    for (std::size_t r = 0; r <= repetitions; ++r) {
      Signal f(n);
      for (auto& v : f) v = dist(rng);

      auto t0 = clock::now();
      const Spectrum c_naive = forward_naive(*plan, f);
      const Signal f_naive = inverse_naive(*plan, c_naive);
      auto t1 = clock::now();
      const Spectrum c_fast = fast_forward(*plan, f);
      const Signal f_fast = fast_inverse(*plan, c_fast);
      auto t2 = clock::now();

      if (c_naive != c_fast || f_naive != f_fast || f_fast != f) rec.match = false;
      if (r == 0) continue;
      naive_ns.push_back(static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
      fast_ns.push_back(static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count()));
    }
    rec.naive_median_ns = detail::median(naive_ns);
    rec.fast_median_ns = detail::median(fast_ns);
    rec.naive_min_ns = naive_ns.empty() ? 0 : *std::min_element(naive_ns.begin(), naive_ns.end());
    rec.fast_min_ns = fast_ns.empty() ? 0 : *std::min_element(fast_ns.begin(), fast_ns.end());
    out.push_back(rec);
  }
  return out;
}

}  // namespace ffdct
