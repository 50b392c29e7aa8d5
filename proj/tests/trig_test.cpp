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

#include "ffdct/trig.hpp"

#include <cstdint>

#include "gtest/gtest.h"

namespace ffdct {
namespace {

TrigContext example_context() {
  const Prime p(31);
  return TrigContext(GaussInt(p, 29, 20), 8);
}

TrigContext canonical_context(std::uint64_t q) {
  const Prime p(q);
  const std::size_t n = static_cast<std::size_t>((q + 1) / 4);
  return TrigContext(find_unimodular_of_order(p, 4 * n), n);
}

TEST(TrigContextTest, HoldsSquareRootOfZeta) {
  const TrigContext ctx = example_context();
  EXPECT_EQ(ctx.zeta(), GaussInt(Prime(31), 7, 13));
  EXPECT_EQ(gi_mul(ctx.lambda(), ctx.lambda()), ctx.zeta());
  EXPECT_EQ(order(ctx.zeta()).value, 16u);
  EXPECT_EQ(ctx.half().value(), 16u);
}

TEST(TrigContextTest, RejectsBadKernels) {
  const Prime p(31);
  EXPECT_THROW(TrigContext(GaussInt(p, 7, 13), 8), invalid_lambda);  // order 16, need 32
  EXPECT_THROW(TrigContext(GaussInt(p, 2, 2), 8), invalid_lambda);   // not unimodular
  EXPECT_THROW(TrigContext(GaussInt(p, 2, 11), 16), unsupported_length);
  EXPECT_THROW(TrigContext(GaussInt(p, 2, 11), 0), unsupported_length);
}

TEST(CosKTest, Examples) {
  const TrigContext ctx = example_context();
  for (int k = 0; k < 16; ++k) EXPECT_EQ(ctx.cos_k(k, 0).value(), 1u);
  EXPECT_EQ(ctx.cos_k(1, 1).value(), 7u);
  EXPECT_EQ(ctx.cos_k(2, 4), ctx.cos_k(4, 2));
}

TEST(CosKTest, MatchesDirectPowerFormula) {
  const TrigContext ctx = example_context();
  const Prime& p = ctx.prime();
  for (std::int64_t k = -20; k < 20; ++k) {
    for (std::int64_t i = -20; i < 20; ++i) {
      const GaussInt s = gi_add(gi_pow(ctx.zeta(), i * k), gi_pow(ctx.zeta(), -i * k));
      ASSERT_EQ(s.im().value(), 0u);
      ASSERT_EQ(ctx.cos_k(k, i).value(), p.mul(p.half(), s.re().value())) << k << "," << i;
    }
  }
}

TEST(SinKTest, Examples) {
  const TrigContext ctx = example_context();
  for (int k = 0; k < 16; ++k) EXPECT_EQ(ctx.sin_k(k, 0).value(), 0u);
  for (int i = 0; i < 16; ++i) EXPECT_EQ(ctx.sin_k(0, i).value(), 0u);
  // zeta = 7 + j13: sin_1(1) = 1/2 * 2*13 = 13.
  EXPECT_EQ(ctx.sin_k(1, 1).value(), 13u);
}

TEST(TrigIdentityTest, PythagoreanExhaustive) {
  for (std::uint64_t q : {7, 23, 31}) {
    const TrigContext ctx = canonical_context(q);
    const Prime& p = ctx.prime();
    const auto period = static_cast<std::int64_t>(2 * ctx.blocklength());
    for (std::int64_t k = 0; k < period; ++k) {
      for (std::int64_t i = 0; i < period; ++i) {
        const auto c = ctx.cos_k(k, i).value(), s = ctx.sin_k(k, i).value();
        ASSERT_EQ(p.add(p.mul(c, c), p.mul(s, s)), 1u) << q << " " << k << " " << i;
      }
    }
  }
}

TEST(TrigIdentityTest, AdditionOfArcs) {
  const TrigContext ctx = example_context();
  const Prime& p = ctx.prime();
  for (std::int64_t k = 0; k < 16; ++k) {
    for (std::int64_t a = 0; a < 16; ++a) {
      for (std::int64_t b = 0; b < 16; ++b) {
        const auto ca = ctx.cos_k(k, a).value(), cb = ctx.cos_k(k, b).value();
        const auto sa = ctx.sin_k(k, a).value(), sb = ctx.sin_k(k, b).value();
        ASSERT_EQ(ctx.cos_k(k, a + b).value(), p.sub(p.mul(ca, cb), p.mul(sa, sb)));
        ASSERT_EQ(ctx.cos_k(k, a - b).value(), p.add(p.mul(ca, cb), p.mul(sa, sb)));
      }
    }
  }
}

TEST(TrigIdentityTest, Periodicity) {
  const TrigContext ctx = example_context();
  for (std::int64_t k = 0; k < 8; ++k) {
    for (std::int64_t i = 0; i < 16; ++i) {
      ASSERT_EQ(ctx.cos_k(k, i), ctx.cos_k(k, i + 16));
      ASSERT_EQ(ctx.cos_k(k, i), ctx.cos_k(k, i - 16));
      ASSERT_EQ(ctx.cos_half(k, i), ctx.cos_half(k + 32, i));
      ASSERT_EQ(ctx.cos_half(k, i), ctx.cos_half(k, i + 16));
    }
  }
}

TEST(CosHalfTest, Examples) {
  const TrigContext ctx = example_context();
  for (int i = 0; i < 8; ++i) EXPECT_EQ(ctx.cos_half(0, i).value(), 1u);
  EXPECT_EQ(ctx.cos_half(2, 0).value(), 7u);
  EXPECT_EQ(ctx.cos_half(1, 0).value(), 29u);
}

TEST(CosHalfTest, TableMatchesDirectEvaluation) {
  const TrigContext ctx = canonical_context(127);
  const Prime& p = ctx.prime();
  for (std::size_t k = 0; k < ctx.blocklength(); ++k) {
    for (std::size_t i = 0; i < ctx.blocklength(); ++i) {
      const auto m = static_cast<std::int64_t>(k * (2 * i + 1));
      const GaussInt s = gi_add(gi_pow(ctx.lambda(), m), gi_pow(ctx.lambda(), -m));
      ASSERT_EQ(ctx.cos_half_value(k, i), p.mul(p.half(), s.re().value()));
      ASSERT_EQ(ctx.cos_half_value(k, i), ctx.cos_half(static_cast<std::int64_t>(k), static_cast<std::int64_t>(i)).value());
    }
  }
}

TEST(CosHalfTest, OppositeRootNegatesOddRows) {
  const Prime p(31);
  const TrigContext pos(GaussInt(p, 2, 11), 8);
  const TrigContext neg(GaussInt(p, 29, 20), 8);
  for (std::size_t k = 0; k < 8; ++k) {
    for (std::size_t i = 0; i < 8; ++i) {
      const auto want = k % 2 == 0 ? pos.cos_half_value(k, i) : p.neg(pos.cos_half_value(k, i));
      ASSERT_EQ(neg.cos_half_value(k, i), want);
    }
  }
}

TEST(KcosLemmaTest, Examples) {
  const TrigContext ctx = example_context();
  EXPECT_EQ(kcos_lemma_sum(ctx, 0).value(), 7u);
  EXPECT_EQ(kcos_lemma_sum(ctx, 3).value(), 0u);
  EXPECT_EQ(kcos_lemma_sum(ctx, 4).value(), 30u);
}

TEST(KcosLemmaTest, TrichotomyForTablePrimes) {
  for (std::uint64_t q : {7, 23, 31, 47, 71, 79, 103, 127, 151, 167, 191, 199}) {
    const TrigContext ctx = canonical_context(q);
    const auto n = static_cast<std::int64_t>(ctx.blocklength());
    for (std::int64_t i = -2 * n; i < 4 * n; ++i) {
      const std::int64_t r = ((i % (2 * n)) + 2 * n) % (2 * n);
      std::uint64_t want = r == 0 ? static_cast<std::uint64_t>(n - 1) : (r % 2 == 0 ? q - 1 : 0);
      ASSERT_EQ(kcos_lemma_sum(ctx, i).value(), want) << "p=" << q << " i=" << i;
    }
  }
}

TEST(TrigContextTest, CorruptedCopyLeavesOriginalIntact) {
  const TrigContext ctx = example_context();
  const TrigContext bad = ctx.with_corrupted_entry(1, 0, ctx.cos_half_value(1, 0) + 1);
  EXPECT_NE(bad.cos_half_value(1, 0), ctx.cos_half_value(1, 0));
  EXPECT_EQ(ctx.cos_half_value(1, 0), 29u);
}

}  // namespace
}  // namespace ffdct
