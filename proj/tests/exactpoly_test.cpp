// Copyright 2026 The Authors.
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

#include <gtest/gtest.h>

#include <random>

#include "matroidkl/exactpoly.hpp"

namespace matroidkl {
namespace {

IntPoly P(std::initializer_list<long long> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPoly(std::move(v));
}

TEST(IntPolyTest, RingOperations) {
  EXPECT_EQ(P({1, 1}) * P({1, 1}), P({1, 2, 1}));
  EXPECT_TRUE((P({3, 4}) * IntPoly()).is_zero());
  EXPECT_EQ(P({1, 3, 1}).derivative(), P({3, 2}));
  EXPECT_EQ(P({1, 2}) - P({1, 2}), IntPoly());
  EXPECT_EQ(P({1, 2}).shifted(2), P({0, 0, 1, 2}));
  EXPECT_EQ(P({1, 2, 1}).evaluate(Rational(1, 2)), Rational(9, 4));
  EXPECT_EQ(BigInt(-2) * P({1, 0, 3}), P({-2, 0, -6}));
}

TEST(IntPolyTest, TrailingZerosAreTrimmed) {
  EXPECT_EQ(P({1, 2, 0, 0}).size(), 2u);
  EXPECT_TRUE(P({0, 0}).is_zero());
  EXPECT_THROW(IntPoly().degree(), PreconditionError);
}

TEST(IntPolyTest, ToString) {
  EXPECT_EQ(P({4, 1}).to_string(), "4 + x");
  EXPECT_EQ(P({0, -1, 3}).to_string(), "-x + 3*x^2");
  EXPECT_EQ(IntPoly().to_string(), "0");
}

TEST(IntPolyTest, BigCoefficientsStayExact) {
  IntPoly p = IntPoly::one_plus_x_pow(200);
  EXPECT_EQ(p.coefficient(100), binomial(200, 100));
  EXPECT_EQ(p.evaluate(Rational(1)), Rational(ipow(BigInt(2), 200)));
}

TEST(ReverseTest, Examples) {
  EXPECT_EQ(reverse(P({1, 2}), 3), P({0, 0, 2, 1}));
  EXPECT_EQ(reverse(P({1, 3, 1}), 2), P({1, 3, 1}));
  EXPECT_TRUE(reverse(IntPoly(), 5).is_zero());
  EXPECT_THROW(reverse(P({1, 2, 3}), 1), PreconditionError);
}

TEST(ReverseTest, Involution) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BigInt> c(rng() % 6);
    for (auto& v : c) v = static_cast<int>(rng() % 21) - 10;
    IntPoly p(c);
    const int d = (p.is_zero() ? 0 : p.degree()) + static_cast<int>(rng() % 3);
    EXPECT_EQ(reverse(reverse(p, d), d), p);
  }
}

TEST(PalindromeTest, Examples) {
  EXPECT_TRUE(is_palindromic(P({1, 3, 1}), 2));
  EXPECT_FALSE(is_palindromic(P({1, 2}), 1));
  for (int n = 0; n <= 12; ++n) EXPECT_TRUE(is_palindromic(IntPoly::one_plus_x_pow(n), n));
}

TEST(NormalizeTest, CounterexampleValues) {
  const IntPoly q = P({163, 1790, 10323, 39217, 106659, 215169, 323646, 350404, 232662, 71162});
  const IntPoly bq = P({163, 16110, 371628, 3294228, 13439034, 27111294, 27186264, 12614544,
                        2093958, 71162});
  EXPECT_EQ(normalize_b(q), bq);
  EXPECT_EQ(normalize_b(P({3})), P({3}));
  EXPECT_EQ(normalize_b(P({1, 1})), P({1, 1}));
  EXPECT_THROW(normalize_b(IntPoly()), PreconditionError);
}

TEST(NormalizeTest, KeepsDegreeAndConstant) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<BigInt> c(1 + rng() % 8);
    for (auto& v : c) v = 1 + static_cast<int>(rng() % 50);
    IntPoly p(c);
    IntPoly b = normalize_b(p);
    EXPECT_EQ(b.degree(), p.degree());
    EXPECT_EQ(b.coefficient(0), p.coefficient(0));
  }
}

TEST(LogConcaveTest, Examples) {
  EXPECT_TRUE(is_log_concave(P({1, 3, 1})));
  EXPECT_FALSE(is_log_concave(P({1, 1, 2})));
  EXPECT_TRUE(is_log_concave(
      P({163, 1790, 10323, 39217, 106659, 215169, 323646, 350404, 232662, 71162})));
  // An internal zero between positive neighbours fails the inequality.
  EXPECT_FALSE(is_log_concave(P({1, 0, 1})));
}

TEST(GammaTest, Examples) {
  EXPECT_EQ(gamma_vector(P({1, 3, 1}), 2), (std::vector<BigInt>{1, 1}));
  EXPECT_EQ(gamma_vector(P({2, 3, 2}), 2), (std::vector<BigInt>{2, -1}));
  EXPECT_EQ(gamma_vector(IntPoly::one_plus_x_pow(3), 3), (std::vector<BigInt>{1, 0}));
  EXPECT_THROW(gamma_vector(P({1, 2}), 1), PreconditionError);
}

TEST(GammaTest, RoundTrip) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = static_cast<int>(rng() % 9);
    std::vector<BigInt> gamma(static_cast<std::size_t>(d / 2 + 1));
    for (auto& g : gamma) g = static_cast<int>(rng() % 11) - 5;
    IntPoly p;
    for (int i = 0; 2 * i <= d; ++i) {
      p += gamma[static_cast<std::size_t>(i)] * IntPoly::one_plus_x_pow(d - 2 * i).shifted(i);
    }
    if (p.is_zero()) continue;
    auto back = gamma_vector(p, d);
    IntPoly rebuilt;
    for (int i = 0; 2 * i <= d; ++i) {
      rebuilt += back[static_cast<std::size_t>(i)] * IntPoly::one_plus_x_pow(d - 2 * i).shifted(i);
    }
    EXPECT_EQ(rebuilt, p);
  }
}

TEST(RootCountTest, Examples) {
  EXPECT_EQ(real_root_count(P({2, -3, 1})), 2);
  EXPECT_EQ(real_root_count(P({1, 0, 1})), 0);
  EXPECT_EQ(real_root_count(P({5})), 0);
  EXPECT_THROW(real_root_count(IntPoly()), PreconditionError);
}

TEST(RootCountTest, ProductsOfLinearFactors) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    IntPoly p = P({1});
    std::set<Rational> roots;
    const int factors = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < factors; ++i) {
      const int num = static_cast<int>(rng() % 11) - 5;
      const int den = 1 + static_cast<int>(rng() % 3);
      p *= P({-num, den});
      roots.insert(Rational(num, den));
    }
    if (rng() % 2) p *= P({1, 1, 1});
    EXPECT_EQ(real_root_count(p), static_cast<int>(roots.size())) << p.to_string();
  }
}

TEST(RealRootedTest, Examples) {
  EXPECT_TRUE(is_real_rooted(P({1, 2, 1})));
  EXPECT_FALSE(is_real_rooted(P({1, 1, 1})));
  EXPECT_TRUE(is_real_rooted(P({0, 0, 1})));
  EXPECT_FALSE(is_real_rooted(P({163, 16110, 371628, 3294228, 13439034, 27111294, 27186264,
                                 12614544, 2093958, 71162})));
  EXPECT_EQ(real_root_count(P({163, 16110, 371628, 3294228, 13439034, 27111294, 27186264,
                               12614544, 2093958, 71162})),
            7);
}

TEST(RealRootedTest, NewtonImpliesLogConcave) {
  std::mt19937 rng(9);
  int real_rooted_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    IntPoly p = P({1});
    const int factors = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < factors; ++i) {
      if (rng() % 4 == 0) {
        p *= P({1 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), 1});
      } else {
        p *= P({1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 3)});
      }
    }
    if (is_real_rooted(p)) {
      ++real_rooted_seen;
      EXPECT_TRUE(is_log_concave(p)) << p.to_string();
    }
  }
  EXPECT_GT(real_rooted_seen, 50);
}

TEST(RatScratchTest, IntegralityGate) {
  RatScratch s;
  s.add(0, Rational(1, 2));
  EXPECT_FALSE(s.is_integral());
  EXPECT_THROW(s.to_int_poly(), InternalError);
  s.add(0, Rational(1, 2));
  s.add(2, Rational(6, 3));
  EXPECT_EQ(s.to_int_poly(), P({1, 0, 2}));
}

}  // namespace
}  // namespace matroidkl
