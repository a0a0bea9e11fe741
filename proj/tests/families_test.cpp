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

#include "matroidkl/families.hpp"
#include "matroidkl/conjectures.hpp"
#include "matroidkl/deletion.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

namespace matroidkl {
namespace {

IntPoly P(std::initializer_list<long long> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPoly(std::move(v));
}

TEST(UniformFamilyTest, ClosedFormsMatchOracle) {
  for (int n = 1; n <= 9; ++n) {
    for (int k = 1; k <= n; ++k) {
      const oracle::Result ref = oracle::compute(uniform(k, n));
      EXPECT_EQ(uniform_Q_closed(k, n), ref.Q) << k << "," << n;
      EXPECT_EQ(uniform_Y_closed(k, n), ref.Y) << k << "," << n;
      EXPECT_EQ(uniform_tau_closed(k, n), BigInt(ref.tau)) << k << "," << n;
    }
  }
}

TEST(UniformFamilyTest, KnownValues) {
  EXPECT_EQ(uniform_Q_closed(2, 4), P({3}));
  EXPECT_EQ(uniform_Q_closed(3, 4), P({3, 2}));
  EXPECT_EQ(uniform_Y_closed(2, 3), P({2, 3, 2}));
  EXPECT_EQ(uniform_Y_closed(0, 5), P({1}));
  EXPECT_EQ(uniform_tau_closed(1, 1), BigInt(1));
  EXPECT_EQ(uniform_tau_closed(3, 3), BigInt(0));
  EXPECT_EQ(uniform_tau_closed(2, 7), BigInt(0));
  EXPECT_THROW(uniform_Q_closed(5, 3), InvalidInput);
}

TEST(UniformFamilyTest, RecursionAgreesWithClosedForm) {
  // The identity needs a simple matroid, so k >= 2.
  for (int n = 3; n <= 30; ++n) {
    for (int k = 2; k < n; ++k) {
      EXPECT_EQ(uniform_recursion_step(k, n, PolyKind::kQ), uniform_Q_closed(k, n)) << k << "," << n;
      EXPECT_EQ(uniform_recursion_step(k, n, PolyKind::kY), uniform_Y_closed(k, n)) << k << "," << n;
    }
  }
  EXPECT_THROW(uniform_recursion_step(0, 4, PolyKind::kQ), InvalidInput);
  EXPECT_THROW(uniform_recursion_step(2, 4, PolyKind::kP), InvalidInput);
}

TEST(UniformFamilyTest, BooleanValues) {
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(uniform_Q_closed(n, n), P({1}));
    EXPECT_EQ(uniform_Y_closed(n, n), IntPoly::one_plus_x_pow(n));
  }
}

TEST(UniformFamilyTest, YIsPalindromic) {
  for (int n = 2; n <= 25; ++n) {
    for (int k = 1; k <= n; ++k) EXPECT_TRUE(is_palindromic(uniform_Y_closed(k, n), k));
  }
}

TEST(GluedCycleTest, MatchesOracle) {
  for (int a = 2; a <= 6; ++a) {
    for (int b = 2; b <= 6 && a + b - 1 <= 10; ++b) {
      const oracle::Result ref = oracle::compute(glued_cycle_graph(a, b));
      EXPECT_EQ(glued_cycle(a, b, PolyKind::kQ), ref.Q) << a << "," << b;
      EXPECT_EQ(glued_cycle(a, b, PolyKind::kY), ref.Y) << a << "," << b;
    }
  }
}

TEST(GluedCycleTest, EvenFormAgrees) {
  for (int a : {2, 4, 6, 8}) {
    for (int b : {2, 4, 6, 8}) {
      for (PolyKind k : {PolyKind::kQ, PolyKind::kY}) {
        EXPECT_EQ(glued_cycle_even(a, b, k), glued_cycle(a, b, k)) << a << "," << b;
      }
    }
  }
  EXPECT_THROW(glued_cycle_even(3, 4, PolyKind::kQ), InvalidInput);
  EXPECT_THROW(glued_cycle(1, 4, PolyKind::kQ), InvalidInput);
}

TEST(GluedCycleTest, SymmetricAndDegenerate) {
  EXPECT_EQ(glued_cycle(3, 7, PolyKind::kQ), glued_cycle(7, 3, PolyKind::kQ));
  EXPECT_EQ(glued_cycle(2, 5, PolyKind::kY), uniform_Y_closed(4, 5));
  EXPECT_EQ(glued_cycle(3, 3, PolyKind::kQ), P({4, 1}));
}

TEST(ProjectiveTest, QIntegers) {
  EXPECT_EQ(q_integer(0, 2), BigInt(0));
  EXPECT_EQ(q_integer(3, 2), BigInt(7));
  EXPECT_EQ(q_integer(3, 3), BigInt(13));
  EXPECT_THROW(q_integer(2, 1), InvalidInput);
}

TEST(ProjectiveTest, PointDeletionMatchesOracle) {
  for (auto [r, q] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
    const Matroid m = delete_set(pg(r, q), singleton(0));
    EXPECT_EQ(pg_minus_point_Q(r, q), oracle::compute(m).Q) << r << "," << q;
  }
  EXPECT_THROW(pg_minus_point_Q(1, 2), InvalidInput);
}

TEST(PartitionTest, ProfileMatchesStressedCounts) {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& spec : partitions_with_two_or_more_parts(n)) {
      EXPECT_EQ(partition_profile(spec), stressed_profile(partition_corank2(spec)))
          << partition_string(spec);
    }
  }
}

TEST(PartitionTest, FormulasMatchOracle) {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& spec : partitions_with_two_or_more_parts(n)) {
      const Matroid m = partition_corank2(spec);
      const oracle::Result ref = oracle::compute(m);
      for (PolyKind k : {PolyKind::kQ, PolyKind::kY}) {
        const IntPoly expected = k == PolyKind::kQ ? ref.Q : ref.Y;
        EXPECT_EQ(partition_corank2_QY(spec, k), expected) << partition_string(spec);
        EXPECT_EQ(corank2(m, k), expected) << partition_string(spec);
        EXPECT_EQ(corank2(n, partition_profile(spec), k), expected) << partition_string(spec);
      }
    }
  }
}

TEST(PartitionTest, FormulasMatchDeletionBeyondOracleRange) {
  // The double dual drops the family tag, so the generic engine runs.
  for (int n = 9; n <= 12; ++n) {
    for (const auto& spec : partitions_with_two_or_more_parts(n)) {
      const Matroid m = dual(dual(partition_corank2(spec)));
      for (PolyKind k : {PolyKind::kQ, PolyKind::kY}) {
        EXPECT_EQ(partition_corank2_QY(spec, k), compute_by_deletion(m, k, DeletionOptions{}))
            << partition_string(spec);
      }
    }
  }
}

TEST(PartitionTest, AllSingletonsIsUniform) {
  EXPECT_EQ(partition_corank2_QY({{1, 1, 1, 1, 1}}, PolyKind::kQ), uniform_Q_closed(3, 5));
}

TEST(Corank2Test, RejectsWrongCorankAndColoops) {
  EXPECT_THROW(corank2(uniform(2, 5), PolyKind::kQ), PreconditionError);
  EXPECT_THROW(corank2(direct_sum({uniform(1, 3), uniform(1, 1)}), PolyKind::kQ),
               PreconditionError);
  EXPECT_THROW(corank2(4, {}, PolyKind::kZ), InvalidInput);
}

TEST(Corank2Test, GraphicCorank2MatchesOracle) {
  // A theta graph with paths of lengths 2, 2 and 3 has corank 2.
  const Matroid m = graphic(6, {{0, 1}, {1, 5}, {0, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}});
  const oracle::Result ref = oracle::compute(m);
  EXPECT_EQ(corank2(m, PolyKind::kQ), ref.Q);
  EXPECT_EQ(corank2(m, PolyKind::kY), ref.Y);
}

}  // namespace
}  // namespace matroidkl
