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

#include <memory>

#include "matroidkl/incidence.hpp"
#include "matroidkl/klcore.hpp"
#include "support/oracle.hpp"

namespace matroidkl {
namespace {

std::shared_ptr<const FlatLattice> lattice_of(const Matroid& m) {
  return std::make_shared<const FlatLattice>(flats(m));
}

std::vector<Matroid> samples() {
  return {uniform(2, 3), uniform(3, 5), glued_cycle_graph(3, 3), pg(3, 2),
          partition_corank2({{2, 2, 1}})};
}

TEST(IncidenceTest, DeltaIsIdentity) {
  auto l = lattice_of(uniform(3, 4));
  const IncElement chi = build(IncKind::kChi, l);
  const IncElement delta = build(IncKind::kDelta, l);
  EXPECT_EQ(convolve(delta, chi), chi);
  EXPECT_EQ(convolve(chi, delta), chi);
}

TEST(IncidenceTest, InverseIsTwoSided) {
  for (const Matroid& m : samples()) {
    auto l = lattice_of(m);
    const IncElement p = defining_P_element(l);
    const IncElement inv = invert(p);
    EXPECT_EQ(convolve(p, inv), IncElement::delta(l)) << m.description();
    EXPECT_EQ(convolve(inv, p), IncElement::delta(l)) << m.description();
  }
}

TEST(IncidenceTest, ConvolutionIsAssociative) {
  auto l = lattice_of(glued_cycle_graph(3, 4));
  const IncElement a = build(IncKind::kChi, l);
  const IncElement b = defining_P_element(l);
  const IncElement c = z_element_from_P(b);
  EXPECT_EQ(convolve(convolve(a, b), c), convolve(a, convolve(b, c)));
}

TEST(IncidenceTest, CharacteristicPolynomialIsAKernel) {
  for (const Matroid& m : samples()) {
    EXPECT_TRUE(is_kernel(build(IncKind::kChi, lattice_of(m)))) << m.description();
  }
  EXPECT_FALSE(is_kernel(defining_P_element(lattice_of(uniform(2, 3)))));
}

TEST(IncidenceTest, PIsRightKernelCompanion) {
  // rev(P) = χ P, Z = rev(Z), and Z = ζ_x P with ζ_x the shifted zeta element.
  for (const Matroid& m : samples()) {
    auto l = lattice_of(m);
    const IncElement p = defining_P_element(l);
    EXPECT_EQ(rev(p), convolve(build(IncKind::kChi, l), p)) << m.description();
    const IncElement z = z_element_from_P(p);
    EXPECT_EQ(rev(z), z) << m.description();
  }
}

TEST(IncidenceTest, ZInverseMatchesY) {
  for (const Matroid& m : samples()) {
    auto l = lattice_of(m);
    const IncElement z = z_element_from_P(defining_P_element(l));
    const IncElement y = y_element_from_Q(defining_Q_element(l));
    EXPECT_EQ(hat(invert(z)), y) << m.description();
  }
}

TEST(IncidenceTest, TopEntriesMatchOracle) {
  for (const Matroid& m : samples()) {
    auto l = lattice_of(m);
    const oracle::Result ref = oracle::compute(m);
    const IncElement p = defining_P_element(l);
    const IncElement q = defining_Q_element(l);
    EXPECT_EQ(p.at(l->bottom(), l->top()), ref.P) << m.description();
    EXPECT_EQ(q.at(l->bottom(), l->top()), ref.Q) << m.description();
    EXPECT_EQ(z_element_from_P(p).at(l->bottom(), l->top()), ref.Z) << m.description();
    EXPECT_EQ(y_element_from_Q(q).at(l->bottom(), l->top()), ref.Y) << m.description();
  }
}

TEST(IncidenceTest, MixedLatticesAreRejected) {
  auto a = lattice_of(uniform(2, 3));
  auto b = lattice_of(uniform(2, 3));
  EXPECT_THROW(convolve(IncElement::delta(a), IncElement::delta(b)), PreconditionError);
  EXPECT_THROW(build(IncKind::kP, a), PreconditionError);
}

TEST(IncidenceTest, IncomparableEntryIsRejected) {
  auto l = lattice_of(uniform(2, 3));
  IncElement e(l);
  const auto atoms = l->of_rank(1);
  EXPECT_THROW(e.set(atoms[0], atoms[1], IntPoly::constant(1)), PreconditionError);
}

TEST(IncidenceTest, RevRejectsOverlongEntries) {
  auto l = lattice_of(uniform(2, 3));
  IncElement e(l);
  e.set(l->bottom(), l->bottom(), IntPoly::one_plus_x_pow(1));
  EXPECT_THROW(rev(e), PreconditionError);
}

}  // namespace
}  // namespace matroidkl
