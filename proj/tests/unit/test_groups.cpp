#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "vnlab/error.hpp"
#include "vnlab/groups.hpp"

using namespace vnlab;

namespace {

Lattice lattice4(std::vector<PhasePoint> gens) { return Lattice::from_generators(FiniteAbelianGroup({4}), std::move(gens)); }

std::set<std::pair<int, int>> points(const Lattice& l) {
  std::set<std::pair<int, int>> out;
  for (const PhasePoint& z : l.elements()) out.insert({z.x[0], z.omega[0]});
  return out;
}

// Subgroups of Z_n x Z_n by scanning every subset for closure.
int brute_force_subgroup_count(int n) {
  const int m = n * n;
  int count = 0;
  for (long mask = 0; mask < (1L << m); ++mask) {
    if (!(mask & 1)) continue;  // must hold 0
    bool closed = true;
    for (int a = 0; a < m && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (int b = 0; b < m && closed; ++b) {
        if (!(mask >> b & 1)) continue;
        const int s = ((a / n + b / n) % n) * n + (a % n + b % n) % n;
        closed = mask >> s & 1;
      }
    }
    count += closed;
  }
  return count;
}

}  // namespace

TEST(Character, TrivialCharacterIsOne) {
  const FiniteAbelianGroup g({4});
  for (int x = 0; x < 4; ++x) EXPECT_NEAR(std::abs(character_value(g, {0}, {x}) - cplx(1.0)), 0.0, 1e-15);
}

TEST(Character, QuarterTurnSquared) {
  EXPECT_NEAR(std::abs(character_value(FiniteAbelianGroup({4}), {1}, {2}) - cplx(-1.0)), 0.0, 1e-15);
}

TEST(Character, ProductGroup) {
  const cplx expected = std::exp(cplx(0.0, 2.0 * std::numbers::pi * 7.0 / 6.0));
  EXPECT_NEAR(std::abs(character_value(FiniteAbelianGroup({2, 3}), {1, 1}, {1, 2}) - expected), 0.0, 1e-14);
}

TEST(Group, RejectsOutOfRangeResidue) {
  EXPECT_THROW(FiniteAbelianGroup({4}).validate({4}), InvalidElement);
  EXPECT_THROW(FiniteAbelianGroup({4}).validate({0, 0}), InvalidElement);
}

TEST(Lattice, ClosureOfOrderTwoGenerators) {
  const Lattice l = lattice4({{{2}, {0}}, {{0}, {2}}});
  EXPECT_EQ(points(l), (std::set<std::pair<int, int>>{{0, 0}, {2, 0}, {0, 2}, {2, 2}}));
  EXPECT_TRUE(l.is_closed());
}

TEST(Lattice, EmptyGeneratorsGiveZero) {
  const Lattice l = lattice4({});
  ASSERT_EQ(l.size(), 1u);
  EXPECT_EQ(points(l), (std::set<std::pair<int, int>>{{0, 0}}));
}

TEST(Lattice, UnitGeneratorsGiveEverything) { EXPECT_EQ(lattice4({{{1}, {0}}, {{0}, {1}}}).size(), 16u); }

TEST(Adjoint, SelfAdjointLattice) {
  const Lattice l = lattice4({{{2}, {0}}, {{0}, {2}}});
  EXPECT_EQ(points(adjoint_lattice(l)), points(l));
}

TEST(Adjoint, FullAndTrivial) {
  const Lattice full = lattice4({{{1}, {0}}, {{0}, {1}}});
  EXPECT_EQ(points(adjoint_lattice(full)), (std::set<std::pair<int, int>>{{0, 0}}));
  EXPECT_EQ(adjoint_lattice(lattice4({})).size(), 16u);
}

TEST(Adjoint, HalfTranslationsFullModulations) {
  const Lattice l = lattice4({{{2}, {0}}, {{0}, {1}}});
  ASSERT_EQ(l.size(), 8u);
  EXPECT_EQ(points(adjoint_lattice(l)), (std::set<std::pair<int, int>>{{0, 0}, {0, 2}}));
}

// Adjoint = points whose shift commutes with every lattice shift, checked as matrices.
TEST(Adjoint, AgreesWithMatrixCommutationOnEverySubgroup) {
  for (int n : {2, 3, 4, 6}) {
    for (const Lattice& l : enumerate_subgroups(FiniteAbelianGroup({n}))) {
      std::set<std::pair<int, int>> expected;
      for (int x = 0; x < n; ++x)
        for (int w = 0; w < n; ++w) {
          const oracle::Mat p = oracle::shift(n, x, w);
          bool commutes = true;
          for (const PhasePoint& z : l.elements()) {
            const oracle::Mat q = oracle::shift(n, z.x[0], z.omega[0]);
            commutes = commutes && (p * q - q * p).norm() < 1e-12;
          }
          if (commutes) expected.insert({x, w});
        }
      EXPECT_EQ(points(adjoint_lattice(l)), expected) << "n=" << n;
    }
  }
}

TEST(Adjoint, IsAnInvolutionAndSizesMultiply) {
  const FiniteAbelianGroup g({2, 4});
  for (const Lattice& l : enumerate_subgroups(g, 4096)) {
    const Lattice a = adjoint_lattice(l);
    EXPECT_EQ(l.size() * a.size(), static_cast<std::size_t>(g.size() * g.size()));
    EXPECT_TRUE(adjoint_lattice(a) == l);
  }
}

TEST(Covolume, Examples) {
  EXPECT_EQ(covolume(lattice4({{{2}, {0}}, {{0}, {2}}})), Rational(1));
  EXPECT_EQ(covolume(lattice4({{{1}, {0}}, {{0}, {1}}})), Rational(1, 4));
  EXPECT_EQ(covolume(lattice4({})), Rational(4));
}

TEST(Subgroups, CountsMatchSubsetScan) {
  EXPECT_EQ(enumerate_subgroups(FiniteAbelianGroup({2})).size(), 5u);
  EXPECT_EQ(enumerate_subgroups(FiniteAbelianGroup({3})).size(), 6u);
  EXPECT_EQ(enumerate_subgroups(FiniteAbelianGroup({2})).size(), static_cast<std::size_t>(brute_force_subgroup_count(2)));
  EXPECT_EQ(enumerate_subgroups(FiniteAbelianGroup({3})).size(), static_cast<std::size_t>(brute_force_subgroup_count(3)));
  EXPECT_EQ(enumerate_subgroups(FiniteAbelianGroup({4})).size(), static_cast<std::size_t>(brute_force_subgroup_count(4)));
}

TEST(Subgroups, ContainTrivialAndFull) {
  for (int n = 2; n <= 8; ++n) {
    const std::vector<Lattice> all = enumerate_subgroups(FiniteAbelianGroup({n}));
    bool trivial = false, full = false;
    for (const Lattice& l : all) {
      EXPECT_TRUE(l.is_closed());
      trivial = trivial || l.size() == 1;
      full = full || l.size() == static_cast<std::size_t>(n * n);
    }
    EXPECT_TRUE(trivial && full) << n;
  }
}

TEST(Subgroups, CapIsEnforced) { EXPECT_THROW(enumerate_subgroups(FiniteAbelianGroup({20}), 256), ResourceLimit); }
