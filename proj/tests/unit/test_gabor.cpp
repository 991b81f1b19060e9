#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vnlab/gabor.hpp"

using namespace vnlab;

namespace {

const FiniteAbelianGroup Z4({4});

Lattice full4() { return Lattice::from_generators(Z4, {{{1}, {0}}, {{0}, {1}}}); }
Lattice half4() { return Lattice::from_generators(Z4, {{{2}, {0}}, {{0}, {1}}}); }

std::vector<std::pair<int, int>> pairs(const Lattice& l) {
  std::vector<std::pair<int, int>> out;
  for (const PhasePoint& z : l.elements()) out.push_back({z.x[0], z.omega[0]});
  return out;
}

}  // namespace

TEST(Shift, IdentityTranslationModulation) {
  const FiniteAbelianGroup z2({2});
  EXPECT_LT((tf_shift(z2, {{0}, {0}}) - Matrix::Identity(2, 2)).norm(), 1e-15);
  Matrix swap(2, 2);
  swap << 0, 1, 1, 0;
  EXPECT_LT((tf_shift(z2, {{1}, {0}}) - swap).norm(), 1e-15);
  EXPECT_LT((tf_shift(z2, {{0}, {1}}) - Vector(Eigen::Vector2cd(1, -1)).asDiagonal().toDenseMatrix()).norm(), 1e-15);
}

TEST(Shift, MatchesNaiveConstruction) {
  for (int n : {3, 5, 6})
    for (int x = 0; x < n; ++x)
      for (int w = 0; w < n; ++w) EXPECT_LT((tf_shift(FiniteAbelianGroup({n}), {{x}, {w}}) - oracle::shift(n, x, w)).norm(), 1e-13);
}

TEST(Shift, CocycleRelation) {
  // pi(z) pi(z') = c(z, z') pi(z + z')
  const FiniteAbelianGroup g({2, 3});
  const PhaseSpace space(g);
  for (std::int64_t a = 0; a < space.size(); a += 5)
    for (std::int64_t b = 0; b < space.size(); b += 7) {
      const PhasePoint z = space.point(a), zp = space.point(b);
      const Matrix lhs = tf_shift(g, z) * tf_shift(g, zp);
      const Matrix rhs = cocycle(g, z, zp) * tf_shift(g, space.add(z, zp));
      EXPECT_LT((lhs - rhs).norm(), 1e-13);
    }
}

TEST(Cocycle, Examples) {
  EXPECT_NEAR(std::abs(cocycle(Z4, {{3}, {1}}, {{2}, {0}}) - cplx(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(cocycle(Z4, {{2}, {0}}, {{0}, {1}}) - cplx(-1.0)), 0.0, 1e-15);
}

TEST(Analysis, ZeroWindowAndTrivialLattice) {
  EXPECT_LT(analysis_matrix(Window(Z4, Vector::Zero(4)), full4()).norm(), 1e-15);
  Rng rng(3);
  const Window g = Window::gaussian(Z4, rng);
  const Matrix a = analysis_matrix(g, Lattice::from_generators(Z4, {}));
  ASSERT_EQ(a.rows(), 1);
  EXPECT_LT((a.row(0).transpose() - g.values().conjugate()).norm(), 1e-14);
}

TEST(FrameOperator, DeltaWindow) {
  const Window d = Window::delta(Z4, {0});
  EXPECT_LT((frame_operator(d, full4()) - 4.0 * Matrix::Identity(4, 4)).norm(), 1e-13);
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = expected(2, 2) = 4.0;
  EXPECT_LT((frame_operator(d, half4()) - expected).norm(), 1e-13);
}

TEST(FrameOperator, TrivialLatticeIsRankOne) {
  Rng rng(5);
  const Window g = Window::gaussian(Z4, rng);
  const Matrix s = frame_operator(g, Lattice::from_generators(Z4, {}));
  EXPECT_LT((s - g.values() * g.values().adjoint()).norm(), 1e-13);
}

TEST(FrameOperator, AgreesWithPointwiseSum) {
  for (int n : {4, 6}) {
    const FiniteAbelianGroup g({n});
    for (const Lattice& l : enumerate_subgroups(g)) {
      Rng rng(derive_seed(11, "frame", static_cast<std::uint64_t>(n), l.size()));
      const Window w = Window::gaussian(g, rng);
      const oracle::Mat s = oracle::frame_operator(n, w.values(), pairs(l));
      EXPECT_LT((frame_operator(w, l) - s).norm(), 1e-11 * std::max(1.0, s.norm()));
      EXPECT_NEAR(bessel_bound_opt(w, l), oracle::lambda_max(s), 1e-10 * std::max(1.0, s.norm()));
    }
  }
}

TEST(BesselBound, Examples) {
  const Window d = Window::delta(Z4, {0});
  EXPECT_NEAR(bessel_bound_opt(d, full4()), 4.0, 1e-12);
  EXPECT_NEAR(bessel_bound_opt(d, half4()), 4.0, 1e-12);
  EXPECT_NEAR(bessel_bound_opt(d, adjoint_lattice(half4())), 2.0, 1e-12);
  EXPECT_NEAR(bessel_bound_opt(d, adjoint_lattice(full4())), 1.0, 1e-12);
}

TEST(BesselBound, SynthesisPathAgrees) {
  Rng rng(17);
  const FiniteAbelianGroup g({6});
  for (const Lattice& l : enumerate_subgroups(g)) {
    const Window w = Window::gaussian(g, rng);
    EXPECT_NEAR(bessel_bound_via_synthesis(w, l), bessel_bound_opt(w, l), 1e-10 * std::max(1.0, bessel_bound_opt(w, l)));
  }
}

TEST(Window, RejectsWrongLength) { EXPECT_ANY_THROW(Window(Z4, Vector::Zero(3))); }
