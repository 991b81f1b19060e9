#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vnlab/algebra.hpp"
#include "vnlab/gabor.hpp"

using namespace vnlab;

namespace {

Lattice quarter_lattice() { return Lattice::from_generators(FiniteAbelianGroup({4}), {{{2}, {0}}, {{0}, {2}}}); }

std::vector<oracle::Mat> shifts(const Lattice& l) {
  std::vector<oracle::Mat> out;
  for (const PhasePoint& z : l.elements()) out.push_back(tf_shift(l.group(), z));
  return out;
}

}  // namespace

TEST(Generate, IdentityGivesScalars) { EXPECT_EQ(generate_algebra(3, {Matrix::Identity(3, 3)}).dim(), 1); }

TEST(Generate, NilpotentGivesFullAlgebra) {
  Matrix e12 = Matrix::Zero(2, 2);
  e12(0, 1) = 1.0;
  EXPECT_EQ(generate_algebra(2, {e12}).dim(), 4);
}

TEST(Generate, ShiftsOfSelfAdjointLattice) {
  const StarAlgebra a = generate_algebra(shifts(quarter_lattice()));
  EXPECT_EQ(a.dim(), 4);
  EXPECT_EQ(a.dim(), oracle::span_dim(shifts(quarter_lattice())));
  EXPECT_LT(a.closure_defect(), 1e-12);
}

TEST(Generate, BasisIsOrthonormal) {
  Rng rng(1);
  const StarAlgebra a = generate_algebra(4, {rng.gaussian_matrix(4, 4)});
  const Matrix b = a.basis_matrix();
  EXPECT_LT((b.adjoint() * b - Matrix::Identity(a.dim(), a.dim())).norm(), 1e-12);
  EXPECT_EQ(a.dim(), 16);
}

TEST(Commutant, FullAndScalars) {
  EXPECT_EQ(commutant(full_matrix_algebra(3)).dim(), 1);
  EXPECT_EQ(commutant(scalar_algebra(3)).dim(), 9);
}

TEST(Commutant, SelfAdjointLatticeIsItsOwnCommutant) {
  const StarAlgebra a = generate_algebra(shifts(quarter_lattice()));
  EXPECT_TRUE(same_span(commutant(a), a));
}

TEST(Commutant, DimensionMatchesKroneckerKernel) {
  Rng rng(9);
  const std::vector<StarAlgebra> cases = {
      direct_sum({full_matrix_algebra(2), full_matrix_algebra(1)}),
      tensor_identity(full_matrix_algebra(2), 3),
      identity_tensor(2, diagonal_algebra(2)),
      full_matrix_algebra(2).conjugated(rng.haar_unitary(2)),
  };
  for (const StarAlgebra& a : cases) {
    const StarAlgebra c = commutant(a);
    EXPECT_EQ(c.dim(), oracle::commutant_dim(a.basis(), a.ambient_dim()));
    for (const Matrix& x : a.basis())
      for (const Matrix& y : c.basis()) EXPECT_LT((x * y - y * x).norm(), 1e-12);
    EXPECT_TRUE(same_span(commutant(c), a));
  }
}

TEST(Center, ProjectionsOfStandardAlgebras) {
  const auto full = minimal_central_projections(full_matrix_algebra(3));
  ASSERT_EQ(full.size(), 1u);
  EXPECT_LT((full[0] - Matrix::Identity(3, 3)).norm(), 1e-12);

  const auto diag = minimal_central_projections(diagonal_algebra(3));
  ASSERT_EQ(diag.size(), 3u);
  for (const Matrix& p : diag) EXPECT_NEAR(p.trace().real(), 1.0, 1e-12);

  const StarAlgebra m2m1 = direct_sum({full_matrix_algebra(2), full_matrix_algebra(1)});
  const auto ps = minimal_central_projections(m2m1);
  ASSERT_EQ(ps.size(), 2u);
  std::vector<int> ranks;
  for (const Matrix& p : ps) ranks.push_back(oracle::rank(p));
  std::sort(ranks.begin(), ranks.end());
  EXPECT_EQ(ranks, (std::vector<int>{1, 2}));
  for (const Matrix& p : ps) EXPECT_EQ(block_dimension(m2m1, p), oracle::rank(p) * oracle::rank(p));  // multiplicity one: M_d has dim d^2
}

TEST(Trace, MatrixTraceValues) {
  const TraceFunctional tr = TraceFunctional::matrix_trace(full_matrix_algebra(3));
  Rng rng(2);
  const Matrix x = rng.gaussian_matrix(3, 3), y = rng.gaussian_matrix(3, 3);
  EXPECT_NEAR(std::abs(tr(x) - x.trace()), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(tr(x * y) - tr(y * x)), 0.0, 1e-12);
  EXPECT_LT(tr.tracial_defect(), 1e-12);
}

TEST(Expectation, OntoItselfIsIdentity) {
  const StarAlgebra a = direct_sum({full_matrix_algebra(2), full_matrix_algebra(2)});
  const ConditionalExpectation e(TraceFunctional::matrix_trace(a), a);
  Rng rng(4);
  const Matrix x = a.random_element(rng);
  EXPECT_LT((e(x) - x).norm(), 1e-12);
}

TEST(Expectation, IsTraceOrthogonalProjection) {
  const StarAlgebra n = full_matrix_algebra(4);
  const StarAlgebra b = tensor_identity(full_matrix_algebra(2), 2);
  const TraceFunctional tr = TraceFunctional::matrix_trace(n);
  const ConditionalExpectation e(tr, b);
  Rng rng(6);
  for (int t = 0; t < 5; ++t) {
    const Matrix x = n.random_element(rng), y = b.random_element(rng);
    EXPECT_TRUE(b.contains(e(x)));
    EXPECT_NEAR(std::abs(tr(e(x) * y) - tr(x * y)), 0.0, 1e-11);
    EXPECT_LT((e(y * x) - y * e(x)).norm(), 1e-11);
  }
}

TEST(CenterValuedTrace, FullMatrixAlgebra) {
  const CenterValuedTrace e(full_matrix_algebra(2));
  Rng rng(8);
  const Matrix x = rng.gaussian_matrix(2, 2);
  EXPECT_LT((e(x) - x.trace() / 2.0 * Matrix::Identity(2, 2)).norm(), 1e-12);
}

TEST(CenterValuedTrace, CommutativeIsIdentity) {
  const CenterValuedTrace e(diagonal_algebra(3));
  const Matrix d = Vector(Eigen::Vector3cd(1, cplx(0, 2), -3)).asDiagonal();
  EXPECT_LT((e(d) - d).norm(), 1e-12);
}

TEST(CenterValuedTrace, BlockwiseNormalizedTraces) {
  const StarAlgebra a = direct_sum({full_matrix_algebra(2), full_matrix_algebra(3)});
  const CenterValuedTrace e(a);
  Rng rng(10);
  const Matrix x = a.random_element(rng);
  Matrix expected = Matrix::Zero(5, 5);
  expected.topLeftCorner(2, 2) = x.topLeftCorner(2, 2).trace() / 2.0 * Matrix::Identity(2, 2);
  expected.bottomRightCorner(3, 3) = x.bottomRightCorner(3, 3).trace() / 3.0 * Matrix::Identity(3, 3);
  EXPECT_LT((e(x) - expected).norm(), 1e-12);
}

TEST(Gns, ScalarsAreOneDimensional) {
  const GnsSpace l2(TraceFunctional::matrix_trace(scalar_algebra(1)));
  EXPECT_EQ(l2.dim(), 1);
}

TEST(Gns, LeftMultiplicationSpectrum) {
  const StarAlgebra m2 = full_matrix_algebra(2);
  const GnsSpace l2(TraceFunctional::matrix_trace(m2));
  ASSERT_EQ(l2.dim(), 4);
  Rng rng(12);
  const Matrix h = m2.random_self_adjoint(rng);
  Eigen::SelfAdjointEigenSolver<Matrix> a(l2.left(h)), b(kron(h, Matrix::Identity(2, 2)));
  EXPECT_LT((a.eigenvalues() - b.eigenvalues()).norm(), 1e-12);
  // left and right actions commute and the unit has norm^2 = Tr(1)
  const Matrix y = m2.random_element(rng);
  EXPECT_LT((l2.left(h) * l2.right(y) - l2.right(y) * l2.left(h)).norm(), 1e-12);
  EXPECT_NEAR(l2.unit().squaredNorm(), 2.0, 1e-12);
  EXPECT_LT((l2.hat(h * y) - l2.left(h) * l2.hat(y)).norm(), 1e-12);
}

TEST(TwistedGroupAlgebra, TrivialLatticeIsScalars) {
  const auto t = twisted_group_algebra(Lattice::from_generators(FiniteAbelianGroup({4}), {}), CocycleFlavor::plain);
  EXPECT_EQ(t.algebra.dim(), 1);
}

TEST(TwistedGroupAlgebra, UnitariesAndTrace) {
  const auto t = twisted_group_algebra(quarter_lattice(), CocycleFlavor::plain);
  EXPECT_EQ(t.algebra.dim(), 4);
  for (std::size_t i = 0; i < t.unitaries.size(); ++i) {
    const Matrix& u = t.unitaries[i];
    EXPECT_LT((u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).norm(), 1e-12);
    const bool zero = t.lattice.elements()[i] == t.lattice.space().zero();
    EXPECT_NEAR(std::abs(t.trace(u) - cplx(zero ? 1.0 : 0.0)), 0.0, 1e-12);
  }
  EXPECT_LT(t.trace.tracial_defect(), 1e-12);
}
