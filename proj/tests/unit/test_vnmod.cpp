#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vnlab/error.hpp"
#include "vnlab/vnmod.hpp"

using namespace vnlab;

namespace {

TraceFunctional tr(const StarAlgebra& a) { return TraceFunctional::matrix_trace(a); }

// dim(H z) / dim(N z), with both sides measured by plain ranks.
std::vector<double> block_oracle(const RightModule& h) {
  std::vector<double> out;
  for (const Matrix& z : minimal_central_projections(h.algebra())) {
    const int hz = oracle::rank(h.act(z));
    std::vector<oracle::Mat> nz;
    for (const Matrix& b : h.algebra().basis()) nz.push_back(b * z);
    out.push_back(static_cast<double>(hz) / oracle::span_dim(nz));
  }
  return out;
}

void expect_coefficients(const CenterElement& c, const std::vector<double>& expected, double tol = 1e-9) {
  ASSERT_EQ(static_cast<std::size_t>(c.coefficients.size()), expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_NEAR(c.coefficients(static_cast<Index>(k)), expected[k], tol) << k;
}

}  // namespace

TEST(RightModule, RejectsMultiplicativeAction) {
  // x acting by left multiplication is not a right action of M_2
  const StarAlgebra m2 = full_matrix_algebra(2);
  EXPECT_THROW(RightModule(tr(m2), m2.basis()), PreconditionError);
}

TEST(ModuleProjection, StandardModuleIsIdentity) {
  const RightModule l2 = RightModule::standard(tr(full_matrix_algebra(2)));
  const std::vector<Vector> gens = {l2.gns().unit()};
  const ModuleProjection p = module_projection(l2, gens);
  EXPECT_EQ(p.copies, 1);
  EXPECT_LT((p.projection - Matrix::Identity(4, 4)).norm(), 1e-10);
}

TEST(Cdim, StandardModuleIsOne) {
  for (const StarAlgebra& a : {full_matrix_algebra(3), diagonal_algebra(2), direct_sum({full_matrix_algebra(2), full_matrix_algebra(1)})}) {
    const CenterElement c = cdim(RightModule::standard(tr(a)));
    for (Index k = 0; k < c.coefficients.size(); ++k) EXPECT_NEAR(c.coefficients(k), 1.0, 1e-10);
  }
}

TEST(Cdim, RowModuleOverFullMatrices) {
  for (Index n = 1; n <= 4; ++n) {
    const RightModule row = RightModule::defining(tr(full_matrix_algebra(n)));
    expect_coefficients(cdim(row), {1.0 / static_cast<double>(n)});
    expect_coefficients(cdim(row), block_oracle(row));
  }
}

TEST(Cdim, SingleGeneratorOfRowModule) {
  const RightModule row = RightModule::defining(tr(full_matrix_algebra(2)));
  Vector e1 = Vector::Zero(2);
  e1(0) = 1.0;
  expect_coefficients(cdim(row, {e1}), {0.5});
}

TEST(Cdim, RedundantGeneratorLeavesItUnchanged) {
  const RightModule row = RightModule::defining(tr(full_matrix_algebra(3)));
  Rng rng(5);
  const Vector g = rng.gaussian_vector(3);
  const CenterElement one = cdim(row, {g});
  const CenterElement two = cdim(row, {g, 2.0 * g, Vector::Zero(3)});
  EXPECT_LT((one.coefficients - two.coefficients).norm(), 1e-10);
  EXPECT_EQ(module_projection(row, {g, 2.0 * g}).copies, 2);
}

TEST(Cdim, StandardModuleOverTensorSubalgebra) {
  const RightModule l2 = RightModule::standard(tr(full_matrix_algebra(4)));
  const RightModule over = l2.restricted(tensor_identity(full_matrix_algebra(2), 2));
  expect_coefficients(cdim(over), {4.0});
  expect_coefficients(cdim(over), block_oracle(over));
}

TEST(Cdim, ProjectionAndBlockFormulaAgreeOnSums) {
  const StarAlgebra a = direct_sum({full_matrix_algebra(2), full_matrix_algebra(1)});
  const RightModule h = direct_sum(direct_sum(RightModule::standard(tr(a)), RightModule::defining(tr(a))), RightModule::defining(tr(a)));
  const std::vector<double> expected = block_oracle(h);
  expect_coefficients(cdim(h), expected);
  expect_coefficients(cdim_block_formula(h), expected);
}

TEST(Cdim, LeftModuleColumnAction) {
  const LeftModule col = LeftModule::defining(tr(full_matrix_algebra(3)));
  expect_coefficients(cdim(col), {1.0 / 3.0});
  expect_coefficients(cdim_block_formula(col), {1.0 / 3.0});
}

TEST(Cdim, IndependentOfTraceScaling) {
  // E_Z is normalized, so rescaling kappa leaves the center-valued dimension alone
  const RightModule row = RightModule::defining(TraceFunctional::matrix_trace(full_matrix_algebra(2), 3.0));
  expect_coefficients(cdim(row), {0.5});
}

TEST(BoundedOperator, ZeroVector) {
  const RightModule row = RightModule::defining(tr(full_matrix_algebra(2)));
  EXPECT_LT(left_bounded_operator(Vector::Zero(2), row).norm(), 1e-15);
}

TEST(BoundedOperator, StandardModuleGivesLeftMultiplication) {
  const StarAlgebra n = direct_sum({full_matrix_algebra(2), full_matrix_algebra(1)});
  const RightModule l2 = RightModule::standard(tr(n));
  Rng rng(3);
  const Matrix x = n.random_element(rng);
  const Matrix lf = left_bounded_operator(l2.gns().hat(x), l2);
  EXPECT_NEAR(linalg::op_norm(lf), linalg::op_norm(x), 1e-10);
}

TEST(Jones, WholeAlgebraGivesIdentity) {
  const GnsSpace l2(tr(full_matrix_algebra(2)));
  EXPECT_LT((jones_projection(l2, full_matrix_algebra(2)) - Matrix::Identity(4, 4)).norm(), 1e-12);
}

TEST(Jones, DiagonalSubalgebraOfM2) {
  const GnsSpace l2(tr(full_matrix_algebra(2)));
  const Matrix e = jones_projection(l2, diagonal_algebra(2));
  EXPECT_EQ(oracle::rank(e), 2);
  EXPECT_LT((e * e - e).norm(), 1e-12);
  EXPECT_LT((e - e.adjoint()).norm(), 1e-12);
  for (int i = 0; i < 2; ++i) {
    Matrix eii = Matrix::Zero(2, 2);
    eii(i, i) = 1.0;
    const Vector v = l2.hat(eii);
    EXPECT_LT((e * v - v).norm(), 1e-12);
  }
}

TEST(Jones, RejectsNonSubalgebra) {
  Rng rng(4);
  const GnsSpace l2(tr(diagonal_algebra(2)));
  EXPECT_THROW(jones_projection(l2, full_matrix_algebra(2)), InclusionError);
}

TEST(BasicConstruction, TrivialInclusion) {
  const StarAlgebra n = full_matrix_algebra(2);
  const BasicConstruction bc(tr(n), n);
  EXPECT_LT((bc.jones() - Matrix::Identity(4, 4)).norm(), 1e-12);
  EXPECT_TRUE(same_span(bc.algebra(), bc.left_image()));
}

TEST(BasicConstruction, ScalarsInsideM2GiveEverything) {
  const BasicConstruction bc(tr(full_matrix_algebra(2)), scalar_algebra(2));
  EXPECT_EQ(bc.algebra().dim(), 16);
  EXPECT_EQ(bc.algebra().dim(), oracle::commutant_dim(bc.l2_over_sub().image().basis(), 4));
}

TEST(BasicConstruction, IndexOfTensorSubalgebra) {
  const BasicConstruction bc(tr(full_matrix_algebra(4)), tensor_identity(full_matrix_algebra(2), 2));
  expect_coefficients(bc.index(), {4.0});
  EXPECT_EQ(bc.algebra().dim(), 64);
}

TEST(PushDown, RecoversN) {
  const StarAlgebra n = full_matrix_algebra(4);
  const StarAlgebra b = tensor_identity(full_matrix_algebra(2), 2);
  const BasicConstruction bc(tr(n), b);
  const ConditionalExpectation eb(tr(n), b);
  Rng rng(21);
  for (int t = 0; t < 5; ++t) {
    const Matrix x = n.random_element(rng), y = n.random_element(rng);
    EXPECT_LT((bc.push_down(bc.left(x) * bc.jones()) - x).norm(), 1e-9);
    EXPECT_LT((bc.push_down(bc.left(x) * bc.jones() * bc.left(y)) - x * eb(y)).norm(), 1e-9);
    const Matrix a = bc.algebra().random_element(rng);
    EXPECT_LT((a * bc.jones() - bc.left(bc.push_down(a)) * bc.jones()).norm(), 1e-9);
  }
}

TEST(InducedTrace, RowModuleGivesOneOnIdentity) {
  for (Index n = 1; n <= 3; ++n) {
    const TraceFunctional t = induced_trace(RightModule::defining(tr(full_matrix_algebra(n))));
    EXPECT_EQ(t.algebra().dim(), 1);
    EXPECT_NEAR(std::abs(t(Matrix::Identity(n, n)) - cplx(1.0)), 0.0, 1e-10);
  }
}

TEST(InducedTrace, SatisfiesDefiningIdentity) {
  // tau(L_f L_f^*) = kappa(<f, f>) = ||L_f 1^||^2 = ||f||^2
  const StarAlgebra n = direct_sum({full_matrix_algebra(2), full_matrix_algebra(1)});
  const RightModule h = direct_sum(RightModule::standard(tr(n)), RightModule::defining(tr(n)));
  const TraceFunctional t = induced_trace(h);
  EXPECT_LT(t.tracial_defect(), 1e-10);
  Rng rng(2);
  for (int i = 0; i < 4; ++i) {
    const Vector f = rng.gaussian_vector(h.space_dim());
    const Matrix lf = left_bounded_operator(f, h);
    EXPECT_NEAR(std::abs(t(lf * lf.adjoint()) - cplx(f.squaredNorm())), 0.0, 1e-9 * f.squaredNorm());
  }
}
