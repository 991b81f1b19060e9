#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "vnlab/groups.hpp"
#include "vnlab/linalg.hpp"

namespace vnlab {

/// A unital, adjoint-closed subalgebra of n x n complex matrices, held as a
/// Hilbert-Schmidt orthonormal basis. Finite-dimensional von Neumann algebras
/// are exactly these. Copies share the immutable basis.
class StarAlgebra {
 public:
  StarAlgebra() = default;

  /// Trusted constructor: `basis` must already be HS-orthonormal and span a
  /// unital *-algebra. Use generate_algebra() for arbitrary generators.
  static StarAlgebra from_orthonormal_basis(Index ambient_dim, std::vector<Matrix> basis);

  Index ambient_dim() const { return data_ ? data_->n : 0; }
  Index dim() const { return data_ ? static_cast<Index>(data_->basis.size()) : 0; }
  const std::vector<Matrix>& basis() const { return data_->basis; }
  /// n^2 x dim matrix whose columns are the vectorized basis.
  const Matrix& basis_matrix() const { return data_->columns; }

  /// HS coordinates <x, b_i> of (the projection of) x.
  Vector coords(const Matrix& x) const;
  Matrix element(const Vector& coords) const;
  Matrix project(const Matrix& x) const { return element(coords(x)); }
  /// Frobenius distance from x to the span.
  double distance(const Matrix& x) const;
  /// distance(x) <= tol * max(1, ||x||_F).
  bool contains(const Matrix& x, double tol = tol::kSpan) const;

  Matrix random_element(Rng& rng) const;
  Matrix random_self_adjoint(Rng& rng) const;

  /// Largest distance from the span of a basis product or adjoint.
  double closure_defect() const;
  double identity_defect() const { return distance(Matrix::Identity(ambient_dim(), ambient_dim())); }

  /// { x^T : x in A }, a concrete model of the opposite algebra.
  StarAlgebra transposed() const;
  /// { u x u^* : x in A } for a unitary u.
  StarAlgebra conjugated(const Matrix& u) const;

 private:
  struct Data {
    Index n = 0;
    std::vector<Matrix> basis;
    Matrix columns;
  };
  std::shared_ptr<const Data> data_;
};

/// max over inner basis elements of their distance to `outer`.
double containment_defect(const StarAlgebra& outer, const StarAlgebra& inner);
bool contains(const StarAlgebra& outer, const StarAlgebra& inner, double tol = tol::kSpan);
bool same_span(const StarAlgebra& a, const StarAlgebra& b, double tol = tol::kSpan);

/// Smallest unital *-subalgebra of M_n containing `gens`, by closing the span
/// of words under right multiplication with the generators and their adjoints.
StarAlgebra generate_algebra(Index n, const std::vector<Matrix>& gens);
StarAlgebra generate_algebra(const std::vector<Matrix>& gens);

/// { X : X a = a X for all a in A }.
StarAlgebra commutant(const StarAlgebra& a);
StarAlgebra center(const StarAlgebra& a);

/// Minimal central projections, mutually orthogonal, summing to the identity,
/// in a canonical order that does not depend on `seed`. Obtained by spectral
/// grouping of a random self-adjoint central element; retried at most five
/// times before SpectralSplitError.
std::vector<Matrix> minimal_central_projections(const StarAlgebra& a, std::uint64_t seed = 0x5eed);

/// dim(A z) for a central projection z of A.
Index block_dimension(const StarAlgebra& a, const Matrix& central_projection);

// Concrete algebras used throughout the tests and instance generators.
StarAlgebra full_matrix_algebra(Index n);
StarAlgebra scalar_algebra(Index n);
StarAlgebra diagonal_algebra(Index n);
/// A (x) 1_m acting on C^n (x) C^m.
StarAlgebra tensor_identity(const StarAlgebra& a, Index m);
/// 1_m (x) A acting on C^m (x) C^n.
StarAlgebra identity_tensor(Index m, const StarAlgebra& a);
/// Block-diagonal direct sum.
StarAlgebra direct_sum(const std::vector<StarAlgebra>& parts);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const std::vector<Matrix>& blocks);

/// A positive faithful trace on a StarAlgebra, stored through its values on
/// the algebra basis. Equivalently tau(x) = Tr(D x) for the density
/// D = sum_i tau(b_i) b_i^*, which lies in the center. Construction checks the
/// trace property and faithfulness and throws FaithfulnessError otherwise.
class TraceFunctional {
 public:
  TraceFunctional() = default;
  TraceFunctional(StarAlgebra algebra, Vector values_on_basis);

  static TraceFunctional from_function(const StarAlgebra& algebra, const std::function<cplx(const Matrix&)>& f);
  /// scale * Tr(x).
  static TraceFunctional matrix_trace(const StarAlgebra& algebra, double scale = 1.0);

  const StarAlgebra& algebra() const { return algebra_; }
  const Vector& values() const { return values_; }
  const Matrix& density() const { return density_; }

  cplx operator()(const Matrix& x) const;
  /// Gram matrix G_ij = tau(b_i^* b_j), Hermitian positive definite.
  Matrix gram() const;
  /// max_i ||[D, b_i]||_F; zero exactly for traces.
  double tracial_defect() const;

  /// The restriction to a subalgebra of algebra().
  TraceFunctional restricted(const StarAlgebra& sub) const;
  TraceFunctional scaled(double factor) const;

 private:
  StarAlgebra algebra_;
  Vector values_;
  Matrix density_;
};

/// The GNS space L^2(A, tau) in orthonormal coordinates: x^ = L^* coords(x)
/// where tau's Gram matrix is L L^*.
class GnsSpace {
 public:
  GnsSpace() = default;
  explicit GnsSpace(TraceFunctional trace);

  const StarAlgebra& algebra() const { return trace_.algebra(); }
  const TraceFunctional& trace() const { return trace_; }
  Index dim() const { return algebra().dim(); }

  Vector hat(const Matrix& x) const;
  Matrix element(const Vector& v) const;
  Vector unit() const { return unit_; }
  /// y_k with (y_k)^ = e_k.
  const std::vector<Matrix>& orthonormal_elements() const { return onb_; }

  /// Left multiplication: y^ -> (x y)^.
  Matrix left(const Matrix& x) const;
  /// Right multiplication: y^ -> (y x)^.
  Matrix right(const Matrix& x) const;
  /// J(v) = conjugation() * conj(v), so that J(x^) = (x^*)^.
  const Matrix& conjugation() const { return conjugation_; }
  Vector apply_conjugation(const Vector& v) const { return conjugation_ * v.conjugate(); }

  StarAlgebra left_algebra() const;
  StarAlgebra right_algebra() const;

 private:
  TraceFunctional trace_;
  Matrix chol_;  // lower triangular L
  std::vector<Matrix> onb_;
  Vector unit_;
  Matrix conjugation_;
};

/// The unique trace-preserving conditional expectation E: N -> B, computed as
/// the kappa-orthogonal projection onto B. Throws InclusionError when B is not
/// inside N.
class ConditionalExpectation {
 public:
  ConditionalExpectation() = default;
  ConditionalExpectation(TraceFunctional kappa, StarAlgebra sub);

  Matrix operator()(const Matrix& x) const;
  const StarAlgebra& subalgebra() const { return sub_; }
  const TraceFunctional& trace() const { return kappa_; }

 private:
  TraceFunctional kappa_;
  StarAlgebra sub_;
  std::vector<Matrix> functionals_;  // F_j with kappa(b_j^* x) = sum(F_j .* x)
  Matrix gram_inverse_;
};

/// The center-valued trace E_Z: the trace-preserving expectation onto the
/// center. It does not depend on which faithful trace seeds it.
class CenterValuedTrace {
 public:
  explicit CenterValuedTrace(const StarAlgebra& a);
  explicit CenterValuedTrace(const TraceFunctional& kappa);

  Matrix operator()(const Matrix& x) const { return expectation_(x); }
  const std::vector<Matrix>& projections() const { return projections_; }
  const StarAlgebra& center() const { return expectation_.subalgebra(); }
  /// Coefficients c_k of a central element sum_k c_k z_k.
  Vector coefficients(const Matrix& central) const;

 private:
  ConditionalExpectation expectation_;
  std::vector<Matrix> projections_;
};

enum class CocycleFlavor { plain, opposite };

/// The twisted group algebra of a lattice on l^2(lattice), spanned by the
/// c-projective regular representation lambda_c(z) delta_z' = c(z, z') delta_{z+z'}.
struct TwistedGroupAlgebra {
  Lattice lattice;
  CocycleFlavor flavor = CocycleFlavor::plain;
  /// lambda_c(z) in lattice element order.
  std::vector<Matrix> unitaries;
  /// Basis lambda_c(z) / sqrt(|lattice|), same order.
  StarAlgebra algebra;
  /// tau(lambda_c(z)) = [z = 0].
  TraceFunctional trace;
};

TwistedGroupAlgebra twisted_group_algebra(const Lattice& lattice, CocycleFlavor flavor);

}  // namespace vnlab
