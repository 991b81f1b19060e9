#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "vnlab/algebra.hpp"

namespace vnlab {

/// A Hilbert space C^D with a right action of a tracial algebra (N, kappa):
/// a linear, adjoint-preserving map rho with rho(xy) = rho(y) rho(x).
/// The action is stored through the images of the algebra basis.
class RightModule {
 public:
  RightModule(TraceFunctional kappa, std::vector<Matrix> basis_images);

  static RightModule from_map(TraceFunctional kappa, Index space_dim, const std::function<Matrix(const Matrix&)>& rho);
  /// L^2(N, kappa) with n^ . m = (n m)^.
  static RightModule standard(const TraceFunctional& kappa);
  /// C^n with f . x = x^T f, for N a concrete algebra on C^n.
  static RightModule defining(const TraceFunctional& kappa);

  const StarAlgebra& algebra() const { return data_->gns.algebra(); }
  const TraceFunctional& trace() const { return data_->gns.trace(); }
  const GnsSpace& gns() const { return data_->gns; }
  Index space_dim() const { return data_->space_dim; }

  Matrix act(const Matrix& x) const;
  const std::vector<Matrix>& basis_images() const { return data_->basis_images; }
  /// rho(y_k) for the GNS orthonormal elements y_k.
  const std::vector<Matrix>& gns_images() const { return data_->gns_images; }
  /// rho(N) as a *-algebra inside B(H).
  StarAlgebra image() const;
  bool faithful() const { return data_->faithful; }

  /// Same space, action restricted to a subalgebra (with the restricted trace).
  RightModule restricted(const StarAlgebra& sub) const;

 private:
  struct Data {
    GnsSpace gns;
    Index space_dim = 0;
    std::vector<Matrix> basis_images;
    std::vector<Matrix> gns_images;
    bool faithful = false;
  };
  std::shared_ptr<const Data> data_;
};

/// A Hilbert space with a left action pi of a tracial algebra (M, tau).
class LeftModule {
 public:
  LeftModule(TraceFunctional tau, std::vector<Matrix> basis_images);

  static LeftModule from_map(TraceFunctional tau, Index space_dim, const std::function<Matrix(const Matrix&)>& pi);
  /// C^n with the inclusion action, for M a concrete algebra on C^n.
  static LeftModule defining(const TraceFunctional& tau);

  const StarAlgebra& algebra() const { return data_->gns.algebra(); }
  const TraceFunctional& trace() const { return data_->gns.trace(); }
  const GnsSpace& gns() const { return data_->gns; }
  Index space_dim() const { return data_->space_dim; }

  Matrix act(const Matrix& x) const;
  const std::vector<Matrix>& basis_images() const { return data_->basis_images; }
  const std::vector<Matrix>& gns_images() const { return data_->gns_images; }
  StarAlgebra image() const;
  bool faithful() const { return data_->faithful; }

  /// The same space as a right module over the opposite algebra, realized as
  /// the transposed algebra M^T with x^T acting as pi(x).
  RightModule as_right() const;

 private:
  struct Data {
    GnsSpace gns;
    Index space_dim = 0;
    std::vector<Matrix> basis_images;
    std::vector<Matrix> gns_images;
    bool faithful = false;
  };
  std::shared_ptr<const Data> data_;
};

/// Orthogonal direct sum of two right modules over the same (N, kappa).
RightModule direct_sum(const RightModule& a, const RightModule& b);

/// An element sum_k c_k z_k of a center, with z_k its minimal central projections.
struct CenterElement {
  std::vector<Matrix> projections;
  RealVector coefficients;

  double sup_norm() const { return coefficients.size() ? coefficients.cwiseAbs().maxCoeff() : 0.0; }
  Matrix element() const;
  /// The same element read in the transposed (opposite) algebra.
  CenterElement transposed() const;
};

/// The data of an isomorphism H = p L^2(N, kappa)^k.
struct ModuleProjection {
  Index copies = 0;
  /// p, a (k d) x (k d) projection in M_k(N) acting on L^2(N)^k.
  Matrix projection;
  /// (xi_j) -> sum_j g_j . xi_j, a D x (k d) matrix.
  Matrix synthesis;
  /// Polar part of the synthesis map: an N-linear partial isometry with
  /// initial projection p and final space H.
  Matrix partial_isometry;
};

/// Greedy choice from the standard basis of H until the N-span closes.
std::vector<Vector> select_generators(const RightModule& h);

/// Throws SpanError when the generators do not span H over N.
ModuleProjection module_projection(const RightModule& h, const std::vector<Vector>& generators);

/// Center-valued dimension (Tr (x) E_Z)(p), read on the minimal central projections of N.
CenterElement cdim(const RightModule& h, const std::vector<Vector>& generators);
CenterElement cdim(const RightModule& h);
/// For a left module: computed on the opposite right module and read back in M.
CenterElement cdim(const LeftModule& h);

/// Independent route: on each minimal central projection z of N the value is
/// dim(H z) / dim(N z).
CenterElement cdim_block_formula(const RightModule& h);
CenterElement cdim_block_formula(const LeftModule& h);

/// L_f : L^2(N, kappa) -> H, n^ -> f . n, in GNS orthonormal coordinates.
Matrix left_bounded_operator(const Vector& f, const RightModule& h);
/// R_f : L^2(M, tau) -> H, m^ -> m f.
Matrix right_bounded_operator(const Vector& f, const LeftModule& h);

/// The trace on the commutant of the right action obtained by transporting
/// kappa (x) Tr through H = p L^2(N)^k. It satisfies tau(T T^*) = kappa(T^* T)
/// for every N-linear T : L^2(N) -> H. `target` must lie in the commutant.
TraceFunctional induced_trace(const RightModule& h, const StarAlgebra& target);
TraceFunctional induced_trace(const RightModule& h);

/// Projection of L^2(N, kappa) onto the closure of B^.
Matrix jones_projection(const GnsSpace& l2, const StarAlgebra& sub);

/// The basic construction for B inside (N, kappa), realized on L^2(N, kappa).
class BasicConstruction {
 public:
  BasicConstruction(TraceFunctional kappa, StarAlgebra sub);

  const GnsSpace& gns() const { return l2_.gns(); }
  /// L^2(N, kappa) as a right N-module.
  const RightModule& l2() const { return l2_; }
  const StarAlgebra& subalgebra() const { return sub_; }
  const Matrix& jones() const { return jones_; }
  /// The algebra generated by the left action of N and e_B.
  const StarAlgebra& algebra() const { return algebra_; }
  /// Left action of N on L^2(N).
  const StarAlgebra& left_image() const { return left_image_; }
  /// L^2(N, kappa) as a right B-module.
  const RightModule& l2_over_sub() const { return l2_over_sub_; }
  /// cdim(L^2(N, kappa)_B).
  const CenterElement& index() const { return index_; }
  /// Z(B) = Z(N).
  bool centers_match() const { return centers_match_; }

  /// Induced trace on the basic construction algebra.
  const TraceFunctional& induced() const { return induced_; }

  /// n in N with a e_B = n e_B, via n = cdim(L^2(N)_B) E_N(a e_B). Requires
  /// matching centers and a strictly positive index; throws PreconditionError.
  Matrix push_down(const Matrix& a) const;

  /// Center-valued trace of the basic construction algebra.
  Matrix center_valued_trace(const Matrix& a) const;

  /// lambda(n) on L^2(N).
  Matrix left(const Matrix& n) const { return l2_.gns().left(n); }

 private:
  RightModule l2_;
  StarAlgebra sub_;
  Matrix jones_;
  StarAlgebra left_image_;
  StarAlgebra algebra_;
  RightModule l2_over_sub_;
  CenterElement index_;
  bool centers_match_ = false;
  TraceFunctional induced_;
  std::shared_ptr<const ConditionalExpectation> onto_left_;
  std::shared_ptr<const CenterValuedTrace> center_trace_;
};

}  // namespace vnlab
