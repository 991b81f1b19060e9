#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vnlab/check.hpp"
#include "vnlab/vnmod.hpp"

namespace vnlab {

/// A Hilbert space with commuting left (M, tau) and right (N, kappa) actions.
class Bimodule {
 public:
  /// Throws ShapeMismatch for different spaces and PreconditionError when the
  /// actions fail to commute on basis pairs (1e-10, relative to the norms).
  Bimodule(LeftModule left, RightModule right);

  const LeftModule& left() const { return left_; }
  const RightModule& right() const { return right_; }
  Index space_dim() const { return left_.space_dim(); }

  double commutation_defect() const { return commutation_defect_; }
  bool faithful() const { return left_.faithful() && right_.faithful(); }

  /// Replaces each side by its image algebra, with the trace transported
  /// through the central support: tau_0(pi(m)) = tau(m z).
  Bimodule reduced() const;

  /// The same bimodule with a different trace on one side.
  Bimodule with_left_trace(const TraceFunctional& tau) const;
  Bimodule with_right_trace(const TraceFunctional& kappa) const;

 private:
  LeftModule left_;
  RightModule right_;
  double commutation_defect_ = 0.0;
};

Matrix left_bounded_operator(const Vector& f, const Bimodule& bm);
Matrix right_bounded_operator(const Vector& f, const Bimodule& bm);

struct AlignmentReport {
  bool aligned = false;
  /// max over the basis of M of |tau(m) - tau~(pi(m))|.
  double deviation = 0.0;
};

/// Compares tau with the trace induced from kappa on the commutant of the right action.
AlignmentReport check_alignment(const Bimodule& bm, double tol = tol::kDimension);

/// The hypotheses of the left/right bounded vector theorem, each with its
/// measured deviation: finite generation, faithfulness, equal centers, alignment.
std::vector<Check> theorem_hypotheses(const Bimodule& bm);

struct BoundedVectorReport {
  std::int64_t id = 0;
  double left_norm = 0.0;
  double right_norm = 0.0;
  /// || pi(cdim(_M H)) rho(cdim(H_N)) ||.
  double constant = 0.0;
  /// C ||L_f|| - ||R_f|| and C ||R_f|| - ||L_f||.
  double right_slack = 0.0;
  double left_slack = 0.0;
  /// Relative gap | ||L_f|| - ||R_f|| |, only meaningful in the commutant case.
  double equality_gap = 0.0;
  bool commutant_case = false;
  bool passed = false;
};

/// Checks the hypotheses (HypothesisError on the first failure) and then the
/// two-sided norm inequality for `trials` seeded Gaussian vectors.
std::vector<BoundedVectorReport> verify_left_right_bounded(const Bimodule& bm, int trials, std::uint64_t seed,
                                                          double tol = tol::kDimension);

/// Coefficients of a central operator X on H against the images q_k of the
/// minimal central projections: <X, q_k> / Tr q_k.
RealVector central_coefficients(const Matrix& x, const std::vector<Matrix>& images);

/// The proof identity cdim(_M H) cdim(H_N) = cdim(_M L^2(N~)), both sides
/// as coefficients on the minimal central projections of M.
struct ProofIdentity {
  RealVector product;
  RealVector commutant_module;
};
ProofIdentity proof_identity(const Bimodule& bm);

/// H with its full right commutant: N = pi(M)'^T acting by x^T -> x, and the
/// trace on N induced from tau, which is the one aligned with tau.
Bimodule commutant_bimodule(const LeftModule& h);

/// Norms of L_f over N and over B, and the constant ||cdim(L^2(N)_B)||.
struct SubalgebraBound {
  double norm_over_n = 0.0;
  double norm_over_b = 0.0;
  double constant = 0.0;
};
SubalgebraBound subalgebra_bound(const BasicConstruction& bc, const Vector& f);

struct InstanceShape {
  Index n = 1;  // right block M_n
  Index m = 1;  // multiplicity
  Index d = 1;  // left factor M_d, d | m
};

/// A random bimodule satisfying the theorem's hypotheses: per block,
/// H = C^n (x) C^m, N = M_n acting by x^T (x) 1, M = 1 (x) u (M_d (x) 1) u^*,
/// random block weights for kappa and tau the restriction of the induced trace.
/// Throws ResourceLimit above space_cap.
Bimodule random_instance(std::uint64_t seed, int block_count, Index space_cap = 32);
Bimodule random_instance(std::uint64_t seed, const std::vector<InstanceShape>& shapes, Index space_cap = 64);
/// The same instance with tau rescaled by 3/2 on the first block.
Bimodule misaligned_instance(std::uint64_t seed, int block_count, Index space_cap = 32);

}  // namespace vnlab
