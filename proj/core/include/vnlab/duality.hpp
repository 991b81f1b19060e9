#pragma once

#include <vector>

#include "vnlab/bimodule.hpp"
#include "vnlab/gabor.hpp"
#include "vnlab/rational.hpp"

namespace vnlab {

/// L^2(G) as a bimodule: the twisted group algebra of the lattice acts on the
/// left by time-frequency shifts, that of the adjoint lattice (opposite
/// cocycle) on the right by lambda(w) -> pi(w). Traces tau(delta_z) = [z = 0]
/// and kappa(delta_w) = covol [w = 0].
struct GaborBimodule {
  Lattice lattice;
  Lattice adjoint;
  Rational covol;
  TwistedGroupAlgebra left_algebra;
  TwistedGroupAlgebra right_algebra;
  Bimodule bimodule;
};

/// Throws ResourceLimit when |G| exceeds group_cap.
GaborBimodule gabor_bimodule(const Lattice& lattice, Index group_cap = 64);

/// Commutant of the left action against the right action, both containments,
/// plus exact commutation of the two actions.
std::vector<Check> verify_commutant(const GaborBimodule& gb, double tol = tol::kSpan);

/// cdim(_M L^2(G)) = covol and cdim(L^2(G)_N) = 1/covol on every block, the
/// block-formula cross-check on both sides, and the product identity.
std::vector<Check> verify_cdim_covolume(const GaborBimodule& gb, double tol = tol::kDimension);

struct BesselDuality {
  double bound = 0.0;          // B over the lattice
  double adjoint_bound = 0.0;  // B over the adjoint lattice
  double covol = 0.0;
  double right_norm_sq = 0.0;  // ||R_g||^2
  double left_norm_sq = 0.0;   // ||L_g||^2
  std::vector<Check> checks;
};

/// B_adj = covol B, ||R_g||^2 = B and covol ||L_g||^2 = B_adj.
BesselDuality verify_bessel_duality(const Window& g, const GaborBimodule& gb, double tol = 1e-8);

}  // namespace vnlab
