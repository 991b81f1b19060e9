#pragma once

#include "vnlab/groups.hpp"
#include "vnlab/linalg.hpp"

namespace vnlab {

/// A window function g in L^2(G), indexed by the canonical order of G.
class Window {
 public:
  Window(FiniteAbelianGroup group, Vector values);

  static Window delta(const FiniteAbelianGroup& group, const Element& at);
  static Window gaussian(const FiniteAbelianGroup& group, Rng& rng);

  const FiniteAbelianGroup& group() const { return group_; }
  const Vector& values() const { return values_; }

 private:
  FiniteAbelianGroup group_;
  Vector values_;
};

/// pi(x, w) f(t) = w(t) f(t - x), as a |G| x |G| unitary.
Matrix tf_shift(const FiniteAbelianGroup& group, const PhasePoint& z);

/// c(z, z') = conj(w'(x)); satisfies pi(z) pi(z') = c(z, z') pi(z + z').
cplx cocycle(const FiniteAbelianGroup& group, const PhasePoint& z, const PhasePoint& zp);

/// Rows are conj(pi(z) g) for z in the lattice, so (C f)(z) = <f, pi(z) g>.
Matrix analysis_matrix(const Window& g, const Lattice& lattice);

/// S = C^* C.
Matrix frame_operator(const Window& g, const Lattice& lattice);

/// Optimal Bessel bound: the largest eigenvalue of the frame operator.
double bessel_bound_opt(const Window& g, const Lattice& lattice);

/// The same bound computed as the squared largest singular value of the
/// synthesis map; kept as an independent self-check of the eigenvalue path.
double bessel_bound_via_synthesis(const Window& g, const Lattice& lattice);

}  // namespace vnlab
