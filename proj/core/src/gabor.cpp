#include "vnlab/gabor.hpp"

#include <cmath>

#include "vnlab/error.hpp"

namespace vnlab {

Window::Window(FiniteAbelianGroup group, Vector values) : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_.size()) throw ShapeMismatch("window length differs from |G|");
  if (!values_.allFinite()) throw ShapeMismatch("window has non-finite entries");
}

Window Window::delta(const FiniteAbelianGroup& group, const Element& at) {
  group.validate(at);
  Vector v = Vector::Zero(group.size());
  v(group.index(at)) = 1.0;
  return Window(group, std::move(v));
}

Window Window::gaussian(const FiniteAbelianGroup& group, Rng& rng) { return Window(group, rng.gaussian_vector(group.size())); }

Matrix tf_shift(const FiniteAbelianGroup& group, const PhasePoint& z) {
  group.validate(z.x);
  group.validate(z.omega);
  const Index n = group.size();
  const Element minus_x = group.negate(z.x);
  Matrix m = Matrix::Zero(n, n);
  for (Index t = 0; t < n; ++t) {
    const Element et = group.element(t);
    m(t, group.index(group.add(et, minus_x))) = character_value(group, z.omega, et);
  }
  return m;
}

cplx cocycle(const FiniteAbelianGroup& group, const PhasePoint& z, const PhasePoint& zp) {
  return std::conj(character_value(group, zp.omega, z.x));
}

Matrix analysis_matrix(const Window& g, const Lattice& lattice) {
  if (!(g.group() == lattice.group())) throw ShapeMismatch("window and lattice live on different groups");
  const Index n = g.group().size();
  Matrix c(static_cast<Index>(lattice.size()), n);
  Index row = 0;
  for (const PhasePoint& z : lattice.elements()) c.row(row++) = (tf_shift(g.group(), z) * g.values()).adjoint();
  return c;
}

Matrix frame_operator(const Window& g, const Lattice& lattice) {
  const Matrix c = analysis_matrix(g, lattice);
  Matrix s = c.adjoint() * c;
  return 0.5 * (s + s.adjoint());
}

double bessel_bound_opt(const Window& g, const Lattice& lattice) {
  return std::max(0.0, linalg::max_eigenvalue(frame_operator(g, lattice)));
}

double bessel_bound_via_synthesis(const Window& g, const Lattice& lattice) {
  const double s = linalg::op_norm(analysis_matrix(g, lattice).adjoint());
  return s * s;
}

}  // namespace vnlab
