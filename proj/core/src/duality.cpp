#include "vnlab/duality.hpp"

#include <cmath>
#include <sstream>

#include "vnlab/error.hpp"

namespace vnlab {

namespace {

// pi(z) / sqrt(|lattice|), the image of the normalized basis element lambda(z).
std::vector<Matrix> shift_images(const TwistedGroupAlgebra& a) {
  const FiniteAbelianGroup& g = a.lattice.group();
  const double norm = std::sqrt(static_cast<double>(a.lattice.size()));
  std::vector<Matrix> images;
  for (const PhasePoint& z : a.lattice.elements()) images.push_back(tf_shift(g, z) / norm);
  return images;
}

std::string block_name(const std::string& what, std::size_t k) { return what + "[" + std::to_string(k) + "]"; }

}  // namespace

GaborBimodule gabor_bimodule(const Lattice& lattice, Index group_cap) {
  const FiniteAbelianGroup& g = lattice.group();
  if (static_cast<Index>(g.size()) > group_cap) {
    std::ostringstream msg;
    msg << "group of order " << g.size() << " exceeds the cap " << group_cap;
    throw ResourceLimit(msg.str());
  }
  const Lattice adj = adjoint_lattice(lattice);
  const Rational covol = covolume(lattice);
  TwistedGroupAlgebra m = twisted_group_algebra(lattice, CocycleFlavor::plain);
  TwistedGroupAlgebra n = twisted_group_algebra(adj, CocycleFlavor::opposite);
  const LeftModule left(m.trace, shift_images(m));
  // The opposite cocycle makes lambda(w) -> pi(w) anti-multiplicative.
  RightModule right(n.trace.scaled(covol.to_double()), shift_images(n));
  Bimodule bm(left, right);
  return GaborBimodule{lattice, adj, covol, std::move(m), std::move(n), std::move(bm)};
}

std::vector<Check> verify_commutant(const GaborBimodule& gb, double tol) {
  const Bimodule& bm = gb.bimodule;
  const StarAlgebra comm = commutant(bm.left().image());
  const StarAlgebra right = bm.right().image();
  std::vector<Check> out;
  out.push_back(defect_check("actions commute", bm.commutation_defect(), tol));
  out.push_back(defect_check("adjoint action inside commutant", containment_defect(comm, right), tol));
  out.push_back(defect_check("commutant inside adjoint action", containment_defect(right, comm), tol));
  out.push_back(absolute_check("commutant dimension", static_cast<double>(comm.dim()), static_cast<double>(right.dim()), 0.0));
  return out;
}

std::vector<Check> verify_cdim_covolume(const GaborBimodule& gb, double tol) {
  const Bimodule& bm = gb.bimodule;
  const double covol = gb.covol.to_double();
  const CenterElement cl = cdim(bm.left());
  const CenterElement cr = cdim(bm.right());
  const CenterElement bl = cdim_block_formula(bm.left());
  const CenterElement br = cdim_block_formula(bm.right());
  std::vector<Check> out;
  for (Index k = 0; k < cl.coefficients.size(); ++k) {
    out.push_back(absolute_check(block_name("cdim left = covol", k), cl.coefficients(k), covol, tol));
    out.push_back(absolute_check(block_name("cdim left block formula", k), cl.coefficients(k), bl.coefficients(k), tol));
  }
  for (Index k = 0; k < cr.coefficients.size(); ++k) {
    out.push_back(absolute_check(block_name("cdim right = 1/covol", k), cr.coefficients(k), 1.0 / covol, tol));
    out.push_back(absolute_check(block_name("cdim right block formula", k), cr.coefficients(k), br.coefficients(k), tol));
  }
  std::vector<Matrix> images;
  for (const Matrix& z : cl.projections) images.push_back(bm.left().act(z));
  const RealVector product = central_coefficients(bm.left().act(cl.element()) * bm.right().act(cr.element()), images);
  for (Index k = 0; k < product.size(); ++k)
    out.push_back(absolute_check(block_name("cdim left * cdim right = 1", k), product(k), 1.0, tol));
  return out;
}

BesselDuality verify_bessel_duality(const Window& g, const GaborBimodule& gb, double tol) {
  if (!(g.group() == gb.lattice.group())) throw ShapeMismatch("window and lattice live on different groups");
  BesselDuality out;
  out.bound = bessel_bound_opt(g, gb.lattice);
  out.adjoint_bound = bessel_bound_opt(g, gb.adjoint);
  out.covol = gb.covol.to_double();
  const double r = linalg::op_norm(right_bounded_operator(g.values(), gb.bimodule));
  const double l = linalg::op_norm(left_bounded_operator(g.values(), gb.bimodule));
  out.right_norm_sq = r * r;
  out.left_norm_sq = l * l;

  const double scaled = out.covol * out.bound;
  const double dev = std::abs(out.adjoint_bound - scaled) / std::max(1.0, out.bound);
  out.checks.push_back({"adjoint bound = covol * bound", dev <= tol, out.adjoint_bound, scaled, tol, dev});
  out.checks.push_back(relative_check("||R_g||^2 = bound", out.right_norm_sq, out.bound, tol));
  out.checks.push_back(relative_check("covol * ||L_g||^2 = adjoint bound", out.covol * out.left_norm_sq, out.adjoint_bound, tol));
  return out;
}

}  // namespace vnlab
