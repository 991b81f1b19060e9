#include "vnlab/bimodule.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vnlab/error.hpp"

namespace vnlab {

namespace {

constexpr double kCommuteTol = 1e-10;
constexpr double kSupportTol = 1e-8;

// Central support of an action: the sum of minimal central projections
// with a nonzero image.
Matrix central_support(const StarAlgebra& a, const std::function<Matrix(const Matrix&)>& act) {
  const Index n = a.ambient_dim();
  Matrix z = Matrix::Zero(n, n);
  for (const Matrix& p : minimal_central_projections(a))
    if (act(p).norm() > kSupportTol) z += p;
  return z;
}

// Solves act(m) = x in the least-squares sense over the algebra coordinates.
Matrix preimage(const StarAlgebra& a, const std::vector<Matrix>& basis_images, const Matrix& x) {
  const Index d = x.rows();
  Matrix cols(d * d, a.dim());
  for (Index i = 0; i < a.dim(); ++i) cols.col(i) = linalg::vec(basis_images[static_cast<std::size_t>(i)]);
  const linalg::Svd svd = linalg::thin_svd(cols);
  const double cut = tol::kRank * std::max(1.0, svd.sigma.size() ? svd.sigma(0) : 0.0);
  Vector c = Vector::Zero(a.dim());
  const Vector rhs = svd.u.adjoint() * linalg::vec(x);
  for (Index k = 0; k < svd.sigma.size(); ++k)
    if (svd.sigma(k) > cut) c += svd.v.col(k) * (rhs(k) / svd.sigma(k));
  return a.element(c);
}

// The values tau(m z) for preimages m of the basis of `image`.
Vector transported_values(const TraceFunctional& t, const std::vector<Matrix>& basis_images, const Matrix& z,
                          const StarAlgebra& image) {
  Vector v(image.dim());
  for (Index i = 0; i < image.dim(); ++i) {
    const Matrix m = preimage(t.algebra(), basis_images, image.basis()[static_cast<std::size_t>(i)]);
    v(i) = t(m * z);
  }
  return v;
}

StarAlgebra image_of_center(const StarAlgebra& a, const std::function<Matrix(const Matrix&)>& act, Index dim) {
  std::vector<Matrix> images;
  const StarAlgebra z = center(a);
  for (const Matrix& b : z.basis()) images.push_back(act(b));
  Matrix cols(dim * dim, static_cast<Index>(images.size()));
  for (std::size_t i = 0; i < images.size(); ++i) cols.col(static_cast<Index>(i)) = linalg::vec(images[i]);
  const Matrix q = linalg::range_basis(cols);
  std::vector<Matrix> basis;
  for (Index k = 0; k < q.cols(); ++k) basis.push_back(linalg::unvec(q.col(k), dim));
  return StarAlgebra::from_orthonormal_basis(dim, std::move(basis));
}

Matrix embed(const Matrix& block, Index offset, Index dim) {
  Matrix out = Matrix::Zero(dim, dim);
  out.block(offset, offset, block.rows(), block.cols()) = block;
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Bimodule

Bimodule::Bimodule(LeftModule left, RightModule right) : left_(std::move(left)), right_(std::move(right)) {
  if (left_.space_dim() != right_.space_dim()) throw ShapeMismatch("left and right modules live on different spaces");
  double worst = 0.0;
  for (const Matrix& a : left_.basis_images())
    for (const Matrix& b : right_.basis_images())
      worst = linalg::nan_max(worst, (a * b - b * a).norm() / std::max(1.0, a.norm() * b.norm()));
  commutation_defect_ = worst;
  if (worst > kCommuteTol) {
    std::ostringstream msg;
    msg << "left and right actions do not commute (defect " << worst << ")";
    throw PreconditionError(msg.str());
  }
}

Bimodule Bimodule::reduced() const {
  const auto pi = [&](const Matrix& m) { return left_.act(m); };
  const auto rho = [&](const Matrix& n) { return right_.act(n); };

  const StarAlgebra m0 = left_.image();
  const Matrix zl = central_support(left_.algebra(), pi);
  TraceFunctional tau0(m0, transported_values(left_.trace(), left_.basis_images(), zl, m0));

  // rho(N) is anti-isomorphic to N/ker; model it as rho(N)^T acting by x^T -> x.
  const StarAlgebra n0 = right_.image();
  const Matrix zr = central_support(right_.algebra(), rho);
  TraceFunctional kappa0(n0.transposed(), transported_values(right_.trace(), right_.basis_images(), zr, n0));
  return Bimodule(LeftModule(std::move(tau0), m0.basis()), RightModule(std::move(kappa0), n0.basis()));
}

Bimodule Bimodule::with_left_trace(const TraceFunctional& tau) const {
  return Bimodule(LeftModule(tau, left_.basis_images()), right_);
}

Bimodule Bimodule::with_right_trace(const TraceFunctional& kappa) const {
  return Bimodule(left_, RightModule(kappa, right_.basis_images()));
}

Matrix left_bounded_operator(const Vector& f, const Bimodule& bm) { return left_bounded_operator(f, bm.right()); }
Matrix right_bounded_operator(const Vector& f, const Bimodule& bm) { return right_bounded_operator(f, bm.left()); }

// ---------------------------------------------------------------------------
// Alignment and hypotheses

AlignmentReport check_alignment(const Bimodule& bm, double tol) {
  const TraceFunctional induced = induced_trace(bm.right(), bm.left().image());
  double worst = 0.0;
  for (const Matrix& b : bm.left().algebra().basis())
    worst = linalg::nan_max(worst, std::abs(bm.left().trace()(b) - induced(bm.left().act(b))));
  return {worst <= tol, worst};
}

std::vector<Check> theorem_hypotheses(const Bimodule& bm) {
  std::vector<Check> out;
  auto generated = [](const RightModule& h) {
    try {
      module_projection(h, select_generators(h));
      return 0.0;
    } catch (const SpanError&) {
      return 1.0;
    }
  };
  out.push_back(defect_check("left module finitely generated", generated(bm.left().as_right()), 0.0));
  out.push_back(defect_check("right module finitely generated", generated(bm.right()), 0.0));
  out.push_back(defect_check("left action faithful", bm.left().faithful() ? 0.0 : 1.0, 0.0));
  out.push_back(defect_check("right action faithful", bm.right().faithful() ? 0.0 : 1.0, 0.0));

  const Index dim = bm.space_dim();
  const StarAlgebra zl = image_of_center(bm.left().algebra(), [&](const Matrix& x) { return bm.left().act(x); }, dim);
  const StarAlgebra zr = image_of_center(bm.right().algebra(), [&](const Matrix& x) { return bm.right().act(x); }, dim);
  double centers = std::max(containment_defect(zl, zr), containment_defect(zr, zl));
  if (zl.dim() != zr.dim()) centers = std::max(centers, 1.0);
  out.push_back(defect_check("centers coincide", centers, tol::kSpan));

  double aligned = 1.0;
  try {
    aligned = check_alignment(bm).deviation;
  } catch (const Error&) {
    // the induced functional is not a faithful trace on M
  }
  out.push_back(defect_check("traces aligned", aligned, tol::kDimension));
  return out;
}

// ---------------------------------------------------------------------------
// Bounded vectors

RealVector central_coefficients(const Matrix& x, const std::vector<Matrix>& images) {
  RealVector c(static_cast<Index>(images.size()));
  for (std::size_t k = 0; k < images.size(); ++k) {
    const double tr = images[k].trace().real();
    c(static_cast<Index>(k)) = tr > 0 ? linalg::hs_inner(x, images[k]).real() / tr : 0.0;
  }
  return c;
}

std::vector<BoundedVectorReport> verify_left_right_bounded(const Bimodule& bm, int trials, std::uint64_t seed, double tol) {
  for (const Check& c : theorem_hypotheses(bm))
    if (!c.passed) throw HypothesisError(c.name, c.deviation);

  const CenterElement cl = cdim(bm.left());
  const CenterElement cr = cdim(bm.right());
  const double constant = linalg::op_norm(bm.left().act(cl.element()) * bm.right().act(cr.element()));
  const bool commutant_case = same_span(bm.right().image(), commutant(bm.left().image()));

  std::vector<BoundedVectorReport> out;
  out.reserve(static_cast<std::size_t>(std::max(trials, 0)));
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, "bounded-vector", static_cast<std::uint64_t>(t)));
    const Vector f = rng.gaussian_vector(bm.space_dim());
    BoundedVectorReport r;
    r.id = t;
    r.left_norm = linalg::op_norm(left_bounded_operator(f, bm));
    r.right_norm = linalg::op_norm(right_bounded_operator(f, bm));
    r.constant = constant;
    r.right_slack = constant * r.left_norm - r.right_norm;
    r.left_slack = constant * r.right_norm - r.left_norm;
    r.equality_gap = linalg::relative_deviation(r.left_norm, r.right_norm);
    r.commutant_case = commutant_case;
    r.passed = r.right_slack >= -tol && r.left_slack >= -tol && (!commutant_case || r.equality_gap <= tol);
    out.push_back(r);
  }
  return out;
}

ProofIdentity proof_identity(const Bimodule& bm) {
  const CenterElement cl = cdim(bm.left());
  const CenterElement cr = cdim(bm.right());
  const Matrix x = bm.left().act(cl.element()) * bm.right().act(cr.element());
  std::vector<Matrix> images;
  for (const Matrix& z : cl.projections) images.push_back(bm.left().act(z));

  const StarAlgebra ntilde = commutant(bm.right().image());
  const GnsSpace l2(induced_trace(bm.right(), ntilde));
  std::vector<Matrix> acting;
  for (const Matrix& b : bm.left().algebra().basis()) acting.push_back(l2.left(bm.left().act(b)));
  const LeftModule over_m(bm.left().trace(), std::move(acting));
  return {central_coefficients(x, images), cdim(over_m).coefficients};
}

Bimodule commutant_bimodule(const LeftModule& h) {
  const StarAlgebra comm = commutant(h.image());
  const TraceFunctional induced = induced_trace(h.as_right(), comm);
  TraceFunctional kappa(comm.transposed(), induced.values());
  return Bimodule(h, RightModule(std::move(kappa), comm.basis()));
}

SubalgebraBound subalgebra_bound(const BasicConstruction& bc, const Vector& f) {
  SubalgebraBound out;
  out.norm_over_n = linalg::op_norm(left_bounded_operator(f, bc.l2()));
  out.norm_over_b = linalg::op_norm(left_bounded_operator(f, bc.l2_over_sub()));
  out.constant = bc.index().sup_norm();
  return out;
}

// ---------------------------------------------------------------------------
// Random instances

Bimodule random_instance(std::uint64_t seed, const std::vector<InstanceShape>& shapes, Index space_cap) {
  if (shapes.empty()) throw PreconditionError("random instance needs at least one block");
  Index dim = 0;
  for (const InstanceShape& s : shapes) {
    if (s.n < 1 || s.m < 1 || s.d < 1 || s.m % s.d != 0) throw PreconditionError("block shape needs n, m, d >= 1 and d | m");
    dim += s.n * s.m;
  }
  if (dim > space_cap) {
    std::ostringstream msg;
    msg << "instance dimension " << dim << " exceeds the cap " << space_cap;
    throw ResourceLimit(msg.str());
  }
  Rng rng(derive_seed(seed, "random-instance-blocks", shapes.size()));

  std::vector<StarAlgebra> parts;
  for (const InstanceShape& s : shapes) parts.push_back(full_matrix_algebra(s.n));
  const StarAlgebra n = direct_sum(parts);
  std::vector<double> weights;
  for (std::size_t i = 0; i < shapes.size(); ++i) weights.push_back(0.5 + rng.uniform());

  const TraceFunctional kappa = TraceFunctional::from_function(n, [&](const Matrix& x) {
    cplx acc = 0.0;
    Index off = 0;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      acc += weights[i] * x.block(off, off, shapes[i].n, shapes[i].n).trace();
      off += shapes[i].n;
    }
    return acc;
  });
  const RightModule right = RightModule::from_map(kappa, dim, [&](const Matrix& x) {
    Matrix out = Matrix::Zero(dim, dim);
    Index in = 0;
    Index off = 0;
    for (const InstanceShape& s : shapes) {
      const Matrix xi = x.block(in, in, s.n, s.n);
      out.block(off, off, s.n * s.m, s.n * s.m) = kron(xi.transpose(), Matrix::Identity(s.m, s.m));
      in += s.n;
      off += s.n * s.m;
    }
    return out;
  });

  std::vector<Matrix> basis;
  Index off = 0;
  for (const InstanceShape& s : shapes) {
    const Matrix u = rng.haar_unitary(s.m);
    const Index r = s.m / s.d;
    const double norm = std::sqrt(static_cast<double>(s.n * r));
    for (Index a = 0; a < s.d; ++a) {
      for (Index b = 0; b < s.d; ++b) {
        Matrix e = Matrix::Zero(s.d, s.d);
        e(a, b) = 1.0;
        const Matrix inner = u * kron(e, Matrix::Identity(r, r)) * u.adjoint();
        basis.push_back(embed(kron(Matrix::Identity(s.n, s.n), inner) / norm, off, dim));
      }
    }
    off += s.n * s.m;
  }
  const StarAlgebra m = StarAlgebra::from_orthonormal_basis(dim, std::move(basis));
  return Bimodule(LeftModule::defining(induced_trace(right, m)), right);
}

namespace {
std::vector<InstanceShape> random_shapes(std::uint64_t seed, int block_count, Index space_cap) {
  if (block_count < 1) throw PreconditionError("block count must be positive");
  if (block_count > space_cap) throw ResourceLimit("more blocks than the space cap allows");
  Rng rng(derive_seed(seed, "random-instance-shape", static_cast<std::uint64_t>(block_count)));
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<InstanceShape> shapes;
    Index dim = 0;
    for (int i = 0; i < block_count; ++i) {
      InstanceShape s;
      s.n = 1 + static_cast<Index>(rng.next() % 3);
      s.d = 1 + static_cast<Index>(rng.next() % 3);
      s.m = s.d * (1 + static_cast<Index>(rng.next() % 2));
      dim += s.n * s.m;
      shapes.push_back(s);
    }
    if (dim <= space_cap) return shapes;
  }
  return std::vector<InstanceShape>(static_cast<std::size_t>(block_count), InstanceShape{});
}
}  // namespace

Bimodule random_instance(std::uint64_t seed, int block_count, Index space_cap) {
  return random_instance(seed, random_shapes(seed, block_count, space_cap), space_cap);
}

Bimodule misaligned_instance(std::uint64_t seed, int block_count, Index space_cap) {
  const std::vector<InstanceShape> shapes = random_shapes(seed, block_count, space_cap);
  const Bimodule bm = random_instance(seed, shapes, space_cap);
  const Index first = shapes.front().n * shapes.front().m;
  const Matrix p = embed(Matrix::Identity(first, first), 0, bm.space_dim());
  const TraceFunctional& tau = bm.left().trace();
  return bm.with_left_trace(TraceFunctional::from_function(tau.algebra(), [&](const Matrix& x) { return tau(x) + 0.5 * tau(x * p); }));
}

}  // namespace vnlab
