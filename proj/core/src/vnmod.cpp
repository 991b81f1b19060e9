#include "vnlab/vnmod.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vnlab/error.hpp"

namespace vnlab {

namespace {

constexpr std::uint64_t kModuleSeed = 0x6d0d0137ull;
constexpr double kActionTol = 1e-10;
// A standard basis vector opens a new generator when its residual against the
// current N-span exceeds this.
constexpr double kSpanResidual = 1e-8;

Matrix apply_linear(const StarAlgebra& a, const std::vector<Matrix>& images, Index dim, const Matrix& x) {
  const Vector c = a.coords(x);
  Matrix out = Matrix::Zero(dim, dim);
  for (Index i = 0; i < c.size(); ++i) out += c(i) * images[static_cast<std::size_t>(i)];
  return out;
}

// Checks unitality, adjoints and (anti-)multiplicativity on a few seeded
// random pairs; generic pairs expose any failure of the bilinear identity.
void check_action(const StarAlgebra& a, const std::vector<Matrix>& images, Index dim, bool reversed, const char* what) {
  if (static_cast<Index>(images.size()) != a.dim()) throw ShapeMismatch(std::string(what) + ": one image per basis element required");
  for (const Matrix& m : images)
    if (m.rows() != dim || m.cols() != dim) throw ShapeMismatch(std::string(what) + ": image has the wrong shape");
  auto act = [&](const Matrix& x) { return apply_linear(a, images, dim, x); };
  const Index n = a.ambient_dim();
  double worst = linalg::max_abs_diff(act(Matrix::Identity(n, n)), Matrix::Identity(dim, dim));
  Rng rng(kModuleSeed);
  for (int trial = 0; trial < 3; ++trial) {
    Matrix x = a.random_element(rng);
    Matrix y = a.random_element(rng);
    x /= x.norm();
    y /= y.norm();
    const Matrix rx = act(x);
    const Matrix ry = act(y);
    const double scale = std::max(1.0, rx.norm() * ry.norm());
    const Matrix prod = reversed ? Matrix(ry * rx) : Matrix(rx * ry);
    worst = linalg::nan_max(worst, (act(x * y) - prod).norm() / scale);
    worst = linalg::nan_max(worst, (act(x.adjoint()) - rx.adjoint()).norm() / std::max(1.0, rx.norm()));
  }
  if (worst > kActionTol) {
    std::ostringstream msg;
    msg << what << ": map is not a unital *-" << (reversed ? "anti-" : "") << "representation (defect " << worst << ")";
    throw PreconditionError(msg.str());
  }
}

bool images_faithful(const std::vector<Matrix>& images, Index algebra_dim) {
  if (images.empty()) return algebra_dim == 0;
  const Index d = images.front().rows();
  Matrix cols(d * d, static_cast<Index>(images.size()));
  for (std::size_t i = 0; i < images.size(); ++i) cols.col(static_cast<Index>(i)) = linalg::vec(images[i]);
  return linalg::rank(cols) == algebra_dim;
}

StarAlgebra span_algebra(Index d, const std::vector<Matrix>& images) {
  Matrix cols(d * d, static_cast<Index>(images.size()));
  for (std::size_t i = 0; i < images.size(); ++i) cols.col(static_cast<Index>(i)) = linalg::vec(images[i]);
  const Matrix q = linalg::range_basis(cols);
  std::vector<Matrix> basis;
  for (Index k = 0; k < q.cols(); ++k) basis.push_back(linalg::unvec(q.col(k), d));
  return StarAlgebra::from_orthonormal_basis(d, std::move(basis));
}

std::vector<Matrix> images_of(const std::vector<Matrix>& elements, const std::function<Matrix(const Matrix&)>& f) {
  std::vector<Matrix> out;
  out.reserve(elements.size());
  for (const Matrix& x : elements) out.push_back(f(x));
  return out;
}

CenterElement cdim_from_blocks(const StarAlgebra& n, const std::vector<Matrix>& images_z) {
  CenterElement out;
  out.projections = minimal_central_projections(n);
  out.coefficients.resize(static_cast<Index>(out.projections.size()));
  for (std::size_t k = 0; k < out.projections.size(); ++k) {
    const double h = static_cast<double>(linalg::rank(images_z[k]));
    out.coefficients(static_cast<Index>(k)) = h / static_cast<double>(block_dimension(n, out.projections[k]));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// RightModule

RightModule::RightModule(TraceFunctional kappa, std::vector<Matrix> basis_images) {
  auto data = std::make_shared<Data>();
  data->gns = GnsSpace(std::move(kappa));
  data->space_dim = basis_images.empty() ? 0 : basis_images.front().rows();
  const StarAlgebra& a = data->gns.algebra();
  check_action(a, basis_images, data->space_dim, true, "right module");
  data->basis_images = std::move(basis_images);
  for (const Matrix& y : data->gns.orthonormal_elements())
    data->gns_images.push_back(apply_linear(a, data->basis_images, data->space_dim, y));
  data->faithful = images_faithful(data->basis_images, a.dim());
  data_ = std::move(data);
}

RightModule RightModule::from_map(TraceFunctional kappa, Index space_dim, const std::function<Matrix(const Matrix&)>& rho) {
  std::vector<Matrix> images = images_of(kappa.algebra().basis(), rho);
  for (const Matrix& m : images)
    if (m.rows() != space_dim) throw ShapeMismatch("action image does not match the module dimension");
  return RightModule(std::move(kappa), std::move(images));
}

RightModule RightModule::standard(const TraceFunctional& kappa) {
  const GnsSpace gns(kappa);
  return RightModule(kappa, images_of(kappa.algebra().basis(), [&](const Matrix& b) { return gns.right(b); }));
}

RightModule RightModule::defining(const TraceFunctional& kappa) {
  return RightModule(kappa, images_of(kappa.algebra().basis(), [](const Matrix& b) { return Matrix(b.transpose()); }));
}

Matrix RightModule::act(const Matrix& x) const { return apply_linear(algebra(), data_->basis_images, space_dim(), x); }

StarAlgebra RightModule::image() const { return span_algebra(space_dim(), data_->basis_images); }

RightModule RightModule::restricted(const StarAlgebra& sub) const {
  TraceFunctional k = trace().restricted(sub);
  return RightModule(k, images_of(sub.basis(), [&](const Matrix& b) { return act(b); }));
}

// ---------------------------------------------------------------------------
// LeftModule

LeftModule::LeftModule(TraceFunctional tau, std::vector<Matrix> basis_images) {
  auto data = std::make_shared<Data>();
  data->gns = GnsSpace(std::move(tau));
  data->space_dim = basis_images.empty() ? 0 : basis_images.front().rows();
  const StarAlgebra& a = data->gns.algebra();
  check_action(a, basis_images, data->space_dim, false, "left module");
  data->basis_images = std::move(basis_images);
  for (const Matrix& y : data->gns.orthonormal_elements())
    data->gns_images.push_back(apply_linear(a, data->basis_images, data->space_dim, y));
  data->faithful = images_faithful(data->basis_images, a.dim());
  data_ = std::move(data);
}

LeftModule LeftModule::from_map(TraceFunctional tau, Index space_dim, const std::function<Matrix(const Matrix&)>& pi) {
  std::vector<Matrix> images = images_of(tau.algebra().basis(), pi);
  for (const Matrix& m : images)
    if (m.rows() != space_dim) throw ShapeMismatch("action image does not match the module dimension");
  return LeftModule(std::move(tau), std::move(images));
}

LeftModule LeftModule::defining(const TraceFunctional& tau) { return LeftModule(tau, tau.algebra().basis()); }

Matrix LeftModule::act(const Matrix& x) const { return apply_linear(algebra(), data_->basis_images, space_dim(), x); }

StarAlgebra LeftModule::image() const { return span_algebra(space_dim(), data_->basis_images); }

RightModule LeftModule::as_right() const {
  // The basis of A^T is (b_i^T) in the same order, and tau^T(x^T) = tau(x).
  TraceFunctional t(algebra().transposed(), trace().values());
  return RightModule(std::move(t), data_->basis_images);
}

RightModule direct_sum(const RightModule& a, const RightModule& b) {
  if (!same_span(a.algebra(), b.algebra()) || a.algebra().dim() != b.algebra().dim())
    throw ShapeMismatch("direct sum of modules over different algebras");
  std::vector<Matrix> images;
  for (const Matrix& x : a.algebra().basis()) images.push_back(block_diagonal({a.act(x), b.act(x)}));
  return RightModule(a.trace(), std::move(images));
}

// ---------------------------------------------------------------------------
// Center-valued dimension

Matrix CenterElement::element() const {
  if (projections.empty()) return Matrix();
  Matrix out = Matrix::Zero(projections.front().rows(), projections.front().cols());
  for (std::size_t k = 0; k < projections.size(); ++k) out += coefficients(static_cast<Index>(k)) * projections[k];
  return out;
}

CenterElement CenterElement::transposed() const {
  CenterElement out;
  out.coefficients = coefficients;
  for (const Matrix& z : projections) out.projections.push_back(z.transpose());
  return out;
}

std::vector<Vector> select_generators(const RightModule& h) {
  const Index dim = h.space_dim();
  linalg::OrthonormalSet span(dim);
  std::vector<Vector> gens;
  for (Index i = 0; i < dim && span.size() < dim; ++i) {
    const Vector e = Vector::Unit(dim, i);
    if (span.residual(e).norm() <= kSpanResidual) continue;
    gens.push_back(e);
    for (const Matrix& r : h.gns_images()) span.try_add(r * e, kSpanResidual);
  }
  return gens;
}

ModuleProjection module_projection(const RightModule& h, const std::vector<Vector>& generators) {
  const Index dim = h.space_dim();
  const Index d = h.gns().dim();
  const Index k = static_cast<Index>(generators.size());
  ModuleProjection out;
  out.copies = k;
  out.synthesis.resize(dim, k * d);
  for (Index j = 0; j < k; ++j) {
    const Vector& g = generators[static_cast<std::size_t>(j)];
    if (g.size() != dim) throw ShapeMismatch("generator length does not match the module");
    for (Index l = 0; l < d; ++l) out.synthesis.col(j * d + l) = h.gns_images()[static_cast<std::size_t>(l)] * g;
  }
  if (dim == 0) {
    out.projection = Matrix::Zero(k * d, k * d);
    out.partial_isometry = Matrix::Zero(0, k * d);
    return out;
  }
  const linalg::Svd svd = linalg::thin_svd(out.synthesis);
  const RealVector& s = svd.sigma;
  const double cut = tol::kRank * std::max(1.0, s.size() ? s(0) : 0.0);
  Index r = 0;
  while (r < s.size() && s(r) > cut) ++r;
  if (r < dim) {
    std::ostringstream msg;
    msg << "generators span a subspace of dimension " << r << " in a module of dimension " << dim;
    throw SpanError(msg.str());
  }
  const Matrix u = svd.u.leftCols(r);
  const Matrix v = svd.v.leftCols(r);
  out.projection = v * v.adjoint();
  out.partial_isometry = u * v.adjoint();
  return out;
}

CenterElement cdim(const RightModule& h, const std::vector<Vector>& generators) {
  const ModuleProjection mp = module_projection(h, generators);
  const GnsSpace& gns = h.gns();
  const Index d = gns.dim();
  const Index n = h.algebra().ambient_dim();
  // sum_j p_jj as an element of N, read through its action on the unit vector.
  Vector diag_sum = Vector::Zero(d);
  for (Index j = 0; j < mp.copies; ++j) diag_sum += mp.projection.block(j * d, j * d, d, d) * gns.unit();
  const Matrix x = mp.copies ? gns.element(diag_sum) : Matrix(Matrix::Zero(n, n));
  const CenterValuedTrace ez(h.trace());
  const Vector c = ez.coefficients(ez(x));
  return CenterElement{ez.projections(), c.real()};
}

CenterElement cdim(const RightModule& h) { return cdim(h, select_generators(h)); }

CenterElement cdim(const LeftModule& h) {
  // Computed over M^T; the coefficients are re-indexed to the canonical
  // projection order of M itself (transposition can reorder ties).
  const CenterElement opp = cdim(h.as_right()).transposed();
  CenterElement out;
  out.projections = minimal_central_projections(h.algebra());
  out.coefficients = RealVector::Zero(static_cast<Index>(out.projections.size()));
  for (std::size_t k = 0; k < out.projections.size(); ++k) {
    std::size_t best = 0;
    double best_dist = -1.0;
    for (std::size_t j = 0; j < opp.projections.size(); ++j) {
      const double dist = (opp.projections[j] - out.projections[k]).norm();
      if (best_dist < 0 || dist < best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    out.coefficients(static_cast<Index>(k)) = opp.coefficients(static_cast<Index>(best));
  }
  return out;
}

CenterElement cdim_block_formula(const RightModule& h) {
  const std::vector<Matrix> z = minimal_central_projections(h.algebra());
  return cdim_from_blocks(h.algebra(), images_of(z, [&](const Matrix& p) { return h.act(p); }));
}

CenterElement cdim_block_formula(const LeftModule& h) {
  const std::vector<Matrix> z = minimal_central_projections(h.algebra());
  return cdim_from_blocks(h.algebra(), images_of(z, [&](const Matrix& p) { return h.act(p); }));
}

Matrix left_bounded_operator(const Vector& f, const RightModule& h) {
  if (f.size() != h.space_dim()) throw ShapeMismatch("vector length does not match the module");
  Matrix out(h.space_dim(), h.gns().dim());
  for (Index l = 0; l < out.cols(); ++l) out.col(l) = h.gns_images()[static_cast<std::size_t>(l)] * f;
  return out;
}

Matrix right_bounded_operator(const Vector& f, const LeftModule& h) {
  if (f.size() != h.space_dim()) throw ShapeMismatch("vector length does not match the module");
  Matrix out(h.space_dim(), h.gns().dim());
  for (Index l = 0; l < out.cols(); ++l) out.col(l) = h.gns_images()[static_cast<std::size_t>(l)] * f;
  return out;
}

// ---------------------------------------------------------------------------
// Induced trace

TraceFunctional induced_trace(const RightModule& h, const StarAlgebra& target) {
  const ModuleProjection mp = module_projection(h, select_generators(h));
  const Index d = h.gns().dim();
  // (kappa (x) Tr)(W^* T W) = sum_j u_j^* T u_j with u_j = W (e_j (x) 1^).
  Matrix q = Matrix::Zero(h.space_dim(), h.space_dim());
  for (Index j = 0; j < mp.copies; ++j) {
    const Vector u = mp.partial_isometry.middleCols(j * d, d) * h.gns().unit();
    q += u * u.adjoint();
  }
  return TraceFunctional::from_function(target, [&](const Matrix& t) { return (q.transpose().cwiseProduct(t)).sum(); });
}

TraceFunctional induced_trace(const RightModule& h) { return induced_trace(h, commutant(h.image())); }

// ---------------------------------------------------------------------------
// Basic construction

Matrix jones_projection(const GnsSpace& l2, const StarAlgebra& sub) {
  const double defect = containment_defect(l2.algebra(), sub);
  if (defect > tol::kSpan) {
    std::ostringstream msg;
    msg << "subalgebra is not contained in the algebra (distance " << defect << ")";
    throw InclusionError(msg.str());
  }
  Matrix cols(l2.dim(), sub.dim());
  for (Index i = 0; i < sub.dim(); ++i) cols.col(i) = l2.hat(sub.basis()[static_cast<std::size_t>(i)]);
  const Matrix q = linalg::range_basis(cols);
  return q * q.adjoint();
}

BasicConstruction::BasicConstruction(TraceFunctional kappa, StarAlgebra sub)
    : l2_(RightModule::standard(kappa)),
      sub_(std::move(sub)),
      jones_(jones_projection(l2_.gns(), sub_)),
      l2_over_sub_(l2_.restricted(sub_)) {
  left_image_ = l2_.gns().left_algebra();
  // Two generic elements generate N; adding e_B generates the basic construction.
  Rng rng(kModuleSeed ^ 0xbc);
  const StarAlgebra& n = l2_.algebra();
  algebra_ = generate_algebra(l2_.gns().dim(), {left(n.random_element(rng)), left(n.random_element(rng)), jones_});
  index_ = cdim(l2_over_sub_);
  centers_match_ = same_span(center(sub_), center(n));
  induced_ = induced_trace(l2_over_sub_, algebra_);
  onto_left_ = std::make_shared<const ConditionalExpectation>(induced_, left_image_);
  center_trace_ = std::make_shared<const CenterValuedTrace>(algebra_);
}

Matrix BasicConstruction::push_down(const Matrix& a) const {
  if (!centers_match_) throw PreconditionError("push-down requires Z(B) = Z(N)");
  if (index_.coefficients.size() == 0 || index_.coefficients.minCoeff() <= tol::kDimension)
    throw PreconditionError("push-down requires a strictly positive index");
  const Matrix op = left(index_.element()) * (*onto_left_)(a * jones_);
  return gns().element(op * gns().unit());
}

Matrix BasicConstruction::center_valued_trace(const Matrix& a) const { return (*center_trace_)(a); }

}  // namespace vnlab
