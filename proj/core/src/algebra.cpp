#include "vnlab/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vnlab/error.hpp"
#include "vnlab/gabor.hpp"

namespace vnlab {

namespace {

constexpr std::uint64_t kInternalSeed = 0x9a1e5eedull;
constexpr int kMaxAttempts = 5;
// Generation accepts a new word when its residual exceeds this (words are
// products of unit-HS-norm basis elements and unit-operator-norm generators).
constexpr double kGenerationThreshold = 1e-8;
constexpr double kCommutationCheck = 1e-9;

struct Cluster {
  Index start;
  Index size;
};

// Groups sorted eigenvalues whose consecutive gaps are at most `gap`.
std::vector<Cluster> cluster_sorted(const RealVector& sorted, double gap) {
  std::vector<Cluster> out;
  Index start = 0;
  for (Index i = 1; i <= sorted.size(); ++i) {
    if (i == sorted.size() || sorted(i) - sorted(i - 1) > gap) {
      out.push_back({start, i - start});
      start = i;
    }
  }
  return out;
}

double commutation_defect(const StarAlgebra& a, const std::vector<Matrix>& others) {
  double worst = 0.0;
  for (const Matrix& x : a.basis())
    for (const Matrix& y : others) worst = linalg::nan_max(worst, (x * y - y * x).norm());
  return worst;
}

// Canonical order for a family of orthogonal projections: decreasing
// lexicographic order of their diagonals, then of their entries.
bool projection_before(const Matrix& p, const Matrix& q) {
  constexpr double eps = 1e-8;
  for (Index i = 0; i < p.rows(); ++i) {
    const double a = p(i, i).real();
    const double b = q(i, i).real();
    if (std::abs(a - b) > eps) return a > b;
  }
  for (Index j = 0; j < p.cols(); ++j) {
    for (Index i = 0; i < p.rows(); ++i) {
      if (std::abs(p(i, j).real() - q(i, j).real()) > eps) return p(i, j).real() > q(i, j).real();
      if (std::abs(p(i, j).imag() - q(i, j).imag()) > eps) return p(i, j).imag() > q(i, j).imag();
    }
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// StarAlgebra

StarAlgebra StarAlgebra::from_orthonormal_basis(Index ambient_dim, std::vector<Matrix> basis) {
  auto data = std::make_shared<Data>();
  data->n = ambient_dim;
  data->columns.resize(ambient_dim * ambient_dim, static_cast<Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].rows() != ambient_dim || basis[i].cols() != ambient_dim)
      throw ShapeMismatch("basis element has the wrong size");
    data->columns.col(static_cast<Index>(i)) = linalg::vec(basis[i]);
  }
  data->basis = std::move(basis);
  StarAlgebra a;
  a.data_ = std::move(data);
  return a;
}

Vector StarAlgebra::coords(const Matrix& x) const { return basis_matrix().adjoint() * linalg::vec(x); }

Matrix StarAlgebra::element(const Vector& c) const {
  return linalg::unvec(basis_matrix() * c, ambient_dim());
}

double StarAlgebra::distance(const Matrix& x) const {
  const Vector v = linalg::vec(x);
  return (v - basis_matrix() * (basis_matrix().adjoint() * v)).norm();
}

bool StarAlgebra::contains(const Matrix& x, double tol) const {
  return distance(x) <= tol * std::max(1.0, x.norm());
}

Matrix StarAlgebra::random_element(Rng& rng) const { return element(rng.gaussian_vector(dim())); }

Matrix StarAlgebra::random_self_adjoint(Rng& rng) const {
  const Matrix x = random_element(rng);
  return 0.5 * (x + x.adjoint());
}

double StarAlgebra::closure_defect() const {
  double worst = 0.0;
  for (const Matrix& a : basis()) {
    worst = linalg::nan_max(worst, distance(a.adjoint()));
    for (const Matrix& b : basis()) worst = linalg::nan_max(worst, distance(a * b));
  }
  return worst;
}

StarAlgebra StarAlgebra::transposed() const {
  std::vector<Matrix> b;
  b.reserve(basis().size());
  for (const Matrix& x : basis()) b.push_back(x.transpose());
  return from_orthonormal_basis(ambient_dim(), std::move(b));
}

StarAlgebra StarAlgebra::conjugated(const Matrix& u) const {
  std::vector<Matrix> b;
  b.reserve(basis().size());
  for (const Matrix& x : basis()) b.push_back(u * x * u.adjoint());
  return from_orthonormal_basis(ambient_dim(), std::move(b));
}

double containment_defect(const StarAlgebra& outer, const StarAlgebra& inner) {
  if (outer.ambient_dim() != inner.ambient_dim()) throw ShapeMismatch("algebras act on different spaces");
  double worst = 0.0;
  for (const Matrix& b : inner.basis()) worst = linalg::nan_max(worst, outer.distance(b));
  return worst;
}

bool contains(const StarAlgebra& outer, const StarAlgebra& inner, double tol) {
  return containment_defect(outer, inner) <= tol;
}

bool same_span(const StarAlgebra& a, const StarAlgebra& b, double tol) {
  return a.dim() == b.dim() && contains(a, b, tol) && contains(b, a, tol);
}

// ---------------------------------------------------------------------------
// Generation, commutant, center

StarAlgebra generate_algebra(Index n, const std::vector<Matrix>& gens) {
  std::vector<Matrix> letters;
  for (const Matrix& g : gens) {
    if (g.rows() != n || g.cols() != n) throw ShapeMismatch("generators must be square of equal size");
    const double norm = linalg::op_norm(g);
    if (norm < 1e-14) continue;
    const Matrix unit = g / norm;
    letters.push_back(unit);
    if ((unit - unit.adjoint()).norm() > 1e-14) letters.push_back(unit.adjoint());
  }
  linalg::OrthonormalSet words(n * n);
  words.try_add(linalg::vec(Matrix::Identity(n, n)), 0.0);
  for (Index i = 0; i < words.size(); ++i) {
    const Matrix w = linalg::unvec(words[i], n);
    for (const Matrix& g : letters) words.try_add(linalg::vec(w * g), kGenerationThreshold);
  }
  std::vector<Matrix> basis;
  basis.reserve(static_cast<std::size_t>(words.size()));
  for (const Vector& v : words.columns()) basis.push_back(linalg::unvec(v, n));
  return StarAlgebra::from_orthonormal_basis(n, std::move(basis));
}

StarAlgebra generate_algebra(const std::vector<Matrix>& gens) {
  if (gens.empty()) throw ShapeMismatch("cannot infer the ambient size from an empty generator list");
  return generate_algebra(gens.front().rows(), gens);
}

// The commutant is solved in the eigenbasis of a random self-adjoint element h
// of A: anything commuting with h is block diagonal over h's eigenspaces, which
// cuts the unknowns from n^2 to the sum of squared multiplicities. The
// remaining constraint is commutation with one generic element and its
// adjoint, which together generate A. The result is verified against the full
// basis and recomputed with fresh randomness on failure.
StarAlgebra commutant(const StarAlgebra& a) {
  const Index n = a.ambient_dim();
  if (a.dim() <= 1) return full_matrix_algebra(n);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Rng rng(derive_seed(kInternalSeed, "commutant", static_cast<std::uint64_t>(attempt)));
    Eigen::SelfAdjointEigenSolver<Matrix> es(a.random_self_adjoint(rng));
    const RealVector& lam = es.eigenvalues();
    const Matrix& u = es.eigenvectors();
    const double scale = std::max(1.0, lam.cwiseAbs().maxCoeff());

    std::vector<std::pair<Index, Index>> unknowns;
    for (const Cluster& c : cluster_sorted(lam, 1e-6 * scale))
      for (Index q = 0; q < c.size; ++q)
        for (Index p = 0; p < c.size; ++p) unknowns.emplace_back(c.start + p, c.start + q);

    const Matrix t = u.adjoint() * a.random_element(rng) * u;
    const Matrix tests[2] = {t, t.adjoint()};
    const Index nn = n * n;
    Matrix constraints = Matrix::Zero(2 * nn, static_cast<Index>(unknowns.size()));
    for (Index r = 0; r < 2; ++r) {
      const Matrix& s = tests[r];
      for (Index col = 0; col < static_cast<Index>(unknowns.size()); ++col) {
        const auto [i, j] = unknowns[static_cast<std::size_t>(col)];
        // [s, E_ij] = s E_ij - E_ij s
        for (Index p = 0; p < n; ++p) constraints(r * nn + p + j * n, col) += s(p, i);
        for (Index q = 0; q < n; ++q) constraints(r * nn + i + q * n, col) -= s(j, q);
      }
    }
    const Matrix ns = linalg::null_space(constraints);
    std::vector<Matrix> basis;
    basis.reserve(static_cast<std::size_t>(ns.cols()));
    for (Index k = 0; k < ns.cols(); ++k) {
      Matrix y = Matrix::Zero(n, n);
      for (Index col = 0; col < ns.rows(); ++col) {
        const auto [i, j] = unknowns[static_cast<std::size_t>(col)];
        y(i, j) = ns(col, k);
      }
      basis.push_back(u * y * u.adjoint());
    }
    if (commutation_defect(a, basis) <= kCommutationCheck)
      return StarAlgebra::from_orthonormal_basis(n, std::move(basis));
  }
  throw SpectralSplitError("commutant: verification failed after 5 randomized attempts");
}

StarAlgebra center(const StarAlgebra& a) {
  const Index n = a.ambient_dim();
  const Index d = a.dim();
  if (d <= 1) return a;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Rng rng(derive_seed(kInternalSeed, "center", static_cast<std::uint64_t>(attempt)));
    const Matrix t = a.random_element(rng);
    const Matrix tests[2] = {t, t.adjoint()};
    Matrix constraints(2 * n * n, d);
    for (Index i = 0; i < d; ++i) {
      const Matrix& b = a.basis()[static_cast<std::size_t>(i)];
      for (Index r = 0; r < 2; ++r)
        constraints.block(r * n * n, i, n * n, 1) = linalg::vec(tests[r] * b - b * tests[r]);
    }
    const Matrix ns = linalg::null_space(constraints);
    std::vector<Matrix> basis;
    for (Index k = 0; k < ns.cols(); ++k) basis.push_back(a.element(ns.col(k)));
    if (commutation_defect(a, basis) <= kCommutationCheck)
      return StarAlgebra::from_orthonormal_basis(n, std::move(basis));
  }
  throw SpectralSplitError("center: verification failed after 5 randomized attempts");
}

std::vector<Matrix> minimal_central_projections(const StarAlgebra& a, std::uint64_t seed) {
  const Index n = a.ambient_dim();
  const StarAlgebra z = center(a);
  if (z.dim() == 1) return {Matrix::Identity(n, n)};
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Rng rng(derive_seed(seed, "central-projections", static_cast<std::uint64_t>(attempt)));
    Eigen::SelfAdjointEigenSolver<Matrix> es(z.random_self_adjoint(rng));
    const RealVector& lam = es.eigenvalues();
    const double spread = std::max(1e-300, lam.maxCoeff() - lam.minCoeff());
    const auto clusters = cluster_sorted(lam, 1e-6 * spread);
    if (static_cast<Index>(clusters.size()) != z.dim()) continue;
    std::vector<Matrix> out;
    bool ok = true;
    for (const Cluster& c : clusters) {
      const Matrix v = es.eigenvectors().middleCols(c.start, c.size);
      Matrix p = v * v.adjoint();
      if (!z.contains(p, 1e-8)) {
        ok = false;
        break;
      }
      out.push_back(std::move(p));
    }
    if (!ok) continue;
    std::sort(out.begin(), out.end(), projection_before);
    return out;
  }
  throw SpectralSplitError("minimal central projections: eigenvalue clusters did not separate after 5 attempts");
}

Index block_dimension(const StarAlgebra& a, const Matrix& central_projection) {
  Matrix cols(a.ambient_dim() * a.ambient_dim(), a.dim());
  for (Index i = 0; i < a.dim(); ++i) cols.col(i) = linalg::vec(a.basis()[static_cast<std::size_t>(i)] * central_projection);
  return linalg::rank(cols);
}

// ---------------------------------------------------------------------------
// Concrete algebras

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  Index rows = 0, cols = 0;
  for (const Matrix& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix out = Matrix::Zero(rows, cols);
  Index r = 0, c = 0;
  for (const Matrix& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

StarAlgebra full_matrix_algebra(Index n) {
  std::vector<Matrix> b;
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) {
      Matrix e = Matrix::Zero(n, n);
      e(i, j) = 1.0;
      b.push_back(std::move(e));
    }
  return StarAlgebra::from_orthonormal_basis(n, std::move(b));
}

StarAlgebra scalar_algebra(Index n) {
  return StarAlgebra::from_orthonormal_basis(n, {Matrix::Identity(n, n) / std::sqrt(static_cast<double>(n))});
}

StarAlgebra diagonal_algebra(Index n) {
  std::vector<Matrix> b;
  for (Index i = 0; i < n; ++i) {
    Matrix e = Matrix::Zero(n, n);
    e(i, i) = 1.0;
    b.push_back(std::move(e));
  }
  return StarAlgebra::from_orthonormal_basis(n, std::move(b));
}

StarAlgebra tensor_identity(const StarAlgebra& a, Index m) {
  const Matrix id = Matrix::Identity(m, m) / std::sqrt(static_cast<double>(m));
  std::vector<Matrix> b;
  for (const Matrix& x : a.basis()) b.push_back(kron(x, id));
  return StarAlgebra::from_orthonormal_basis(a.ambient_dim() * m, std::move(b));
}

StarAlgebra identity_tensor(Index m, const StarAlgebra& a) {
  const Matrix id = Matrix::Identity(m, m) / std::sqrt(static_cast<double>(m));
  std::vector<Matrix> b;
  for (const Matrix& x : a.basis()) b.push_back(kron(id, x));
  return StarAlgebra::from_orthonormal_basis(a.ambient_dim() * m, std::move(b));
}

StarAlgebra direct_sum(const std::vector<StarAlgebra>& parts) {
  Index n = 0;
  for (const StarAlgebra& p : parts) n += p.ambient_dim();
  std::vector<Matrix> b;
  Index offset = 0;
  for (const StarAlgebra& p : parts) {
    for (const Matrix& x : p.basis()) {
      Matrix e = Matrix::Zero(n, n);
      e.block(offset, offset, p.ambient_dim(), p.ambient_dim()) = x;
      b.push_back(std::move(e));
    }
    offset += p.ambient_dim();
  }
  return StarAlgebra::from_orthonormal_basis(n, std::move(b));
}

// ---------------------------------------------------------------------------
// Traces

TraceFunctional::TraceFunctional(StarAlgebra algebra, Vector values_on_basis)
    : algebra_(std::move(algebra)), values_(std::move(values_on_basis)) {
  if (values_.size() != algebra_.dim()) throw ShapeMismatch("trace values do not match the algebra dimension");
  const Index n = algebra_.ambient_dim();
  density_ = Matrix::Zero(n, n);
  for (Index i = 0; i < algebra_.dim(); ++i) density_ += values_(i) * algebra_.basis()[static_cast<std::size_t>(i)].adjoint();

  const double defect = tracial_defect();
  if (defect > tol::kSpan * std::max(1.0, density_.norm())) {
    std::ostringstream msg;
    msg << "functional is not tracial (commutator defect " << defect << ")";
    throw FaithfulnessError(msg.str());
  }
  const Matrix g = gram();
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (g + g.adjoint()), Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (!(hi > 0) || lo <= tol::kSpan * hi || linalg::hermitian_defect(g) > tol::kSpan * std::max(1.0, g.norm())) {
    std::ostringstream msg;
    msg << "trace is not positive and faithful (Gram eigenvalues in [" << lo << ", " << hi << "])";
    throw FaithfulnessError(msg.str());
  }
}

TraceFunctional TraceFunctional::from_function(const StarAlgebra& algebra, const std::function<cplx(const Matrix&)>& f) {
  Vector v(algebra.dim());
  for (Index i = 0; i < algebra.dim(); ++i) v(i) = f(algebra.basis()[static_cast<std::size_t>(i)]);
  return TraceFunctional(algebra, std::move(v));
}

TraceFunctional TraceFunctional::matrix_trace(const StarAlgebra& algebra, double scale) {
  return from_function(algebra, [scale](const Matrix& x) { return scale * x.trace(); });
}

cplx TraceFunctional::operator()(const Matrix& x) const { return (density_.transpose().cwiseProduct(x)).sum(); }

Matrix TraceFunctional::gram() const {
  const Index d = algebra_.dim();
  Matrix w(algebra_.ambient_dim() * algebra_.ambient_dim(), d);
  for (Index j = 0; j < d; ++j) w.col(j) = linalg::vec(algebra_.basis()[static_cast<std::size_t>(j)] * density_);
  return algebra_.basis_matrix().adjoint() * w;
}

double TraceFunctional::tracial_defect() const {
  double worst = 0.0;
  for (const Matrix& b : algebra_.basis()) worst = linalg::nan_max(worst, (density_ * b - b * density_).norm());
  return worst;
}

TraceFunctional TraceFunctional::restricted(const StarAlgebra& sub) const {
  if (!contains(algebra_, sub)) throw InclusionError("restriction target is not a subalgebra");
  return from_function(sub, [this](const Matrix& x) { return (*this)(x); });
}

TraceFunctional TraceFunctional::scaled(double factor) const { return TraceFunctional(algebra_, factor * values_); }

// ---------------------------------------------------------------------------
// GNS

GnsSpace::GnsSpace(TraceFunctional trace) : trace_(std::move(trace)) {
  const Matrix g = trace_.gram();
  Eigen::LLT<Matrix> llt(0.5 * (g + g.adjoint()));
  if (llt.info() != Eigen::Success) throw FaithfulnessError("GNS Gram matrix is not positive definite");
  chol_ = llt.matrixL();
  const Index d = dim();
  onb_.reserve(static_cast<std::size_t>(d));
  for (Index k = 0; k < d; ++k) onb_.push_back(element(Vector::Unit(d, k)));
  const Index n = algebra().ambient_dim();
  unit_ = hat(Matrix::Identity(n, n));
  conjugation_.resize(d, d);
  for (Index k = 0; k < d; ++k) conjugation_.col(k) = hat(onb_[static_cast<std::size_t>(k)].adjoint());
}

Vector GnsSpace::hat(const Matrix& x) const { return chol_.adjoint() * algebra().coords(x); }

Matrix GnsSpace::element(const Vector& v) const {
  const Vector c = chol_.adjoint().triangularView<Eigen::Upper>().solve(v);
  return algebra().element(c);
}

Matrix GnsSpace::left(const Matrix& x) const {
  Matrix out(dim(), dim());
  for (Index k = 0; k < dim(); ++k) out.col(k) = hat(x * onb_[static_cast<std::size_t>(k)]);
  return out;
}

Matrix GnsSpace::right(const Matrix& x) const {
  Matrix out(dim(), dim());
  for (Index k = 0; k < dim(); ++k) out.col(k) = hat(onb_[static_cast<std::size_t>(k)] * x);
  return out;
}

namespace {
StarAlgebra image_algebra(Index d, const std::vector<Matrix>& images) {
  Matrix cols(d * d, static_cast<Index>(images.size()));
  for (std::size_t i = 0; i < images.size(); ++i) cols.col(static_cast<Index>(i)) = linalg::vec(images[i]);
  const Matrix q = linalg::range_basis(cols);
  std::vector<Matrix> basis;
  for (Index k = 0; k < q.cols(); ++k) basis.push_back(linalg::unvec(q.col(k), d));
  return StarAlgebra::from_orthonormal_basis(d, std::move(basis));
}
}  // namespace

StarAlgebra GnsSpace::left_algebra() const {
  std::vector<Matrix> images;
  for (const Matrix& b : algebra().basis()) images.push_back(left(b));
  return image_algebra(dim(), images);
}

StarAlgebra GnsSpace::right_algebra() const {
  std::vector<Matrix> images;
  for (const Matrix& b : algebra().basis()) images.push_back(right(b));
  return image_algebra(dim(), images);
}

// ---------------------------------------------------------------------------
// Conditional expectations

ConditionalExpectation::ConditionalExpectation(TraceFunctional kappa, StarAlgebra sub)
    : kappa_(std::move(kappa)), sub_(std::move(sub)) {
  const double defect = containment_defect(kappa_.algebra(), sub_);
  if (defect > tol::kSpan) {
    std::ostringstream msg;
    msg << "subalgebra is not contained in the algebra (distance " << defect << ")";
    throw InclusionError(msg.str());
  }
  const Index d = sub_.dim();
  Matrix g(d, d);
  functionals_.reserve(static_cast<std::size_t>(d));
  for (const Matrix& b : sub_.basis()) functionals_.push_back((kappa_.density() * b.adjoint()).transpose());
  for (Index j = 0; j < d; ++j)
    for (Index i = 0; i < d; ++i)
      g(j, i) = (functionals_[static_cast<std::size_t>(j)].cwiseProduct(sub_.basis()[static_cast<std::size_t>(i)])).sum();
  gram_inverse_ = g.inverse();
}

Matrix ConditionalExpectation::operator()(const Matrix& x) const {
  const Index d = sub_.dim();
  Vector r(d);
  for (Index j = 0; j < d; ++j) r(j) = (functionals_[static_cast<std::size_t>(j)].cwiseProduct(x)).sum();
  const Vector a = gram_inverse_ * r;
  Matrix out = Matrix::Zero(sub_.ambient_dim(), sub_.ambient_dim());
  for (Index i = 0; i < d; ++i) out += a(i) * sub_.basis()[static_cast<std::size_t>(i)];
  return out;
}

CenterValuedTrace::CenterValuedTrace(const StarAlgebra& a)
    : CenterValuedTrace(TraceFunctional::matrix_trace(a)) {}

CenterValuedTrace::CenterValuedTrace(const TraceFunctional& kappa)
    : expectation_(kappa, vnlab::center(kappa.algebra())), projections_(minimal_central_projections(kappa.algebra())) {}

Vector CenterValuedTrace::coefficients(const Matrix& central) const {
  Vector c(static_cast<Index>(projections_.size()));
  for (std::size_t k = 0; k < projections_.size(); ++k) {
    const Matrix& z = projections_[k];
    c(static_cast<Index>(k)) = linalg::hs_inner(central, z) / z.trace().real();
  }
  return c;
}

// ---------------------------------------------------------------------------
// Twisted group algebras

TwistedGroupAlgebra twisted_group_algebra(const Lattice& lattice, CocycleFlavor flavor) {
  const FiniteAbelianGroup& g = lattice.group();
  const PhaseSpace& space = lattice.space();
  const Index size = static_cast<Index>(lattice.size());
  TwistedGroupAlgebra out{lattice, flavor, {}, {}, {}};
  std::vector<Matrix> basis;
  const double norm = std::sqrt(static_cast<double>(size));
  for (const PhasePoint& z : lattice.elements()) {
    Matrix u = Matrix::Zero(size, size);
    for (const PhasePoint& zp : lattice.elements()) {
      const cplx phase = flavor == CocycleFlavor::plain ? cocycle(g, z, zp) : cocycle(g, zp, z);
      u(static_cast<Index>(lattice.position(space.add(z, zp))), static_cast<Index>(lattice.position(zp))) = phase;
    }
    basis.push_back(u / norm);
    out.unitaries.push_back(std::move(u));
  }
  out.algebra = StarAlgebra::from_orthonormal_basis(size, std::move(basis));
  out.trace = TraceFunctional::matrix_trace(out.algebra, 1.0 / static_cast<double>(size));
  return out;
}

}  // namespace vnlab
