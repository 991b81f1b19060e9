#include "vnlab/linalg.hpp"

#include <limits>

#include <algorithm>
#include <cmath>

namespace vnlab {

Vector Rng::gaussian_vector(Index n) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = complex_normal();
  return v;
}

Matrix Rng::gaussian_matrix(Index rows, Index cols) {
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = complex_normal();
  return m;
}

Matrix Rng::haar_unitary(Index n) {
  Eigen::HouseholderQR<Matrix> qr(gaussian_matrix(n, n));
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR();
  for (Index j = 0; j < n; ++j) {
    const cplx d = r(j, j);
    const double a = std::abs(d);
    if (a > 0) q.col(j) *= d / a;
  }
  return q;
}

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}
}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(splitmix64(master ^ fnv1a64(tag)) ^ a) ^ b);
}

namespace linalg {

Vector vec(const Matrix& m) { return Eigen::Map<const Vector>(m.data(), m.size()); }

Matrix unvec(const Vector& v, Index rows, Index cols) { return Eigen::Map<const Matrix>(v.data(), rows, cols); }

cplx hs_inner(const Matrix& a, const Matrix& b) { return (b.conjugate().cwiseProduct(a)).sum(); }

namespace {

// Full SVD of a square matrix. Eigen 3.4.0's divide-and-conquer SVD can
// return a decomposition that does not reproduce its input (seen on wide
// and on structured complex matrices), so every result is checked and the
// one-sided Jacobi SVD is used when the check fails.
Svd square_svd(const Matrix& s) {
  Svd out;
  const double scale = std::max(1.0, s.norm());
  Eigen::BDCSVD<Matrix> svd(s, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (!svd.singularValues().hasNaN() && !svd.matrixU().hasNaN() && !svd.matrixV().hasNaN()) {
    out.u = svd.matrixU();
    out.sigma = svd.singularValues();
    out.v = svd.matrixV();
    const Index n = s.cols();
    const double err = (s * out.v - out.u * out.sigma.asDiagonal()).norm();
    const double uerr = (out.u.adjoint() * out.u - Matrix::Identity(n, n)).norm();
    const double verr = (out.v.adjoint() * out.v - Matrix::Identity(n, n)).norm();
    if (err <= 1e-11 * scale && uerr <= 1e-11 * n && verr <= 1e-11 * n) return out;
  }
  Eigen::JacobiSVD<Matrix> jac(s, Eigen::ComputeFullU | Eigen::ComputeFullV);
  out.u = jac.matrixU();
  out.sigma = jac.singularValues();
  out.v = jac.matrixV();
  return out;
}

// Householder QR of a tall matrix: a = q r with q thin (m x n) and r square.
void thin_qr(const Matrix& a, Matrix& q, Matrix& r) {
  const Index n = a.cols();
  Eigen::HouseholderQR<Matrix> qr(a);
  r = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
  q = qr.householderQ() * Matrix::Identity(a.rows(), n);
}

Index count_above(const RealVector& sigma, double rel_tol, double scale) {
  const double top = sigma.size() > 0 ? sigma(0) : 0.0;
  const double cut = rel_tol * std::max(top, scale);
  Index r = 0;
  while (r < sigma.size() && sigma(r) > cut) ++r;
  return r;
}

}  // namespace

Matrix null_space(const Matrix& a, double rel_tol, double scale) {
  const Index n = a.cols();
  if (n == 0) return Matrix(0, 0);
  if (a.rows() == 0) return Matrix::Identity(n, n);
  // Reduce to an n x n problem with the same right singular structure:
  // the R factor for tall input, zero padding for wide input.
  Matrix sq;
  if (a.rows() > n) {
    Eigen::HouseholderQR<Matrix> qr(a);
    sq = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
  } else {
    sq = Matrix::Zero(n, n);
    sq.topRows(a.rows()) = a;
  }
  const Svd svd = square_svd(sq);
  const Index r = count_above(svd.sigma, rel_tol, scale);
  return svd.v.rightCols(n - r);
}

Svd thin_svd(const Matrix& a) {
  const Index m = a.rows();
  const Index n = a.cols();
  if (m == 0 || n == 0) return {Matrix(m, 0), RealVector(), Matrix(n, 0)};
  if (m < n) {
    Svd t = thin_svd(a.adjoint());
    std::swap(t.u, t.v);
    return t;
  }
  Svd out;
  if (m == n) return square_svd(a);
  Matrix q, r;
  thin_qr(a, q, r);
  out = square_svd(r);
  out.u = q * out.u;
  return out;
}

RealVector singular_values(const Matrix& a) {
  if (a.size() == 0) return RealVector();
  return thin_svd(a).sigma;
}

Matrix range_basis(const Matrix& a, double rel_tol, double scale) {
  if (a.cols() == 0 || a.rows() == 0) return Matrix(a.rows(), 0);
  const Svd svd = thin_svd(a);
  const Index r = count_above(svd.sigma, rel_tol, scale);
  return svd.u.leftCols(r);
}

Index rank(const Matrix& a, double rel_tol, double scale) {
  if (a.cols() == 0 || a.rows() == 0) return 0;
  return count_above(singular_values(a), rel_tol, scale);
}

double op_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return singular_values(a)(0);
}

double max_eigenvalue(const Matrix& hermitian) {
  if (hermitian.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

double hermitian_defect(const Matrix& a) { return (a - a.adjoint()).norm(); }

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.size() == 0) return 0.0;
  const Matrix d = a - b;
  if (d.hasNaN()) return std::numeric_limits<double>::quiet_NaN();
  return d.cwiseAbs().maxCoeff();
}

double relative_deviation(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

Vector OrthonormalSet::residual(const Vector& v) const {
  Vector r = v;
  for (int pass = 0; pass < 2; ++pass)
    for (const Vector& q : columns_) r -= q.dot(r) * q;
  return r;
}

bool OrthonormalSet::try_add(const Vector& v, double threshold) {
  if (size() >= length_) return false;
  Vector r = residual(v);
  const double nr = r.norm();
  if (!(nr > threshold)) return false;
  columns_.push_back(r / nr);
  return true;
}

Matrix OrthonormalSet::matrix() const {
  Matrix m(length_, size());
  for (Index j = 0; j < size(); ++j) m.col(j) = columns_[static_cast<std::size_t>(j)];
  return m;
}

}  // namespace linalg
}  // namespace vnlab
