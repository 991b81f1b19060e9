#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace vnlab {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Default numerical tolerances shared by every module.
namespace tol {
/// Singular values at or below this fraction of the largest are treated as zero.
inline constexpr double kRank = 1e-10;
/// Absolute tolerance for exact algebraic identities (unitarity, cocycle relations).
inline constexpr double kAlgebraic = 1e-12;
/// Tolerance for span membership and algebra closure checks.
inline constexpr double kSpan = 1e-10;
/// Relative tolerance for spectral comparisons.
inline constexpr double kSpectral = 1e-8;
/// Tolerance for center-valued dimension and trace identities.
inline constexpr double kDimension = 1e-9;
}  // namespace tol

/// Seeded pseudo-random source. All randomness in the library flows through
/// this type so that a master seed reproduces every run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
  double normal() { return normal_(engine_); }
  /// Independent standard Gaussian real and imaginary parts.
  cplx complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }
  Vector gaussian_vector(Index n);
  Matrix gaussian_matrix(Index rows, Index cols);
  /// Haar-distributed unitary (QR of a Ginibre matrix with phase correction).
  Matrix haar_unitary(Index n);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Splits a master seed into a per-item seed. The rule is
/// splitmix64(splitmix64(splitmix64(master ^ fnv1a64(tag)) ^ a) ^ b),
/// so any (tag, a, b) item can be regenerated in isolation.
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t a = 0, std::uint64_t b = 0);

namespace linalg {

/// Column-major vectorization of a matrix.
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, Index rows, Index cols);
inline Matrix unvec(const Vector& v, Index n) { return unvec(v, n, n); }

/// Hilbert-Schmidt pairing <a, b> = Tr(b^* a).
cplx hs_inner(const Matrix& a, const Matrix& b);

/// Thin SVD a = u diag(sigma) v^*, sigma decreasing, min(m, n) columns.
/// Every decomposition is checked against its input; a Jacobi SVD replaces
/// the divide-and-conquer result when the check fails.
struct Svd {
  Matrix u;
  RealVector sigma;
  Matrix v;
};
Svd thin_svd(const Matrix& a);
RealVector singular_values(const Matrix& a);

/// Orthonormal basis of the null space of `a`. A singular value counts as zero
/// when it is at most rel_tol * max(sigma_max, scale).
Matrix null_space(const Matrix& a, double rel_tol = tol::kRank, double scale = 1.0);

/// Orthonormal basis of the column space of `a`, same threshold rule.
Matrix range_basis(const Matrix& a, double rel_tol = tol::kRank, double scale = 1.0);

Index rank(const Matrix& a, double rel_tol = tol::kRank, double scale = 1.0);

/// Largest singular value.
double op_norm(const Matrix& a);

/// Largest eigenvalue of a Hermitian matrix.
double max_eigenvalue(const Matrix& hermitian);

/// ||a - a^*||_F, zero for Hermitian input.
double hermitian_defect(const Matrix& a);

/// max(a, b) that propagates NaN, so a non-finite defect never passes a check.
inline double nan_max(double a, double b) { return (a != a || b != b) ? std::numeric_limits<double>::quiet_NaN() : (a < b ? b : a); }

/// Max-abs entry of a - b.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Relative deviation |a - b| / max(1, |a|, |b|).
double relative_deviation(double a, double b);

/// Grows an orthonormal set one candidate at a time with two passes of
/// modified Gram-Schmidt.
class OrthonormalSet {
 public:
  explicit OrthonormalSet(Index length) : length_(length) {}

  /// Adds the normalized residual of `v` if its norm exceeds `threshold`.
  /// Returns true when the set grew.
  bool try_add(const Vector& v, double threshold);
  /// Residual of `v` after projecting out the current set.
  Vector residual(const Vector& v) const;

  Index size() const { return static_cast<Index>(columns_.size()); }
  Index length() const { return length_; }
  const Vector& operator[](Index i) const { return columns_[static_cast<std::size_t>(i)]; }
  const std::vector<Vector>& columns() const { return columns_; }
  Matrix matrix() const;

 private:
  Index length_;
  std::vector<Vector> columns_;
};

}  // namespace linalg
}  // namespace vnlab
