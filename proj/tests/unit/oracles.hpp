#pragma once
// Brute-force references kept deliberately naive; nothing here calls into the
// library's linear algebra beyond Eigen itself.
#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline cplx unit_root(int k, int n) {
  const double a = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(a), std::sin(a)};
}

// Translation by x then modulation by w on C^{Z_n}.
inline Mat shift(int n, int x, int w) {
  Mat m = Mat::Zero(n, n);
  for (int t = 0; t < n; ++t) m(t, ((t - x) % n + n) % n) = unit_root(w * t, n);
  return m;
}

// Rank by singular values with an absolute floor.
inline int rank(const Mat& a, double tol = 1e-9) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(a);
  int r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol * std::max(1.0, svd.singularValues()(0))) ++r;
  return r;
}

inline Vec vec(const Mat& m) { return Eigen::Map<const Vec>(m.data(), m.size()); }

inline Mat columns(const std::vector<Mat>& ms) {
  Mat out(ms.front().size(), static_cast<Eigen::Index>(ms.size()));
  for (std::size_t i = 0; i < ms.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = vec(ms[i]);
  return out;
}

// dim span of a family of matrices.
inline int span_dim(const std::vector<Mat>& ms) { return ms.empty() ? 0 : rank(columns(ms)); }

// dim of {X : XA = AX for every A} through the Kronecker kernel.
inline int commutant_dim(const std::vector<Mat>& gens, Eigen::Index n) {
  const Mat id = Mat::Identity(n, n);
  Mat stacked(static_cast<Eigen::Index>(gens.size()) * n * n, n * n);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Mat k(n * n, n * n);
    // vec(XA - AX) = (A^T (x) I - I (x) A) vec(X)
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c) {
        k.block(r * n, c * n, n, n) = gens[i].transpose()(r, c) * id - (r == c ? gens[i] : Mat::Zero(n, n));
      }
    stacked.middleRows(static_cast<Eigen::Index>(i) * n * n, n * n) = k;
  }
  return static_cast<int>(n * n) - rank(stacked);
}

inline double lambda_max(const Mat& hermitian) {
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian);
  return es.eigenvalues().maxCoeff();
}

// S = sum_z <., pi(z) g> pi(z) g, summed point by point.
inline Mat frame_operator(int n, const Vec& g, const std::vector<std::pair<int, int>>& points) {
  Mat s = Mat::Zero(n, n);
  for (const auto& [x, w] : points) {
    const Vec h = shift(n, x, w) * g;
    s += h * h.adjoint();
  }
  return s;
}

}  // namespace oracle
