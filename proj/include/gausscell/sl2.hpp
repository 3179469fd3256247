#pragma once

// SL(2,R) as the double cover of SO_0(2,1). Fuchsian holonomies are
// assembled here and pushed down through the adjoint map.

#include <Eigen/Dense>
#include <cmath>

#include "gausscell/minkowski.hpp"

namespace gausscell {

using Mat2 = Eigen::Matrix2d;

namespace sl2 {

inline Mat2 identity() { return Mat2::Identity(); }

// Identification of R^{2,1} with sl(2,R): det(mat(x)) = -<x,x>.
inline Mat2 mat(const MVec& x) {
  Mat2 m;
  m << x.x1, x.x0 + x.x2,
       -x.x0 + x.x2, -x.x1;
  return m;
}

inline MVec vec(const Mat2& m) {
  return MVec(0.5 * (m(0, 1) - m(1, 0)), m(0, 0), 0.5 * (m(0, 1) + m(1, 0)));
}

// Adjoint map SL(2,R) -> SO_0(2,1).
template <typename Scalar>
inline Eigen::Matrix<Scalar, 3, 3> adjoint_t(const Eigen::Matrix<Scalar, 2, 2>& g) {
  using M2 = Eigen::Matrix<Scalar, 2, 2>;
  M2 gi;
  // det(g) = 1 for SL2, adjugate inverse keeps precision
  gi << g(1, 1), -g(0, 1), -g(1, 0), g(0, 0);
  auto basis_mat = [](int k) {
    M2 m;
    if (k == 0) m << 0, 1, -1, 0;        // mat(e0)
    else if (k == 1) m << 1, 0, 0, -1;   // mat(e1)
    else m << 0, 1, 1, 0;                // mat(e2)
    return m;
  };
  Eigen::Matrix<Scalar, 3, 3> out;
  for (int k = 0; k < 3; ++k) {
    M2 c = g * basis_mat(k) * gi;
    out(0, k) = (c(0, 1) - c(1, 0)) / Scalar(2);
    out(1, k) = c(0, 0);
    out(2, k) = (c(0, 1) + c(1, 0)) / Scalar(2);
  }
  return out;
}

inline LorentzMat adjoint(const Mat2& g) { return LorentzMat(adjoint_t<double>(g)); }

// Hyperbolic translation of length t whose axis is the geodesic fixed by
// diag; trace 2cosh(t/2).
inline Mat2 standard_boost(double t) {
  Mat2 m;
  m << std::exp(t / 2), 0, 0, std::exp(-t / 2);
  return m;
}

inline Mat2 comm(const Mat2& a, const Mat2& b) {
  return a * b * a.inverse() * b.inverse();
}

// Eigen decomposition of a hyperbolic element, deterministic column
// conventions: eigenvalues sorted by descending absolute value, unit
// Euclidean eigenvector columns with positive leading entry.
inline void hyperbolic_eigen(const Mat2& m, Mat2& P, Eigen::Vector2d& lam) {
  double tr = m.trace();
  double disc = tr * tr - 4.0;
  if (disc <= 0) throw Error(ErrorCode::NonFuchsian, "element is not hyperbolic");
  double s = std::sqrt(disc);
  double l1 = (tr + s) / 2, l2 = (tr - s) / 2;
  if (std::abs(l1) < std::abs(l2)) std::swap(l1, l2);
  lam << l1, l2;
  auto eigvec = [&](double l) {
    // (m - l I) v = 0
    Eigen::Vector2d v;
    double a = m(0, 0) - l, b = m(0, 1), c = m(1, 0), d = m(1, 1) - l;
    if (std::abs(a) + std::abs(b) >= std::abs(c) + std::abs(d))
      v << -b, a;
    else
      v << -d, c;
    double n = v.norm();
    if (n < 1e-300) throw Error(ErrorCode::NonFuchsian, "degenerate eigenvector");
    v /= n;
    if (v[0] < 0 || (v[0] == 0 && v[1] < 0)) v = -v;
    return v;
  };
  P.col(0) = eigvec(l1);
  P.col(1) = eigvec(l2);
}

// Conjugator g with g * src * g^-1 = dst for hyperbolic elements of equal
// trace. Deterministic up to the centralizer of dst.
inline Mat2 conjugator(const Mat2& dst, const Mat2& src) {
  Mat2 Pd, Ps;
  Eigen::Vector2d ld, ls;
  hyperbolic_eigen(dst, Pd, ld);
  hyperbolic_eigen(src, Ps, ls);
  if (std::abs(ld[0] - ls[0]) + std::abs(ld[1] - ls[1]) > 1e-8 * (1 + std::abs(ld[0])))
    throw Error(ErrorCode::InvalidInput, "conjugator: trace mismatch");
  Mat2 g = Pd * Ps.inverse();
  double det = g.determinant();
  if (det < 0) {
    Pd.col(1) = -Pd.col(1);
    g = Pd * Ps.inverse();
    det = g.determinant();
  }
  return g / std::sqrt(det);
}

// One-parameter translation of length t along the axis of the hyperbolic
// element m (oriented by m's attracting eigenvector convention).
inline Mat2 axis_boost(const Mat2& m, double t) {
  Mat2 P;
  Eigen::Vector2d lam;
  hyperbolic_eigen(m, P, lam);
  return P * standard_boost(t) * P.inverse();
}

}  // namespace sl2
}  // namespace gausscell
