#pragma once

// Minkowski R^{2,1} and hyperboloid-model primitives. Coordinates are
// (x0, x1, x2) with x0 the time direction and bilinear form
// <x,y> = -x0 y0 + x1 y1 + x2 y2.

#include <Eigen/Dense>
#include <cmath>

#include "gausscell/config.hpp"

namespace gausscell {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

struct MVec {
  double x0 = 0, x1 = 0, x2 = 0;

  MVec() = default;
  MVec(double t, double x, double y) : x0(t), x1(x), x2(y) {}
  explicit MVec(const Vec3& v) : x0(v[0]), x1(v[1]), x2(v[2]) {}

  Vec3 vec() const { return Vec3(x0, x1, x2); }

  MVec operator+(const MVec& o) const { return {x0 + o.x0, x1 + o.x1, x2 + o.x2}; }
  MVec operator-(const MVec& o) const { return {x0 - o.x0, x1 - o.x1, x2 - o.x2}; }
  MVec operator-() const { return {-x0, -x1, -x2}; }
  MVec operator*(double s) const { return {x0 * s, x1 * s, x2 * s}; }
  MVec& operator+=(const MVec& o) { x0 += o.x0; x1 += o.x1; x2 += o.x2; return *this; }
  MVec& operator-=(const MVec& o) { x0 -= o.x0; x1 -= o.x1; x2 -= o.x2; return *this; }

  double enorm() const { return std::sqrt(x0 * x0 + x1 * x1 + x2 * x2); }
};

inline MVec operator*(double s, const MVec& v) { return v * s; }

inline double mdot(const MVec& x, const MVec& y) {
  return -x.x0 * y.x0 + x.x1 * y.x1 + x.x2 * y.x2;
}

// J = diag(-1,1,1)
inline Mat3 minkowski_J() {
  Mat3 J = Mat3::Identity();
  J(0, 0) = -1;
  return J;
}

// Minkowski cross product: the unique z with <z,w> = det[x y w] for all w,
// the determinant taken with columns (x, y, w). Frozen here; every downstream
// orientation convention (tangent-plane rotations, corner order) derives from it.
inline MVec mcross(const MVec& x, const MVec& y) {
  Vec3 e = x.vec().cross(y.vec());
  return MVec(-e[0], e[1], e[2]);
}

// Classification helpers
inline bool is_timelike(const MVec& v) { return mdot(v, v) < 0; }
inline bool is_spacelike(const MVec& v) { return mdot(v, v) > 0; }

// Point of the hyperboloid model {<p,p> = -1, p.x0 > 0}.
struct HPoint {
  MVec p;

  HPoint() : p(1, 0, 0) {}

  // Renormalizes input onto the hyperboloid when the constraint residual is
  // below tol.hpoint_renorm, errors otherwise.
  explicit HPoint(const MVec& v, const Tolerances& tol = default_tol()) {
    double q = mdot(v, v);
    if (v.x0 <= 0 || q >= 0)
      throw Error(ErrorCode::InvalidInput, "not a future timelike vector");
    double r = std::sqrt(-q);
    if (std::abs(r - 1.0) > tol.hpoint_renorm)
      throw Error(ErrorCode::InvalidInput, "hyperboloid residual too large");
    p = v * (1.0 / r);
  }

  static HPoint origin() { return HPoint(); }
};

inline double hyp_dist(const HPoint& a, const HPoint& b) {
  return std::acosh(std::max(1.0, -mdot(a.p, b.p)));
}

// Matrix of w -> mcross(v, w); an element of so(2,1). For spacelike unit v,
// exp(t * lambda_iso(v)) translates by t along the geodesic dual to v.
inline Mat3 lambda_iso(const MVec& v) {
  Mat3 m;
  MVec c0 = mcross(v, MVec(1, 0, 0));
  MVec c1 = mcross(v, MVec(0, 1, 0));
  MVec c2 = mcross(v, MVec(0, 0, 1));
  m.col(0) = c0.vec();
  m.col(1) = c1.vec();
  m.col(2) = c2.vec();
  return m;
}

// The h-unit vector in T_a H^2 pointing along the geodesic from a to b.
inline MVec unit_tangent(const HPoint& a, const HPoint& b,
                         const Tolerances& tol = default_tol()) {
  if (hyp_dist(a, b) < tol.geom_eps)
    throw Error(ErrorCode::DegeneratePair, "unit_tangent of coincident points");
  MVec u = b.p + mdot(a.p, b.p) * a.p;
  double n = std::sqrt(std::max(0.0, mdot(u, u)));
  return u * (1.0 / n);
}

// Element of SO_0(2,1).
struct LorentzMat {
  Mat3 m = Mat3::Identity();

  LorentzMat() = default;
  explicit LorentzMat(const Mat3& a) : m(a) {}

  static LorentzMat identity() { return LorentzMat(); }

  MVec operator*(const MVec& v) const { return MVec(m * v.vec()); }
  HPoint operator*(const HPoint& h) const { return HPoint(MVec(m * h.p.vec())); }
  LorentzMat operator*(const LorentzMat& o) const { return LorentzMat(m * o.m); }

  LorentzMat inverse() const {
    // m^-1 = J m^T J for Lorentz matrices
    Mat3 J = minkowski_J();
    return LorentzMat(J * m.transpose() * J);
  }

  double lorentz_residual() const {
    Mat3 J = minkowski_J();
    return (m.transpose() * J * m - J).norm();
  }

  // Scale-relative: entries of m^T J m are quadratic in ||m||, so the
  // admissible residual grows with the matrix norm.
  bool valid(const Tolerances& tol = default_tol()) const {
    double s = m.norm();
    if (lorentz_residual() > tol.lorentz_eps * (1 + s * s)) return false;
    if (std::abs(m.determinant() - 1.0) > tol.lorentz_eps * (1 + s * s * s)) return false;
    return m(0, 0) > 0;  // preserves the future cone
  }
};

// Affine isometry x -> L x + t, the building block of rho_tau.
struct MIsometry {
  LorentzMat L;
  MVec t;

  MVec operator*(const MVec& v) const { return L * v + t; }
  MIsometry operator*(const MIsometry& o) const { return {L * o.L, L * o.t + t}; }
  MIsometry inverse() const {
    LorentzMat Li = L.inverse();
    return {Li, -(Li * t)};
  }
};

// Rotation by angle about the x0 axis (fixes (1,0,0)).
inline LorentzMat rotation(double angle) {
  Mat3 m = Mat3::Identity();
  double c = std::cos(angle), s = std::sin(angle);
  m(1, 1) = c; m(1, 2) = -s;
  m(2, 1) = s; m(2, 2) = c;
  return LorentzMat(m);
}

// Boost of length t along the geodesic {x2 = 0} (x1-direction).
inline LorentzMat boost_x1(double t) {
  Mat3 m = Mat3::Identity();
  double c = std::cosh(t), s = std::sinh(t);
  m(0, 0) = c; m(0, 1) = s;
  m(1, 0) = s; m(1, 1) = c;
  return LorentzMat(m);
}

// Positively oriented Lorentz frame with time column p and first space
// column the unit tangent at p toward q.
inline LorentzMat frame(const HPoint& p, const HPoint& q) {
  MVec u = unit_tangent(p, q);
  MVec n = mcross(p.p, u);
  Mat3 f;
  f.col(0) = p.p.vec();
  f.col(1) = u.vec();
  f.col(2) = n.vec();
  return LorentzMat(f);
}

// Unique orientation-preserving isometry mapping the oriented segment
// (a0, a1) onto (b0, b1); segment lengths must agree.
inline LorentzMat segment_isometry(const HPoint& a0, const HPoint& a1,
                                   const HPoint& b0, const HPoint& b1) {
  return frame(b0, b1) * frame(a0, a1).inverse();
}

// Point at arclength t along the geodesic from a toward b.
inline HPoint geodesic_point(const HPoint& a, const HPoint& b, double t) {
  MVec u = unit_tangent(a, b);
  return HPoint(std::cosh(t) * a.p + std::sinh(t) * u);
}

// Rotation of the tangent plane at p by +pi/2, applied to tangent vector u.
inline MVec rotate90(const HPoint& p, const MVec& u) { return mcross(p.p, u); }

}  // namespace gausscell
