#pragma once

// Genus-g surface groups: Fenchel-Nielsen holonomies into SO_0(2,1) via the
// SL(2,R) double cover, the twisted cocycle calculus, and the H^1 gauge
// slice identifying cohomology classes with tangent vectors of Teichmuller
// space.

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <map>
#include <optional>
#include <vector>

#include "gausscell/sl2.hpp"
#include "gausscell/words.hpp"

namespace gausscell {

// Fenchel-Nielsen coordinates for the fixed pants decomposition: the g
// handle curves a_i, the connector curves bounding the handles (one
// separating curve when g = 2), and g-3 internal curves of the core sphere.
struct TeichCoords {
  int genus;
  std::vector<double> lengths;  // 3g-3 positive lengths
  std::vector<double> twists;   // 3g-3 twists

  TeichCoords(int g, std::vector<double> ls, std::vector<double> ts)
      : genus(g), lengths(std::move(ls)), twists(std::move(ts)) {
    int n = 3 * genus - 3;
    if ((int)lengths.size() != n || (int)twists.size() != n)
      throw Error(ErrorCode::InvalidInput, "need 3g-3 lengths and twists");
    for (double l : lengths)
      if (!(l > 0)) throw Error(ErrorCode::NonFuchsian, "nonpositive FN length");
  }

  int num_handles() const { return genus; }
  int num_connectors() const { return genus == 2 ? 1 : genus; }
};

struct Holonomy {
  int genus = 0;
  std::vector<Mat2> sl2_images;        // one per generator, the chosen lifts
  std::vector<LorentzMat> images;      // adjoint images in SO_0(2,1)
  double relator_residual = 0;

  int num_generators() const { return 2 * genus; }

  // Word evaluation runs through the SL(2,R) lift: the lift has much
  // smaller matrix norms than the adjoint images (e^{d/2} vs e^{d}), so the
  // accumulated product keeps far more significant digits. The adjoint is
  // applied once at the end.
  Mat2 sl2_eval(const Word& w) const {
    using LMat2 = Eigen::Matrix<long double, 2, 2>;
    LMat2 m = LMat2::Identity();
    for (int l : w) {
      int i = std::abs(l) - 1;
      Mat2 g = (l > 0) ? sl2_images[i] : Mat2(sl2_images[i].inverse());
      m = m * g.cast<long double>();
    }
    return m.cast<double>();
  }

  LorentzMat eval(const Word& w) const { return sl2::adjoint(sl2_eval(w)); }

  double compute_relator_residual() const {
    return (eval(Presentation(genus).relator()).m - Mat3::Identity()).norm();
  }
};

struct Cocycle {
  std::vector<MVec> values;  // one per generator

  static Cocycle zero(int genus) {
    Cocycle c;
    c.values.assign(2 * genus, MVec());
    return c;
  }

  double scale() const {
    double s = 0;
    for (const MVec& v : values) s = std::max(s, v.enorm());
    return s;
  }
};

// (rho(w), tau(w)) by the twisted cocycle recursion, accumulated through the
// SL2 lift in extended precision. Orbit point accuracy feeds straight into
// hull planarity, so this path is kept tight.
inline MIsometry eval_word(const Holonomy& rho, const Cocycle& tau, const Word& w) {
  using LMat2 = Eigen::Matrix<long double, 2, 2>;
  using LVec3 = Eigen::Matrix<long double, 3, 1>;
  LMat2 prefix = LMat2::Identity();
  LVec3 t = LVec3::Zero();
  for (int l : w) {
    int i = std::abs(l) - 1;
    LMat2 g = rho.sl2_images[i].cast<long double>();
    if (l > 0) {
      t += sl2::adjoint_t<long double>(prefix) * tau.values[i].vec().cast<long double>();
      prefix = prefix * g;
    } else {
      LMat2 gi;
      gi << g(1, 1), -g(0, 1), -g(1, 0), g(0, 0);
      prefix = prefix * gi;
      t -= sl2::adjoint_t<long double>(prefix) * tau.values[i].vec().cast<long double>();
    }
  }
  return {LorentzMat(sl2::adjoint_t<long double>(prefix).cast<double>()),
          MVec(Vec3(t.cast<double>()))};
}

namespace detail {

// Unit spacelike normal of the axis of a hyperbolic SL2 element under the
// sl2 <-> R^{2,1} identification.
inline MVec axis_normal(const Mat2& m) {
  Mat2 tf = m - 0.5 * m.trace() * Mat2::Identity();
  MVec n = sl2::vec(tf);
  double q = mdot(n, n);
  if (q <= 0) throw Error(ErrorCode::NonFuchsian, "axis of non-hyperbolic element");
  return n * (1.0 / std::sqrt(q));
}

// Foot on the axis of `on` of either the base point (no anchor) or of the
// axis of `anchor` (common perpendicular foot of two ultraparallel
// geodesics).
inline HPoint axis_foot(const Mat2& on, const Mat2* anchor = nullptr) {
  MVec n = axis_normal(on);
  MVec q;
  if (anchor) {
    MVec n1 = axis_normal(*anchor);
    q = n1 - mdot(n1, n) * n;
    if (mdot(q, q) >= -1e-12)
      throw Error(ErrorCode::NonFuchsian, "anchor axis meets gluing axis");
  } else {
    MVec p(1, 0, 0);
    q = p - mdot(p, n) * n;
  }
  double s = std::sqrt(-mdot(q, q));
  q = q * (1.0 / s);
  if (q.x0 < 0) q = -q;
  return HPoint(q);
}

// Conjugator h with h source h^-1 = target, its position along the target
// axis pinned by matching anchor feet, then composed with a twist of length
// `twist` along the target axis. Anchoring feet to axes interior to the
// glued pieces makes full twists act as clean Dehn twists on the markings.
inline Mat2 glue(const Mat2& target, const Mat2& source, double twist,
                 const Mat2* target_anchor = nullptr, const Mat2* source_anchor = nullptr) {
  Mat2 h0 = sl2::conjugator(target, source);
  HPoint fs = axis_foot(source, source_anchor);
  HPoint ft = axis_foot(target, target_anchor);
  auto slide_pos = [&](double t) {
    Mat2 h = sl2::axis_boost(target, t) * h0;
    HPoint q = sl2::adjoint(h) * fs;
    double d = hyp_dist(ft, q);
    if (d < 1e-12) return 0.0;
    MVec dir = unit_tangent(ft, sl2::adjoint(target) * ft);
    return (mdot(unit_tangent(ft, q), dir) > 0 ? d : -d);
  };
  double p0 = slide_pos(0.0);
  double p1 = slide_pos(1.0);
  double sigma = p1 - p0;  // +-1 up to round-off
  double tstar = (std::abs(sigma) > 0.5) ? -p0 / sigma : 0.0;
  return sl2::axis_boost(target, twist + tstar) * h0;
}

// Holed torus <A,B> with geodesic length(A) = l, twist t along A, and
// boundary [A,B] of length L. Frame: axis(A) is the diagonal geodesic,
// B crosses it orthogonally at twist zero.
inline void holed_torus(double l, double t, double L, Mat2& A, Mat2& B) {
  double c = std::cosh(l / 2);
  double d2 = (std::cosh(L / 2) - 1 + 2 * c * c) / (2 * (c * c - 1));
  double dm = std::sqrt(d2);  // cosh(m/2), always >= 1
  A = sl2::standard_boost(l);
  Mat2 B0;
  double sm = std::sqrt(d2 - 1);  // sinh(m/2)
  B0 << dm, sm, sm, dm;
  B = sl2::standard_boost(t) * B0;
}

// Pants with boundary traces -2cosh(L_i/2): returns (C1, C2, C3) with
// C1 C2 C3 = I, each hyperbolic of the prescribed length.
inline void pants(double L1, double L2, double L3, Mat2& C1, Mat2& C2, Mat2& C3) {
  double x = -2 * std::cosh(L1 / 2);
  double y = -2 * std::cosh(L2 / 2);
  double z = -2 * std::cosh(L3 / 2);
  C1 << x, -1, 1, 0;
  double zeta = (z - std::sqrt(z * z - 4)) / 2;  // |zeta| > 1 branch
  C2 << 0, zeta, -1 / zeta, y;
  C3 = (C1 * C2).inverse();
}

// Sphere with n >= 3 holes: boundary elements C_1..C_n with product I and
// prescribed lengths; internal curves consume (length, twist) pairs.
inline std::vector<Mat2> sphere_group(const std::vector<double>& L,
                                      const double*& internal_len,
                                      const double*& internal_twist) {
  if (L.size() == 3) {
    Mat2 C1, C2, C3;
    pants(L[0], L[1], L[2], C1, C2, C3);
    return {C1, C2, C3};
  }
  double M = *internal_len++;
  double theta = *internal_twist++;
  Mat2 C1, C2, X;
  pants(L[0], L[1], M, C1, C2, X);
  std::vector<double> rest;
  rest.push_back(M);
  for (size_t i = 2; i < L.size(); ++i) rest.push_back(L[i]);
  std::vector<Mat2> sub = sphere_group(rest, internal_len, internal_twist);
  // glue sub's first boundary Y to X: h Y h^-1 = X^-1, then twist along X.
  Mat2 h = glue(Mat2(X.inverse()), sub[0], theta);
  std::vector<Mat2> out = {C1, C2};
  for (size_t i = 1; i < sub.size(); ++i) out.push_back(h * sub[i] * h.inverse());
  return out;
}

}  // namespace detail

// Discrete faithful rho from Fenchel-Nielsen coordinates: pants amalgamation
// in SL(2,R) followed by the adjoint map. The relator holds exactly by
// construction (up to round-off).
inline Holonomy build_holonomy(const TeichCoords& coords) {
  int g = coords.genus;
  const auto& len = coords.lengths;
  const auto& twi = coords.twists;

  // layout: [0,g) handles, [g, g+#connectors) connectors, rest internal
  int nc = coords.num_connectors();
  std::vector<Mat2> gens(2 * g);

  if (g == 2) {
    double Lsep = len[2];
    Mat2 A1, B1, A2, B2;
    detail::holed_torus(len[0], twi[0], Lsep, A1, B1);
    detail::holed_torus(len[1], twi[1], Lsep, A2, B2);
    Mat2 K1 = sl2::comm(A1, B1);
    Mat2 K2 = sl2::comm(A2, B2);
    Mat2 h = detail::glue(Mat2(K1.inverse()), K2, twi[2], &A1, &A2);
    gens[0] = A1;
    gens[1] = B1;
    gens[2] = h * A2 * h.inverse();
    gens[3] = h * B2 * h.inverse();
  } else {
    std::vector<double> bounds(len.begin() + g, len.begin() + g + nc);
    const double* il = len.data() + g + nc;
    const double* it = twi.data() + g + nc;
    std::vector<Mat2> C = detail::sphere_group(bounds, il, it);
    for (int i = 0; i < g; ++i) {
      Mat2 A, B;
      detail::holed_torus(len[i], twi[i], bounds[i], A, B);
      Mat2 K = sl2::comm(A, B);
      Mat2 h = detail::glue(C[i], K, twi[g + i]);
      gens[2 * i] = h * A * h.inverse();
      gens[2 * i + 1] = h * B * h.inverse();
    }
  }

  Holonomy rho;
  rho.genus = g;
  rho.sl2_images = gens;
  for (const Mat2& m : gens) rho.images.push_back(sl2::adjoint(m));
  rho.relator_residual = rho.compute_relator_residual();
  if (rho.relator_residual > default_tol().relator_eps)
    throw Error(ErrorCode::NonFuchsian, "relator residual too large");
  for (const Mat2& m : gens)
    if (std::abs(m.trace()) <= 2.0)
      throw Error(ErrorCode::NonFuchsian, "non-hyperbolic generator image");
  return rho;
}

using H1Coords = Eigen::VectorXd;

// Gauge slice for H^1(rho): the Euclidean-orthogonal complement of the
// coboundaries inside the relator-constrained generator-value space.
class H1Slice {
 public:
  explicit H1Slice(const Holonomy& rho) : genus_(rho.genus) {
    int n = 2 * genus_;
    // relator constraint: tau(relator) = sum_i K_i tau(gen_i) = 0
    using LMat2 = Eigen::Matrix<long double, 2, 2>;
    std::vector<Mat3> coeff(n, Mat3::Zero());
    LMat2 prefix = LMat2::Identity();
    for (int l : Presentation(genus_).relator()) {
      int i = std::abs(l) - 1;
      if (l > 0) {
        coeff[i] += sl2::adjoint(prefix.cast<double>()).m;
        prefix = prefix * rho.sl2_images[i].cast<long double>();
      } else {
        prefix = prefix * Mat2(rho.sl2_images[i].inverse()).cast<long double>();
        coeff[i] -= sl2::adjoint(prefix.cast<double>()).m;
      }
    }
    K_.resize(3, 3 * n);
    for (int i = 0; i < n; ++i) K_.block<3, 3>(0, 3 * i) = coeff[i];

    Cb_.resize(3 * n, 3);
    for (int i = 0; i < n; ++i)
      Cb_.block<3, 3>(3 * i, 0) = rho.images[i].m - Mat3::Identity();

    // kernel of K
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(K_, Eigen::ComputeFullV);
    double smax = svd.singularValues()[0];
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()[i] > default_tol().svd_rank_rel * smax) ++rank;
    if (rank != 3)
      throw Error(ErrorCode::DegenerateRepresentation, "relator constraint rank != 3");
    Eigen::MatrixXd N = svd.matrixV().rightCols(3 * n - rank);  // 6g x (6g-3)

    // coboundaries inside the kernel, expressed in the kernel basis
    Eigen::MatrixXd CbIn = N.transpose() * Cb_;  // (6g-3) x 3
    Eigen::JacobiSVD<Eigen::MatrixXd> svd2(CbIn, Eigen::ComputeFullU);
    double s2max = svd2.singularValues()[0];
    int rank2 = 0;
    for (int i = 0; i < svd2.singularValues().size(); ++i)
      if (svd2.singularValues()[i] > default_tol().svd_rank_rel * s2max) ++rank2;
    if (rank2 != 3)
      throw Error(ErrorCode::DegenerateRepresentation, "coboundary map rank < 3");
    basis_ = N * svd2.matrixU().rightCols(N.cols() - 3);  // 6g x (6g-6)
  }

  int dim() const { return (int)basis_.cols(); }
  const Eigen::MatrixXd& basis_matrix() const { return basis_; }
  const Eigen::MatrixXd& relator_matrix() const { return K_; }
  const Eigen::MatrixXd& coboundary_matrix() const { return Cb_; }

  static Eigen::VectorXd stack(const Cocycle& tau) {
    Eigen::VectorXd v(3 * tau.values.size());
    for (size_t i = 0; i < tau.values.size(); ++i) v.segment<3>(3 * i) = tau.values[i].vec();
    return v;
  }

  Cocycle unstack(const Eigen::VectorXd& v) const {
    Cocycle tau;
    for (int i = 0; i < 2 * genus_; ++i) tau.values.push_back(MVec(Vec3(v.segment<3>(3 * i))));
    return tau;
  }

  // Coordinates of tau's class: least-squares removal of the best
  // coboundary, then inner products with the slice basis.
  H1Coords project(const Cocycle& tau) const {
    Eigen::VectorXd v = stack(tau);
    Eigen::VectorXd w = Cb_.colPivHouseholderQr().solve(v);
    return basis_.transpose() * (v - Cb_ * w);
  }

  Cocycle cocycle(const H1Coords& coords) const { return unstack(basis_ * coords); }

  Cocycle basis_cocycle(int k) const { return unstack(basis_.col(k)); }

  // Coboundary tau_v(gamma) = rho(gamma) v - v.
  Cocycle coboundary(const MVec& v) const { return unstack(Cb_ * v.vec()); }

 private:
  int genus_;
  Eigen::MatrixXd K_;      // 3 x 6g
  Eigen::MatrixXd Cb_;     // 6g x 3
  Eigen::MatrixXd basis_;  // 6g x (6g-6), orthonormal columns
};

inline std::vector<Cocycle> cocycle_basis(const Holonomy& rho) {
  H1Slice slice(rho);
  std::vector<Cocycle> out;
  for (int k = 0; k < slice.dim(); ++k) out.push_back(slice.basis_cocycle(k));
  return out;
}

inline H1Coords h1_project(const Holonomy& rho, const Cocycle& tau) {
  return H1Slice(rho).project(tau);
}

inline double cocycle_relator_residual(const Holonomy& rho, const Cocycle& tau) {
  return eval_word(rho, tau, Presentation(rho.genus).relator()).t.enorm();
}

}  // namespace gausscell
