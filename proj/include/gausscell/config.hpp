#pragma once

#include <stdexcept>
#include <string>

namespace gausscell {

// Library-wide tolerance block. All geometric comparisons use geom_eps scaled
// by operand magnitude unless a quantity-specific tolerance is listed here.
struct Tolerances {
  double geom_eps = 1e-12;       // generic geometric epsilon
  double lorentz_eps = 1e-10;    // m^T J m = J residual for group elements
  double hpoint_renorm = 1e-6;   // max hyperboloid residual fixed by renormalization
  double relator_eps = 1e-9;     // holonomy relator residual
  double cocycle_eps = 1e-8;     // cocycle relator residual (relative to scale)
  double coplanar_eps = 1e-9;    // relative normal alignment for face merging
  double dedupe_eps = 1e-10;     // orbit point deduplication distance
  double balance_tol = 1e-8;     // per-vertex balance residual
  double svd_rank_rel = 1e-8;    // relative singular value cutoff for rank
  double delaunay_tie = 1e-10;   // |alpha+beta-pi| treated as a co-circular tie
};

inline const Tolerances& default_tol() {
  static Tolerances t;
  return t;
}

enum class ErrorCode {
  DegeneratePair,
  NonFuchsian,
  DegenerateRepresentation,
  UncertifiedHull,
  NonSpacelikeFace,
  DegenerateConfiguration,
  PositiveCurvatureVertex,
  BalanceViolation,
  NonClosingPolygon,
  NonConvexPolygon,
  FlipLimitExceeded,
  CorridorEscape,
  FlatCorner,
  NoConvergence,
  CombinatorialChurn,
  InvalidInput,
  UnknownSuite,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DegeneratePair: return "degenerate_pair";
    case ErrorCode::NonFuchsian: return "non_fuchsian";
    case ErrorCode::DegenerateRepresentation: return "degenerate_representation";
    case ErrorCode::UncertifiedHull: return "uncertified_hull";
    case ErrorCode::NonSpacelikeFace: return "non_spacelike_face";
    case ErrorCode::DegenerateConfiguration: return "degenerate_configuration";
    case ErrorCode::PositiveCurvatureVertex: return "positive_curvature_vertex";
    case ErrorCode::BalanceViolation: return "balance_violation";
    case ErrorCode::NonClosingPolygon: return "non_closing_polygon";
    case ErrorCode::NonConvexPolygon: return "non_convex_polygon";
    case ErrorCode::FlipLimitExceeded: return "flip_limit_exceeded";
    case ErrorCode::CorridorEscape: return "corridor_escape";
    case ErrorCode::FlatCorner: return "flat_corner";
    case ErrorCode::NoConvergence: return "no_convergence";
    case ErrorCode::CombinatorialChurn: return "combinatorial_churn";
    case ErrorCode::InvalidInput: return "invalid_input";
    case ErrorCode::UnknownSuite: return "unknown_suite";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gausscell
