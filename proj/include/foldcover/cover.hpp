#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "foldcover/enclose.hpp"
#include "foldcover/fold.hpp"
#include "foldcover/metrics.hpp"

namespace foldcover {

/// ((sqrt 5 - 1)/2)^(5/2)
double kappa();
/// 2 atan(((sqrt 5 - 1)/2)^(1/2)), the maximizer of r_phi.
double phi_star();
/// Inradius of the triangle (t1, p*, t2') with central angle phi on a circle of radius R.
double r_phi(double phi, double R);

double upper_bound_R_over_r(const MetricsReport& metrics);
double upper_bound_R_over_r(const Polygon& S);

struct ConvexLowerBound {
  double value = 0.0;  // kappa R / r
  double R = 0.0;
  double r = 0.0;
  Point center;
  Point t1, t2;
  Line fold_line;
  Side folded_side = Side::Positive;
  /// Image of t2 after the fold, at central angle phi* from t1.
  Point t2_image;
  /// Incircle radius of (t1, center, t2_image) measured on the folded state.
  double inscribed_radius = 0.0;
};

/// Throws std::domain_error for a non-convex polygon.
ConvexLowerBound convex_lower_bound(const Polygon& S);

/// Runs fn(i) for i in [0, count) on up to `threads` workers (0 = hardware).
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

struct CoverOptions {
  /// Fold-line grid over angle [0, pi) and offsets across the width. The angle
  /// range shrinks with the rotational symmetry of S at the same density.
  std::size_t angles = 180;
  std::size_t offsets = 200;
  /// Non-convex shapes enumerate both sides and every mask with a sampled
  /// covering test per fold, so they get a coarser grid.
  std::size_t nonconvex_angles = 90;
  std::size_t nonconvex_offsets = 100;
  bool refine = true;
  /// Orientation grid of the final enclosing computations and of screening.
  std::size_t theta_grid = 2048;
  std::size_t screen_grid = 256;
  std::size_t refine_candidates = 4;
  int halvings = 6;
  unsigned threads = 0;
  std::uint64_t seed = 42;
};

struct FoldChoice {
  Line line;
  FoldMask mask;
};

struct CoverReport {
  std::string shape_id;
  bool convex = true;
  /// Largest enclosing scale found over the searched folds.
  double estimate = 0.0;
  /// Certified bound for the witness fold: the exact scale for convex S, the
  /// convex-hull bound otherwise.
  double certified = 0.0;
  FoldChoice witness;
  FoldedState folded;
  EnclosureResult enclosure;
  CoverOptions options;
  std::size_t folds_evaluated = 0;
  bool found = true;
  std::string note;
};

/// Estimate of the 1-fold cover factor by maximizing the enclosing scale over
/// fold lines.
CoverReport one_fold_cover_factor(const Polygon& S, CoverOptions options = {}, std::string shape_id = "");

/// Coarser search settings: a witness only has to clear 1 + 1e-4.
CoverOptions witness_options();

/// A fold whose minimum covering copy needs scale > 1 + 1e-4. Folds through
/// the circumcenter are tried next to the fold-line grid and the better
/// certified value is kept. Reports found = false with a note when neither
/// clears the margin.
CoverReport polygon_witness_fold(const Polygon& P, CoverOptions options = witness_options(), std::string shape_id = "");

/// Smallest covering scale of a folded state by copies of S: exact for convex
/// S, otherwise the best sampled pose (never above R/r).
EnclosureResult cover_scale(const Polygon& S, const FoldedState& F, std::size_t theta_grid = 2048);

/// Image P of the corner (0,1) after moving the fold by the symmetry of
/// [0,1]^2 under which it crosses both horizontal sides with negative slope
/// and meets y = 1 left of 1/2, with the part left of the fold the smaller
/// one. Empty when no symmetry does.
std::optional<Point> square_witness_point(const Line& fold_line);
/// Same for the side-2 triangle: the separated vertex is rotated to the apex
/// (0, sqrt 3) and its image returned.
std::optional<Point> triangle_witness_point(const Line& fold_line);

}  // namespace foldcover
