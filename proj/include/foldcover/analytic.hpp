#pragma once

#include <optional>

#include "foldcover/fold.hpp"
#include "foldcover/geom.hpp"

namespace foldcover {

/// Fold of [0,1]^2 taking the corner (0,1) to P.
struct SquareFoldGeometry {
  Point P;
  Line ell;
  Point T;  // on y = 1
  Point B;  // on y = 0
  Point Q;  // image of (0,0)
};

/// Closed forms for the fold line and the points T, B, Q. Throws
/// std::domain_error outside 0 < p_x < 4/5, 1 < p_y < sqrt(2 p_x - p_x^2 + 1).
SquareFoldGeometry square_fold_geometry(const Point& P);

/// Sides of the three candidate enclosing squares of the folded square.
struct SigmaTriple {
  double s1 = 0.0;  // axis-parallel, p_y
  double s2 = 0.0;  // d(B, l2), l2 through P and (1,1)
  double s3 = 0.0;  // d(T, l3), l3: y = m (x - 1)
  double d_B_l2 = 0.0;
  double d_corner_l2p = 0.0;  // d((1,0), l2'), l2' orthogonal to l2 through T
  double d_Q_l2p = 0.0;
  double m = 0.0;
  double N1 = 0.0;
  double N2 = 0.0;
  double D2 = 0.0;
  /// p_y <= (1 + sqrt(4 p_x - 4 p_x^2 + 1)) / 2, where sigma_2 is used.
  bool sigma2_selected = false;

  /// min(s1, s3), with s2 included when sigma2_selected.
  double selected_min() const;
  double min() const;
};

/// Throws std::domain_error outside the parameter region.
SigmaTriple sigma_sides(const Point& P);

/// The three squares as polygons, for rendering and enclosure checks.
struct SigmaSquares {
  Polygon sigma1, sigma2, sigma3;
};
SigmaSquares sigma_squares(const Point& P);

/// Candidate enclosing triangles of the side-2 triangle folded so that its
/// apex (0, sqrt 3) lands on P. Empty entries do not apply to this P.
struct TriangleTauReport {
  Point P;
  Line fold_line;
  std::optional<double> tau1;  // p_y >= 0: scaling about (-1,0) or (1,0)
  std::optional<double> tau2;  // p_y <= 0: scaling about the apex
  std::optional<double> tau3;  // p_y <= -sqrt 3 / 3: edge on the fold line
  double tau4 = 0.0;           // edge through (-1,0) and P

  /// Smallest applicable tau among tau1..tau3.
  double best() const;
};

TriangleTauReport triangle_tau_factors(const Point& P);

/// The folded side-2 triangle with apex image P.
FoldedState triangle_apex_fold(const Point& P);

}  // namespace foldcover
