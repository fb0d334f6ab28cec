#pragma once

#include <cstdint>

#include "foldcover/geom.hpp"

namespace foldcover {

/// Regular n-gon centered at the origin with a vertex at angle `phase`.
Polygon regular_polygon(int n, double circumradius = 1.0, double phase = 0.0);
Polygon unit_square();
/// Vertices (-1,0), (1,0), (0, sqrt 3).
Polygon side2_triangle();
/// Hexagonal L: [0,3]x[0,1] joined with [0,1]x[0,3].
Polygon l_shape();
Polygon rectangle(double w, double h);
/// n points at sorted random angles on a random ellipse, so always in convex
/// position. Same seed, same polygon.
Polygon random_convex_polygon(int n, std::uint64_t seed);

/// Unit disk at the origin with the cap beyond the chord y = cos(phi)
/// removed and the two limacon loops at A and B added back.
struct LimaconShape {
  double phi = 0.0;
  double chord_distance = 0.0;
  Point A;  // (-sin phi, cos phi)
  Point B;  // ( sin phi, cos phi)
  /// Loop boundary of the reflections of an endpoint, before the union.
  Polygon loop_A;
  Polygon loop_B;
  Polygon boundary;
};

/// Loop points in a frame with the endpoint at the origin, scaled so the
/// chord-distance circle is a unit circle at (-d, 0): r(t) = 2 - 2 d cos t for
/// |t| <= arccos(1/d); r is never positive there, so points lie toward the center.
std::vector<Point> limacon_loop_local(double d, int samples);

/// resolution = vertices on the full circle. Throws std::domain_error unless
/// 0 < phi < pi/2.
LimaconShape build_S_phi(double phi, int resolution = 1440);

/// Union of the unit disk at C = (0,0) and the disk at D = (d,0) through the
/// endpoints of the chord x = e.
struct BumpsShape {
  double d = 0.0;
  double e = 0.0;
  Point C;
  Point D;
  Point A;
  Point B;
  double r = 0.0;
  Polygon boundary;
};

/// Throws std::domain_error unless 0 < d <= e < 1.
BumpsShape build_bumps(double d, double e, int resolution = 1440);

}  // namespace foldcover
