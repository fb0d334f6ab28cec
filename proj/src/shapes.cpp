#include "foldcover/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#define BOOST_GEOMETRY_NO_ROBUSTNESS
#define BOOST_ALLOW_DEPRECATED_HEADERS
#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>

namespace foldcover {

namespace {

namespace bg = boost::geometry;
using BgPoint = bg::model::d2::point_xy<double>;
using BgPolygon = bg::model::polygon<BgPoint, false, false>;  // ccw, open
using BgMulti = bg::model::multi_polygon<BgPolygon>;

BgPolygon to_bg(const Polygon& p) {
  BgPolygon out;
  for (const Point& v : p.vertices) out.outer().emplace_back(v.x, v.y);
  return out;
}

BgMulti unite(const BgMulti& a, const BgPolygon& b) {
  BgMulti out;
  bg::union_(a, b, out);
  return out;
}

// Points on the circle (center, radius) from angle a0 to a1 inclusive.
void append_arc(std::vector<Point>& out, const Point& center, double radius, double a0, double a1, int segments,
                bool include_first, bool include_last) {
  for (int i = include_first ? 0 : 1; i <= segments - (include_last ? 0 : 1); ++i) {
    const double a = a0 + (a1 - a0) * i / segments;
    out.push_back(center + unit_vector(a) * radius);
  }
}

int arc_segments(int resolution, double sweep) {
  return std::max(8, static_cast<int>(std::ceil(resolution * sweep / (2.0 * kPi))));
}

}  // namespace

Polygon regular_polygon(int n, double circumradius, double phase) {
  if (n < 3) throw std::invalid_argument("regular polygon needs n >= 3");
  std::vector<Point> v;
  for (int i = 0; i < n; ++i) v.push_back(unit_vector(phase + 2.0 * kPi * i / n) * circumradius);
  return Polygon{std::move(v)};
}

Polygon unit_square() { return Polygon{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}; }

Polygon side2_triangle() { return Polygon{{{-1, 0}, {1, 0}, {0, std::sqrt(3.0)}}}; }

Polygon l_shape() { return Polygon{{{0, 0}, {3, 0}, {3, 1}, {1, 1}, {1, 3}, {0, 3}}}; }

Polygon rectangle(double w, double h) { return Polygon{{{0, 0}, {w, 0}, {w, h}, {0, h}}}; }

Polygon random_convex_polygon(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("random_convex_polygon: n must be at least 3");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> turn(0.0, 2.0 * kPi), squash(0.4, 1.0);
  const double b = squash(rng), tilt = turn(rng);
  std::vector<double> angles(static_cast<std::size_t>(n));
  for (double& a : angles) a = turn(rng);
  std::sort(angles.begin(), angles.end());
  Polygon out;
  for (double a : angles) out.vertices.push_back(rotate(Point{std::cos(a), b * std::sin(a)}, tilt));
  return make_polygon(out.vertices);
}

std::vector<Point> limacon_loop_local(double d, int samples) {
  const double half = std::acos(1.0 / d);
  std::vector<Point> out;
  for (int i = 0; i < samples; ++i) {
    const double t = -half + 2.0 * half * i / samples;
    out.push_back(unit_vector(t) * (2.0 - 2.0 * d * std::cos(t)));
  }
  return out;
}

LimaconShape build_S_phi(double phi, int resolution) {
  if (!(phi > 0.0 && phi < kPi / 2)) throw std::domain_error("build_S_phi: phi must lie in (0, pi/2)");
  LimaconShape s;
  s.phi = phi;
  s.chord_distance = std::cos(phi);
  s.A = {-std::sin(phi), std::cos(phi)};
  s.B = {std::sin(phi), std::cos(phi)};

  std::vector<Point> cut;
  const double sweep = 2.0 * kPi - 2.0 * phi;
  append_arc(cut, {0, 0}, 1.0, kPi / 2 + phi, kPi / 2 + phi + sweep, arc_segments(resolution, sweep), true, true);
  const Polygon base = make_polygon(std::move(cut));

  const double d = 1.0 / s.chord_distance;
  const auto local = limacon_loop_local(d, std::max(64, resolution / 4));
  auto place = [&](const Point& end) {
    const double a = std::atan2(end.y, end.x);
    std::vector<Point> pts;
    for (const Point& q : local) pts.push_back(end + rotate(q, a) * s.chord_distance);
    return make_polygon(std::move(pts), 1e-12);
  };
  s.loop_A = place(s.A);
  s.loop_B = place(s.B);

  BgMulti acc;
  acc.push_back(to_bg(base));
  acc = unite(acc, to_bg(s.loop_A));
  acc = unite(acc, to_bg(s.loop_B));
  if (acc.size() != 1 || !acc.front().inners().empty()) throw GeometryError("build_S_phi: union is not a simple region");
  std::vector<Point> outer;
  for (const BgPoint& p : acc.front().outer()) outer.push_back({p.x(), p.y()});
  s.boundary = make_polygon(std::move(outer));
  return s;
}

BumpsShape build_bumps(double d, double e, int resolution) {
  if (!(d > 0.0 && d <= e && e < 1.0)) throw std::domain_error("build_bumps: need 0 < d <= e < 1");
  BumpsShape s;
  s.d = d;
  s.e = e;
  s.C = {0, 0};
  s.D = {d, 0};
  const double h = std::sqrt(1.0 - e * e);
  s.A = {e, h};
  s.B = {e, -h};
  s.r = dist(s.A, s.D);

  // Unit circle outside the small disk (x <= e), then the small circle outside the unit disk.
  std::vector<Point> v;
  const double a = std::atan2(h, e);
  append_arc(v, s.C, 1.0, a, 2.0 * kPi - a, arc_segments(resolution, 2.0 * kPi - 2.0 * a), true, true);
  v.front() = s.A;
  v.back() = s.B;
  const double b0 = std::atan2(-h, e - d), b1 = std::atan2(h, e - d);
  append_arc(v, s.D, s.r, b0, b1, arc_segments(resolution, b1 - b0), false, false);
  s.boundary = make_polygon(std::move(v), 1e-12);
  return s;
}

}  // namespace foldcover
