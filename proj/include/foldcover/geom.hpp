#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace foldcover {

/// Absolute tolerance used by every geometric predicate. Inputs are expected
/// at unit scale (circumradius of order 1).
inline constexpr double kTolerance = 1e-9;

inline constexpr double kPi = 3.14159265358979323846;

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateHullError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  Point& operator+=(const Point& o) { x += o.x; y += o.y; return *this; }
  Point& operator-=(const Point& o) { x -= o.x; y -= o.y; return *this; }
  Point& operator*=(double s) { x *= s; y *= s; return *this; }
};

inline Point operator+(Point a, const Point& b) { return a += b; }
inline Point operator-(Point a, const Point& b) { return a -= b; }
inline Point operator-(const Point& a) { return {-a.x, -a.y}; }
inline Point operator*(Point a, double s) { return a *= s; }
inline Point operator*(double s, Point a) { return a *= s; }
inline Point operator/(const Point& a, double s) { return {a.x / s, a.y / s}; }
inline bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }

inline double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Point& a) { return std::hypot(a.x, a.y); }
inline double dist(const Point& a, const Point& b) { return norm(a - b); }
/// Orientation of the triple: > 0 for a left turn.
inline double orient(const Point& a, const Point& b, const Point& c) { return cross(b - a, c - a); }
inline Point perp(const Point& a) { return {-a.y, a.x}; }
inline Point unit_vector(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline Point rotate(const Point& p, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

/// Oriented line x*cos(angle) + y*sin(angle) = offset, angle in [0, pi).
/// The positive side is where the signed distance is > 0.
class Line {
 public:
  Line() = default;
  /// Any real angle is accepted and canonicalized into [0, pi).
  Line(double angle, double offset);
  static Line through(const Point& p, const Point& q);
  /// Line through p with the given direction vector.
  static Line through_with_direction(const Point& p, const Point& direction);

  double angle() const { return angle_; }
  double offset() const { return offset_; }
  Point normal() const { return {cos_, sin_}; }
  Point direction() const { return {-sin_, cos_}; }
  double signed_distance(const Point& p) const { return p.x * cos_ + p.y * sin_ - offset_; }
  /// The orthogonal projection of the origin.
  Point anchor() const { return normal() * offset_; }
  Line shifted(double delta) const { return Line(angle_, offset_ + delta); }

 private:
  double angle_ = 0.0;
  double offset_ = 0.0;
  double cos_ = 1.0;
  double sin_ = 0.0;
};

/// Simple polygon, counterclockwise, closed implicitly.
struct Polygon {
  std::vector<Point> vertices;

  std::size_t size() const { return vertices.size(); }
  const Point& operator[](std::size_t i) const { return vertices[i]; }
  const Point& vertex(std::size_t i) const { return vertices[i % vertices.size()]; }
};

/// Union of polygons whose interiors may overlap (a folded image).
struct PolyShape {
  std::vector<Polygon> parts;
};

/// Similarity placing a base shape: x -> translation + scale * R(rotation) * M(x),
/// where M mirrors x -> (-x, y) when `reflected` is set.
struct Pose {
  double rotation = 0.0;
  bool reflected = false;
  Point translation{};
  double scale = 1.0;

  Point apply(const Point& p) const;
  Point apply_inverse(const Point& p) const;
};

// ---- polygon construction and measures -------------------------------------

double signed_area(std::span<const Point> pts);
double area(const Polygon& poly);
double perimeter(const Polygon& poly);
Point centroid(const Polygon& poly);

/// Orients counterclockwise, drops the closing duplicate and any vertex within
/// `tol` of its predecessor. Throws GeometryError when fewer than three
/// vertices or zero area remain.
Polygon make_polygon(std::vector<Point> pts, double tol = kTolerance);

bool is_convex(const Polygon& poly, double tol = kTolerance);
bool is_simple(const Polygon& poly);

double total_area(const PolyShape& shape);

// ---- reflection, splitting, hulls ------------------------------------------

Point reflect_point(const Point& p, const Line& line);
Polygon reflect_polygon(const Polygon& poly, const Line& line);
Polygon transform_polygon(const Polygon& poly, const Pose& pose);

enum class Side { Positive, Negative };

inline Side opposite(Side s) { return s == Side::Positive ? Side::Negative : Side::Positive; }

struct SplitResult {
  std::vector<Polygon> positive;
  std::vector<Polygon> negative;
  /// True iff the line meets the interior of the polygon.
  bool crossed = false;
  /// Offset actually used after grazing nudges (equals the input offset when none).
  Line line_used;
  int nudges = 0;

  const std::vector<Polygon>& side(Side s) const { return s == Side::Positive ? positive : negative; }
};

/// Connected components of poly minus line, labelled by side. A line passing
/// within `tol` of a vertex is nudged by +tol until it does not.
SplitResult split_by_line(const Polygon& poly, const Line& line, double tol = kTolerance);

/// Counterclockwise hull without collinear vertices. Throws DegenerateHullError
/// for fewer than three non-collinear points.
Polygon convex_hull(std::vector<Point> pts, double tol = kTolerance);

/// Hull vertices, degenerating gracefully: a single point or segment endpoints.
std::vector<Point> hull_points(std::vector<Point> pts, double tol = kTolerance);

// ---- queries ----------------------------------------------------------------

double distance_to_segment(const Point& p, const Point& a, const Point& b);
double distance_to_boundary(const Polygon& poly, const Point& p);
/// Strict interior test by crossing number (boundary behaviour unspecified).
bool inside_crossing(const Polygon& poly, const Point& p);
/// Positive inside, negative outside: distance to the boundary with sign.
double signed_depth(const Polygon& poly, const Point& p);

bool contains_point(const Polygon& poly, const Point& p, double tol = kTolerance);
bool contains_point(const PolyShape& shape, const Point& p, double tol = kTolerance);

double support(std::span<const Point> pts, const Point& u);
double support(const Polygon& poly, const Point& u);

/// Every vertex of every part.
std::vector<Point> all_vertices(const PolyShape& shape);

/// Boundary points of the polygon: all vertices plus interior points on each
/// edge so that consecutive samples are at most `spacing` apart.
std::vector<Point> boundary_samples(const Polygon& poly, double spacing);

bool segments_properly_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

/// Uniform-grid bucketing of a polygon's edges for repeated point and segment
/// queries against the same (possibly large) polygon. Immutable once built.
class PolygonIndex {
 public:
  PolygonIndex() = default;
  explicit PolygonIndex(Polygon poly);

  const Polygon& polygon() const { return poly_; }
  /// True iff p is inside or within tol of the boundary.
  bool contains(const Point& p, double tol = kTolerance) const;
  /// The closed segment pq lies in the closed polygon (boundary contact allowed).
  bool segment_inside(const Point& p, const Point& q) const;
  /// Distance from p to the nearest edge, by rings of grid cells around p.
  double distance_to_boundary(const Point& p) const;

 private:
  std::size_t cell_x(double x) const;
  std::size_t cell_y(double y) const;
  template <class F>
  void for_cells_on_segment(const Point& p, const Point& q, F&& visit) const;

  Polygon poly_;
  Point lo_{}, hi_{};
  std::size_t nx_ = 1, ny_ = 1;
  double cw_ = 1.0, ch_ = 1.0;
  std::vector<std::vector<std::size_t>> cells_;
  std::vector<std::vector<std::size_t>> rows_;
};

}  // namespace foldcover
