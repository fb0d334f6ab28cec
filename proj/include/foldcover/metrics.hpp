#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "foldcover/geom.hpp"

namespace foldcover {

struct Circle {
  Point center;
  double radius = 0.0;
};

/// Welzl-style incremental smallest enclosing circle over a seeded shuffle.
Circle min_enclosing_circle(std::span<const Point> pts, std::uint64_t seed = 42);

/// Largest inscribed circle. Convex polygons use the Chebyshev-center linear
/// program; other polygons a coarse-to-fine grid with pattern-search polish.
Circle inradius(const Polygon& poly);

/// Shortest paths inside a simple polygon through its reflex vertices.
class Geodesics {
 public:
  explicit Geodesics(const Polygon& poly);

  const Polygon& polygon() const { return index_.polygon(); }
  bool convex() const { return reflex_.empty(); }
  bool visible(const Point& p, const Point& q) const;
  /// Throws std::domain_error when p or q lies outside the polygon.
  double distance(const Point& p, const Point& q) const;
  /// Geodesic distance from p to every polygon vertex.
  std::vector<double> distances_to_vertices(const Point& p) const;
  /// Geodesic distances between vertex i and every vertex.
  std::vector<double> vertex_distances(std::size_t i) const;

 private:
  PolygonIndex index_;
  std::vector<std::size_t> reflex_;
  // reflex_to_vertex_[k][v]: geodesic distance from reflex vertex k to vertex v.
  std::vector<std::vector<double>> reflex_to_vertex_;
};

double geodesic_distance(const Polygon& poly, const Point& p, const Point& q);

struct GeodesicPair {
  double length = 0.0;
  Point a, b;
};

/// Maximum geodesic distance over vertex pairs.
GeodesicPair geodesic_diameter(const Polygon& poly);

/// Convex: the circumcircle. Otherwise a coarse-to-fine grid minimizing the
/// max geodesic distance to the vertices.
Circle geodesic_radius(const Polygon& poly);

struct MetricsReport {
  Circle incircle;
  Circle circumcircle;
  GeodesicPair diameter;
  Circle geodesic;
  bool convex = true;

  double r() const { return incircle.radius; }
  double R() const { return geodesic.radius; }
  double D() const { return diameter.length; }
  /// D - sqrt(3) R and 2R - D; both non-negative when Jung's inequality holds.
  double jung_lower_margin() const;
  double jung_upper_margin() const;
};

MetricsReport compute_metrics(const Polygon& poly);

}  // namespace foldcover
