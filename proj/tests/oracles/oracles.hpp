#pragma once

// Independent reference computations used to check the library. They favour
// brute force over cleverness and share no code paths with the solvers they
// check beyond basic Point arithmetic.

#include <cstdint>
#include <span>
#include <vector>

#include "foldcover/geom.hpp"

namespace foldcover::oracle {

/// Rasterizes poly at the given cell size and counts 4-connected components
/// of the cells on each side of the line: {positive, negative}.
std::pair<int, int> flood_fill_components(const Polygon& poly, const Line& line, double cell);

/// Smallest enclosing circle by checking every pair and triple of points.
struct Circle {
  Point center;
  double radius = 0.0;
};
Circle brute_force_enclosing_circle(std::span<const Point> pts);

/// Largest inscribed disk radius by evaluating distance-to-boundary on a grid.
Circle grid_inradius(const Polygon& poly, double cell);

/// Shortest path length between two points on an 8-connected grid graph of
/// interior nodes with straight visibility shortcuts to every node within
/// a small radius.
double grid_geodesic_distance(const Polygon& poly, const Point& p, const Point& q, double cell);

/// Max over boundary-grid sample pairs of grid_geodesic-like distance using
/// the exact visibility graph over sample points.
double sampled_geodesic_diameter(const Polygon& poly, double spacing);

/// min over interior grid points of max geodesic distance to vertices.
double grid_geodesic_radius(const Polygon& poly, double cell);

/// Minimum enclosing square side by scanning `samples` orientations.
double dense_min_square(std::span<const Point> pts, std::size_t samples);

/// Minimum enclosing equilateral triangle side by scanning orientations and
/// solving each fixed orientation by translation search over support lines.
double dense_min_triangle(std::span<const Point> pts, std::size_t samples);

/// Fixed-orientation cover of pts by t + c*container (container convex, ccw),
/// found by exhaustive vertex enumeration of the three-variable program.
struct Cover {
  double c = 0.0;
  Point t;
};
Cover vertex_enumeration_cover(const Polygon& container, std::span<const Point> pts);

/// Same problem solved by scanning translations on a grid and computing the
/// needed scale per translation directly.
double translation_grid_cover(const Polygon& container, std::span<const Point> pts, double lo,
                              double hi, std::size_t steps);

/// Monte-Carlo area of the union of polygons with its standard error.
std::pair<double, double> union_area_monte_carlo(const std::vector<Polygon>& parts,
                                                 std::size_t samples, std::uint64_t seed);

/// Vertices of a convex polygon folded across a line: the kept vertices, the
/// two crossings, and the reflections of the vertices on the folded side.
std::vector<Point> fold_convex_points(const Polygon& convex, const Line& line, bool fold_positive);

/// Largest dense-scan enclosing side over an angle x offset grid of folds of
/// a convex polygon, relative to the side of the polygon itself. `side` is
/// dense_min_square or dense_min_triangle.
double brute_one_fold_factor(const Polygon& convex, std::size_t angles, std::size_t offsets,
                             double (*side)(std::span<const Point>, std::size_t), std::size_t samples);

/// Every sample of the parts' boundaries (spacing apart) lies within tol of
/// the copy t + c R(theta) M(S), where M mirrors x when `reflected`.
bool covers_sampled(const Polygon& S, const std::vector<Polygon>& parts, double theta, bool reflected,
                    const Point& t, double c, double spacing, double tol);

/// Membership in the loop of the chord endpoint A as the intersection of the
/// disks centered on the circle of radius `chord` about the origin (the arc
/// between the tangents through A) whose boundaries pass through A.
bool in_limacon_loop(const Point& p, const Point& A, double chord, std::size_t arc_samples);

/// Area of S_phi from its set definition, by midpoint cells of the given size.
double s_phi_area_grid(double phi, double cell);

}  // namespace foldcover::oracle
