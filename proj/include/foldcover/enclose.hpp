#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "foldcover/geom.hpp"
#include "foldcover/fold.hpp"

namespace foldcover {

struct Contact {
  Point point;
  std::size_t side = 0;
};

/// A posed container t + scale * R(rotation) * M(base) covering a target.
struct EnclosureResult {
  double scale = 0.0;
  Pose pose;
  std::vector<Contact> contacts;
};

/// Unit-side base shapes the triangle and square solvers pose.
Polygon base_square();    // [0,1]^2
Polygon base_triangle();  // (-1/2,0), (1/2,0), (0, sqrt(3)/2)

struct OrientationSearch {
  std::size_t grid = 2048;
  std::size_t basins = 4;
  double tol = 1e-11;
};

/// Smallest side of an equilateral triangle of orientation theta covering pts:
/// (2/sqrt 3) times the sum of the supports along its three outward normals.
double triangle_side_at(std::span<const Point> pts, double theta);
/// max(width(theta), width(theta + pi/2)).
double square_side_at(std::span<const Point> pts, double theta);

EnclosureResult min_equilateral_triangle(std::span<const Point> pts, OrientationSearch search = {});
EnclosureResult min_square(std::span<const Point> pts, OrientationSearch search = {});

/// Convex container with the symmetry data the orientation search uses.
class Container {
 public:
  enum class Kind { General, Square, EquilateralTriangle };

  /// Throws std::invalid_argument for a non-convex polygon.
  explicit Container(Polygon shape);

  const Polygon& shape() const { return shape_; }
  Kind kind() const { return kind_; }
  /// Order of the rotational symmetry group.
  int symmetry() const { return symmetry_; }
  bool mirror_symmetric() const { return mirror_symmetric_; }
  const Point& centroid() const { return centroid_; }

 private:
  Polygon shape_;
  Kind kind_ = Kind::General;
  int symmetry_ = 1;
  bool mirror_symmetric_ = false;
  Point centroid_{};
};

struct FixedScale {
  double c = 0.0;
  /// Translation of the pose that maps the container's own coordinates.
  Point translation{};
};

/// Minimum c such that pts lie in t + c R(theta) M(S), by the three-variable LP.
FixedScale fixed_rotation_min_scale(const Polygon& S, std::span<const Point> pts, double theta, bool reflected);

struct ScaledCopyOptions {
  OrientationSearch search{};
  /// Use the closed-form triangle/square solvers when the container is one.
  bool fast_paths = true;
};

/// Minimum scale over all rotations and reflections of S covering pts.
EnclosureResult min_scaled_copy(const Container& S, std::span<const Point> pts, ScaledCopyOptions options = {});
EnclosureResult min_scaled_copy(const Container& S, const FoldedState& F, ScaledCopyOptions options = {});

/// Largest distance by which the posed container misses F: boundary samples of
/// F's parts (spacing in F's units) outside S, and reflex vertices of S
/// reaching into a part. Zero when F is covered.
double containment_violation(const PolygonIndex& S, const PolyShape& F, const Pose& pose, double spacing);

/// Convex S: every vertex of F inside the posed S. Otherwise boundary samples
/// at spacing tol are checked too.
bool contains_region(const Polygon& S, const PolyShape& F, const Pose& pose, double tol);

}  // namespace foldcover
