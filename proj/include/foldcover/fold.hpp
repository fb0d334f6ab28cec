#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "foldcover/geom.hpp"
#include "foldcover/metrics.hpp"

namespace foldcover {

/// Which components of one side of the fold line get reflected.
struct FoldMask {
  Side side = Side::Positive;
  /// Bit i selects component i of that side; nullopt means every component.
  std::optional<std::uint64_t> components;

  static FoldMask all(Side side) { return {side, std::nullopt}; }
  static FoldMask only(Side side, std::initializer_list<std::size_t> indices);
  bool selects(std::size_t component) const;
};

struct PartProvenance {
  Side side = Side::Positive;
  std::size_t component = 0;
  bool reflected = false;
};

struct FoldedState {
  PolyShape parts;
  std::vector<PartProvenance> provenance;
  /// Components of the split before any reflection, parallel to `parts`.
  std::vector<Polygon> source_parts;
  Line fold_line;
  /// The line actually used after grazing nudges.
  Line line_used;
  int nudges = 0;
  bool crossed = false;
  FoldMask mask;

  std::vector<Point> vertices() const { return all_vertices(parts); }
  /// Image of a point of the source shape.
  Point map_point(const Point& p) const;
};

/// Reflects the masked components of `mask.side` across the line. Throws
/// std::invalid_argument for an empty mask or a component index out of range.
/// A line missing the interior returns the shape unchanged with crossed=false.
FoldedState single_fold(const Polygon& shape, const Line& line, const FoldMask& mask);

/// Folds every part of a union: everything on `side` is reflected. Used to
/// compose folds.
FoldedState fold_all(const PolyShape& shape, const Line& line, Side side);

/// The unit square folded so that the corner (0,1) lands on P. P must satisfy
/// 0 < px < 4/5 and 1 < py < sqrt(2px - px^2 + 1); otherwise std::invalid_argument.
FoldedState fold_vertex_image(const Point& P);
bool in_square_fold_region(const Point& P);

/// Open polyline.
struct PolyPath {
  std::vector<Point> vertices;

  double length() const;
  /// Signed turn angle at each interior vertex (positive = left).
  std::vector<double> turn_angles() const;
};

/// Reflects the remainder of the path across the incoming edge at every left
/// turn, so the result never turns left.
PolyPath spiralize(const PolyPath& path);

/// A straight path of length D folded by n crimps (each a pair of
/// reflections turning the remainder by 2 pi / n) into a closed regular
/// n-gon centered at the origin. Throws std::invalid_argument for D <= 0 or n < 8.
PolyPath crimp_circle(double D, int n);

struct SimpleLowerBound {
  double value = 0.0;
  /// Radius D / (2 pi) of the circle the crimped diameter path wraps around.
  double crimp_radius = 0.0;
  Circle incircle;
};

SimpleLowerBound simple_lower_bound(const MetricsReport& metrics);
SimpleLowerBound simple_lower_bound(const Polygon& shape);

}  // namespace foldcover
