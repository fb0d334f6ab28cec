#include "foldcover/fold.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace foldcover {

FoldMask FoldMask::only(Side side, std::initializer_list<std::size_t> indices) {
  std::uint64_t bits = 0;
  for (std::size_t i : indices) {
    if (i >= 64) throw std::invalid_argument("fold mask component index out of range");
    bits |= std::uint64_t{1} << i;
  }
  return {side, bits};
}

bool FoldMask::selects(std::size_t component) const {
  if (!components) return true;
  return component < 64 && ((*components >> component) & 1U) != 0;
}

Point FoldedState::map_point(const Point& p) const {
  if (!crossed) return p;
  const double d = line_used.signed_distance(p);
  if (std::abs(d) <= 1e-12) return p;
  const Side s = d > 0 ? Side::Positive : Side::Negative;
  if (s != mask.side) return p;
  std::size_t nearest = source_parts.size();
  double nearest_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < source_parts.size(); ++i) {
    if (provenance[i].side != s) continue;
    if (contains_point(source_parts[i], p)) {
      nearest = i;
      break;
    }
    const double di = distance_to_boundary(source_parts[i], p);
    if (di < nearest_d) {
      nearest_d = di;
      nearest = i;
    }
  }
  if (nearest < source_parts.size() && provenance[nearest].reflected) return reflect_point(p, line_used);
  return p;
}

FoldedState single_fold(const Polygon& shape, const Line& line, const FoldMask& mask) {
  if (mask.components && *mask.components == 0) throw std::invalid_argument("fold mask selects no component");
  const SplitResult split = split_by_line(shape, line);
  FoldedState out;
  out.fold_line = line;
  out.line_used = split.line_used;
  out.nudges = split.nudges;
  out.crossed = split.crossed;
  out.mask = mask;
  if (!split.crossed) {
    out.parts.parts.push_back(shape);
    out.source_parts.push_back(shape);
    out.provenance.push_back({split.positive.empty() ? Side::Negative : Side::Positive, 0, false});
    return out;
  }
  const auto& off = split.side(mask.side);
  if (mask.components && off.size() < 64 && (*mask.components >> off.size()) != 0) {
    throw std::invalid_argument("fold mask selects a component that does not exist");
  }
  for (Side s : {Side::Positive, Side::Negative}) {
    const auto& comps = split.side(s);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const bool reflect = s == mask.side && mask.selects(i);
      out.parts.parts.push_back(reflect ? reflect_polygon(comps[i], split.line_used) : comps[i]);
      out.source_parts.push_back(comps[i]);
      out.provenance.push_back({s, i, reflect});
    }
  }
  return out;
}

FoldedState fold_all(const PolyShape& shape, const Line& line, Side side) {
  FoldedState out;
  out.fold_line = line;
  out.line_used = line;
  out.mask = FoldMask::all(side);
  // Nudge until no vertex of any part grazes the line.
  for (;;) {
    bool grazing = false;
    for (const Polygon& part : shape.parts)
      for (const Point& p : part.vertices) grazing = grazing || std::abs(out.line_used.signed_distance(p)) <= kTolerance;
    if (!grazing) break;
    if (++out.nudges > 64) throw GeometryError("fold_all: could not resolve grazing line");
    out.line_used = out.line_used.shifted(kTolerance);
  }
  std::size_t index[2] = {0, 0};
  for (const Polygon& part : shape.parts) {
    const SplitResult split = split_by_line(part, out.line_used);
    out.crossed = out.crossed || split.crossed;
    for (Side s : {Side::Positive, Side::Negative}) {
      for (const Polygon& comp : split.side(s)) {
        const bool reflect = s == side;
        out.parts.parts.push_back(reflect ? reflect_polygon(comp, out.line_used) : comp);
        out.source_parts.push_back(comp);
        out.provenance.push_back({s, index[s == Side::Positive ? 0 : 1]++, reflect});
      }
    }
  }
  // map_point treats a fold that reflects whole parts like a crossing fold.
  out.crossed = true;
  return out;
}

bool in_square_fold_region(const Point& P) {
  return P.x > 0.0 && P.x < 0.8 && P.y > 1.0 && P.y < std::sqrt(2.0 * P.x - P.x * P.x + 1.0);
}

FoldedState fold_vertex_image(const Point& P) {
  if (!in_square_fold_region(P)) throw std::invalid_argument("fold_vertex_image: P outside the parameter region");
  const Polygon square{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
  const Point corner{0, 1};
  // Perpendicular bisector of corner and P.
  const Point mid = (corner + P) * 0.5;
  const Line line = Line::through_with_direction(mid, perp(P - corner));
  const Side side = line.signed_distance(corner) > 0 ? Side::Positive : Side::Negative;
  return single_fold(square, line, FoldMask::all(side));
}

double PolyPath::length() const {
  double s = 0.0;
  for (std::size_t i = 1; i < vertices.size(); ++i) s += dist(vertices[i - 1], vertices[i]);
  return s;
}

std::vector<double> PolyPath::turn_angles() const {
  std::vector<double> out;
  for (std::size_t i = 1; i + 1 < vertices.size(); ++i) {
    const Point a = vertices[i] - vertices[i - 1];
    const Point b = vertices[i + 1] - vertices[i];
    out.push_back(std::atan2(cross(a, b), dot(a, b)));
  }
  return out;
}

PolyPath spiralize(const PolyPath& path) {
  PolyPath out = path;
  auto& v = out.vertices;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (orient(v[i - 1], v[i], v[i + 1]) <= 0.0) continue;
    const Line incoming = Line::through(v[i - 1], v[i]);
    for (std::size_t j = i + 1; j < v.size(); ++j) v[j] = reflect_point(v[j], incoming);
  }
  return out;
}

PolyPath crimp_circle(double D, int n) {
  if (!(D > 0.0) || n < 8) throw std::invalid_argument("crimp_circle: need D > 0 and n >= 8");
  const double step = D / n;
  const double half = kPi / n;
  const double vertex_radius = step / (2.0 * std::sin(half));
  const Point v0{0.0, vertex_radius};
  const Point dir = unit_vector(-half);  // direction of the first chord, turning clockwise
  PolyPath path;
  for (int k = 0; k <= n; ++k) path.vertices.push_back(v0 + dir * (step * k));
  auto& v = path.vertices;
  for (int i = 1; i < n; ++i) {
    const Point incoming = v[i] - v[i - 1];
    const Line first = Line::through_with_direction(v[i], incoming);
    const Line second = Line::through_with_direction(v[i], rotate(incoming, -half));
    for (int j = i + 1; j <= n; ++j) v[j] = reflect_point(reflect_point(v[j], first), second);
  }
  return path;
}

SimpleLowerBound simple_lower_bound(const MetricsReport& m) {
  return {m.D() / (2.0 * kPi * m.r()), m.D() / (2.0 * kPi), m.incircle};
}

SimpleLowerBound simple_lower_bound(const Polygon& shape) { return simple_lower_bound(compute_metrics(shape)); }

}  // namespace foldcover
