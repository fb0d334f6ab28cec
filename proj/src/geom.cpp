#include "foldcover/geom.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>

namespace foldcover {

Line::Line(double angle, double offset) {
  double a = std::fmod(angle, 2.0 * kPi);
  if (a < 0.0) a += 2.0 * kPi;
  if (a >= kPi) {
    a -= kPi;
    offset = -offset;
  }
  if (a >= kPi) a = 0.0;  // fmod rounding right below 2*pi
  angle_ = a;
  offset_ = offset;
  cos_ = std::cos(a);
  sin_ = std::sin(a);
}

Line Line::through(const Point& p, const Point& q) { return through_with_direction(p, q - p); }

Line Line::through_with_direction(const Point& p, const Point& direction) {
  const double len = norm(direction);
  if (!(len > 0.0)) throw GeometryError("line through two coincident points");
  const Point n = perp(direction) / len;
  return Line(std::atan2(n.y, n.x), dot(n, p));
}

Point Pose::apply(const Point& p) const {
  const Point m = reflected ? Point{-p.x, p.y} : p;
  return translation + rotate(m, rotation) * scale;
}

Point Pose::apply_inverse(const Point& p) const {
  Point q = rotate((p - translation) / scale, -rotation);
  if (reflected) q.x = -q.x;
  return q;
}

double signed_area(std::span<const Point> pts) {
  const std::size_t n = pts.size();
  if (n < 3) return 0.0;
  // Shoelace relative to the first vertex keeps cancellation small.
  double s = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) s += cross(pts[i] - pts[0], pts[i + 1] - pts[0]);
  return 0.5 * s;
}

double area(const Polygon& poly) { return std::abs(signed_area(poly.vertices)); }

double perimeter(const Polygon& poly) {
  double s = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) s += dist(poly[i], poly.vertex(i + 1));
  return s;
}

Point centroid(const Polygon& poly) {
  const Point o = poly[0];
  double a2 = 0.0;
  Point c{};
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
    const Point p = poly[i] - o, q = poly[i + 1] - o;
    const double w = cross(p, q);
    a2 += w;
    c += (p + q) * w;
  }
  if (a2 == 0.0) return o;
  return o + c / (3.0 * a2);
}

namespace {

std::optional<Polygon> try_make_polygon(std::vector<Point> pts, double tol) {
  if (pts.size() >= 2 && dist(pts.front(), pts.back()) <= tol) pts.pop_back();
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const Point& p : pts) {
    if (out.empty() || dist(out.back(), p) > tol) out.push_back(p);
  }
  while (out.size() >= 2 && dist(out.front(), out.back()) <= tol) out.pop_back();
  if (out.size() < 3) return std::nullopt;
  const double a = signed_area(out);
  if (a == 0.0 || !std::isfinite(a)) return std::nullopt;
  if (a < 0.0) std::reverse(out.begin(), out.end());
  return Polygon{std::move(out)};
}

}  // namespace

Polygon make_polygon(std::vector<Point> pts, double tol) {
  for (const Point& p : pts) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw GeometryError("non-finite polygon vertex");
  }
  auto poly = try_make_polygon(std::move(pts), tol);
  if (!poly) throw GeometryError("polygon needs at least three distinct vertices and nonzero area");
  return *std::move(poly);
}

bool is_convex(const Polygon& poly, double tol) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly.vertex(i + 1);
    const Point& c = poly.vertex(i + 2);
    if (orient(a, b, c) < -tol * std::max(1.0, dist(a, b) * dist(b, c))) return false;
  }
  return true;
}

namespace {

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

bool on_segment(const Point& p, const Point& a, const Point& b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_intersect_closed(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = sign_of(orient(a, b, c)), o2 = sign_of(orient(a, b, d));
  const int o3 = sign_of(orient(c, d, a)), o4 = sign_of(orient(c, d, b));
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(c, a, b)) return true;
  if (o2 == 0 && on_segment(d, a, b)) return true;
  if (o3 == 0 && on_segment(a, c, d)) return true;
  if (o4 == 0 && on_segment(b, c, d)) return true;
  return false;
}

}  // namespace

bool segments_properly_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  const double o1 = orient(a, b, c), o2 = orient(a, b, d);
  const double o3 = orient(c, d, a), o4 = orient(c, d, b);
  return ((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0));
}

bool is_simple(const Polygon& poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly.vertex(i + 1);
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      const Point& c = poly[j];
      const Point& d = poly.vertex(j + 1);
      if (adjacent) {
        // Adjacent edges share one endpoint; they must not fold back onto each other.
        const Point shared = (j == i + 1) ? b : a;
        const Point u = (j == i + 1) ? a : b;
        const Point v = (j == i + 1) ? d : c;
        if (orient(shared, u, v) == 0.0 && dot(u - shared, v - shared) > 0.0) return false;
        continue;
      }
      if (segments_intersect_closed(a, b, c, d)) return false;
    }
  }
  return true;
}

double total_area(const PolyShape& shape) {
  double s = 0.0;
  for (const Polygon& p : shape.parts) s += area(p);
  return s;
}

Point reflect_point(const Point& p, const Line& line) {
  return p - line.normal() * (2.0 * line.signed_distance(p));
}

Polygon reflect_polygon(const Polygon& poly, const Line& line) {
  Polygon out;
  out.vertices.reserve(poly.size());
  // Reflection reverses orientation; walk backwards to stay counterclockwise.
  for (auto it = poly.vertices.rbegin(); it != poly.vertices.rend(); ++it) {
    out.vertices.push_back(reflect_point(*it, line));
  }
  return out;
}

Polygon transform_polygon(const Polygon& poly, const Pose& pose) {
  Polygon out;
  out.vertices.reserve(poly.size());
  for (const Point& p : poly.vertices) out.vertices.push_back(pose.apply(p));
  if (pose.reflected) std::reverse(out.vertices.begin(), out.vertices.end());
  return out;
}

SplitResult split_by_line(const Polygon& poly, const Line& line, double tol) {
  SplitResult result;
  const std::size_t n = poly.size();
  Line l = line;
  std::vector<double> d(n);
  for (;;) {
    bool grazing = false;
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = l.signed_distance(poly[i]);
      if (std::abs(d[i]) <= tol) grazing = true;
    }
    if (!grazing) break;
    if (++result.nudges > 64) throw GeometryError("split_by_line: could not resolve grazing line");
    l = l.shifted(tol);
  }
  result.line_used = l;

  const bool any_pos = std::any_of(d.begin(), d.end(), [](double v) { return v > 0.0; });
  const bool any_neg = std::any_of(d.begin(), d.end(), [](double v) { return v < 0.0; });
  if (!any_neg) {
    result.positive.push_back(poly);
    return result;
  }
  if (!any_pos) {
    result.negative.push_back(poly);
    return result;
  }
  result.crossed = true;

  struct Node {
    Point p;
    bool crossing;
    int sign;  // vertex side; 0 for crossings
  };
  std::vector<Node> nodes;
  nodes.reserve(n + 8);
  std::vector<std::size_t> crossings;
  const Point dir = l.direction();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    nodes.push_back({poly[i], false, d[i] > 0.0 ? 1 : -1});
    if ((d[i] > 0.0) != (d[j] > 0.0)) {
      const double t = d[i] / (d[i] - d[j]);
      crossings.push_back(nodes.size());
      nodes.push_back({poly[i] + (poly[j] - poly[i]) * t, true, 0});
    }
  }
  std::sort(crossings.begin(), crossings.end(), [&](std::size_t a, std::size_t b) {
    return dot(nodes[a].p, dir) < dot(nodes[b].p, dir);
  });
  std::vector<std::size_t> partner(nodes.size(), 0);
  for (std::size_t k = 0; k + 1 < crossings.size(); k += 2) {
    partner[crossings[k]] = crossings[k + 1];
    partner[crossings[k + 1]] = crossings[k];
  }

  const std::size_t m = nodes.size();
  std::vector<bool> visited(m, false);
  for (std::size_t start = 0; start < m; ++start) {
    if (nodes[start].crossing || visited[start]) continue;
    std::vector<Point> out;
    std::size_t k = start;
    bool jumped = false;
    std::size_t guard = 0;
    do {
      out.push_back(nodes[k].p);
      if (!nodes[k].crossing) visited[k] = true;
      if (nodes[k].crossing && !jumped) {
        k = partner[k];
        jumped = true;
      } else {
        jumped = false;
        k = (k + 1) % m;
      }
      if (++guard > 4 * m) throw GeometryError("split_by_line: boundary trace did not close");
    } while (k != start);
    if (auto piece = try_make_polygon(std::move(out), 0.0)) {
      (nodes[start].sign > 0 ? result.positive : result.negative).push_back(std::move(*piece));
    }
  }
  return result;
}

std::vector<Point> hull_points(std::vector<Point> pts, double tol) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  auto keep = [&](const Point& a, const Point& b, const Point& c) {
    return orient(a, b, c) > tol * std::max(1.0, dist(a, c));
  };
  for (const Point& p : pts) {
    while (k >= 2 && !keep(h[k - 2], h[k - 1], p)) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && !keep(h[k - 2], h[k - 1], pts[i])) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

Polygon convex_hull(std::vector<Point> pts, double tol) {
  auto h = hull_points(std::move(pts), tol);
  if (h.size() < 3) throw DegenerateHullError("convex hull of collinear or coincident points");
  return Polygon{std::move(h)};
}

double distance_to_segment(const Point& p, const Point& a, const Point& b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return dist(p, a + ab * t);
}

double distance_to_boundary(const Polygon& poly, const Point& p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    best = std::min(best, distance_to_segment(p, poly[i], poly.vertex(i + 1)));
  }
  return best;
}

bool inside_crossing(const Polygon& poly, const Point& p) {
  bool in = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point& a = poly[i];
    const Point& b = poly[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) in = !in;
    }
  }
  return in;
}

double signed_depth(const Polygon& poly, const Point& p) {
  const double d = distance_to_boundary(poly, p);
  return inside_crossing(poly, p) ? d : -d;
}

bool contains_point(const Polygon& poly, const Point& p, double tol) {
  return inside_crossing(poly, p) || distance_to_boundary(poly, p) <= tol;
}

bool contains_point(const PolyShape& shape, const Point& p, double tol) {
  return std::any_of(shape.parts.begin(), shape.parts.end(),
                     [&](const Polygon& part) { return contains_point(part, p, tol); });
}

double support(std::span<const Point> pts, const Point& u) {
  double best = -std::numeric_limits<double>::infinity();
  for (const Point& p : pts) best = std::max(best, dot(p, u));
  return best;
}

double support(const Polygon& poly, const Point& u) { return support(poly.vertices, u); }

std::vector<Point> all_vertices(const PolyShape& shape) {
  std::vector<Point> out;
  for (const Polygon& p : shape.parts) out.insert(out.end(), p.vertices.begin(), p.vertices.end());
  return out;
}

std::vector<Point> boundary_samples(const Polygon& poly, double spacing) {
  std::vector<Point> out;
  out.reserve(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point a = poly[i], b = poly.vertex(i + 1);
    const double len = dist(a, b);
    const auto k = static_cast<std::size_t>(std::max(1.0, std::ceil(len / spacing)));
    for (std::size_t j = 0; j < k; ++j) out.push_back(a + (b - a) * (static_cast<double>(j) / k));
  }
  return out;
}

PolygonIndex::PolygonIndex(Polygon poly) : poly_(std::move(poly)) {
  const std::size_t n = poly_.size();
  lo_ = hi_ = poly_[0];
  for (const Point& p : poly_.vertices) {
    lo_.x = std::min(lo_.x, p.x);
    lo_.y = std::min(lo_.y, p.y);
    hi_.x = std::max(hi_.x, p.x);
    hi_.y = std::max(hi_.y, p.y);
  }
  // Thin rows keep the crossing-number scan short.
  const double root = std::ceil(std::sqrt(static_cast<double>(n)));
  nx_ = static_cast<std::size_t>(std::clamp(root, 1.0, 128.0));
  ny_ = static_cast<std::size_t>(std::clamp(4.0 * root, 1.0, 512.0));
  cw_ = std::max((hi_.x - lo_.x) / static_cast<double>(nx_), 1e-12);
  ch_ = std::max((hi_.y - lo_.y) / static_cast<double>(ny_), 1e-12);
  cells_.assign(nx_ * ny_, {});
  rows_.assign(ny_, {});
  const double eps = 1e-9 * (1.0 + std::max(hi_.x - lo_.x, hi_.y - lo_.y));
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = poly_[i], b = poly_.vertex(i + 1);
    const std::size_t x0 = cell_x(std::min(a.x, b.x) - eps), x1 = cell_x(std::max(a.x, b.x) + eps);
    const std::size_t y0 = cell_y(std::min(a.y, b.y) - eps), y1 = cell_y(std::max(a.y, b.y) + eps);
    for (std::size_t y = y0; y <= y1; ++y) {
      rows_[y].push_back(i);
      for (std::size_t x = x0; x <= x1; ++x) cells_[y * nx_ + x].push_back(i);
    }
  }
}

std::size_t PolygonIndex::cell_x(double x) const {
  const double c = std::floor((x - lo_.x) / cw_);
  return static_cast<std::size_t>(std::clamp(c, 0.0, static_cast<double>(nx_ - 1)));
}

std::size_t PolygonIndex::cell_y(double y) const {
  const double c = std::floor((y - lo_.y) / ch_);
  return static_cast<std::size_t>(std::clamp(c, 0.0, static_cast<double>(ny_ - 1)));
}

template <class F>
void PolygonIndex::for_cells_on_segment(const Point& p, const Point& q, F&& visit) const {
  // Grid traversal in the style of Amanatides and Woo.
  auto ix = static_cast<long>(cell_x(p.x)), iy = static_cast<long>(cell_y(p.y));
  const auto ex = static_cast<long>(cell_x(q.x)), ey = static_cast<long>(cell_y(q.y));
  const double dx = q.x - p.x, dy = q.y - p.y;
  const long sx = dx > 0 ? 1 : (dx < 0 ? -1 : 0);
  const long sy = dy > 0 ? 1 : (dy < 0 ? -1 : 0);
  constexpr double inf = std::numeric_limits<double>::infinity();
  double tmx = sx != 0 ? (lo_.x + static_cast<double>(ix + (sx > 0)) * cw_ - p.x) / dx : inf;
  double tmy = sy != 0 ? (lo_.y + static_cast<double>(iy + (sy > 0)) * ch_ - p.y) / dy : inf;
  const double tdx = sx != 0 ? cw_ / std::abs(dx) : inf;
  const double tdy = sy != 0 ? ch_ / std::abs(dy) : inf;
  visit(static_cast<std::size_t>(ix), static_cast<std::size_t>(iy));
  std::size_t guard = nx_ + ny_ + 4;
  while ((ix != ex || iy != ey) && guard-- > 0) {
    if (tmx < tmy) {
      ix += sx;
      tmx += tdx;
    } else {
      iy += sy;
      tmy += tdy;
    }
    if (ix < 0 || iy < 0 || ix >= static_cast<long>(nx_) || iy >= static_cast<long>(ny_)) break;
    visit(static_cast<std::size_t>(ix), static_cast<std::size_t>(iy));
  }
}

bool PolygonIndex::contains(const Point& p, double tol) const {
  if (p.x < lo_.x - tol || p.x > hi_.x + tol || p.y < lo_.y - tol || p.y > hi_.y + tol) return false;
  bool in = false;
  for (std::size_t i : rows_[cell_y(p.y)]) {
    const Point& a = poly_[i];
    const Point& b = poly_.vertex(i + 1);
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) in = !in;
    }
  }
  if (in) return true;
  if (tol < std::min(cw_, ch_)) {
    const std::size_t cx = cell_x(p.x), cy = cell_y(p.y);
    for (std::size_t y = cy > 0 ? cy - 1 : 0; y <= std::min(cy + 1, ny_ - 1); ++y) {
      for (std::size_t x = cx > 0 ? cx - 1 : 0; x <= std::min(cx + 1, nx_ - 1); ++x) {
        for (std::size_t i : cells_[y * nx_ + x]) {
          if (distance_to_segment(p, poly_[i], poly_.vertex(i + 1)) <= tol) return true;
        }
      }
    }
    return false;
  }
  return foldcover::distance_to_boundary(poly_, p) <= tol;
}

double PolygonIndex::distance_to_boundary(const Point& p) const {
  if (p.x < lo_.x || p.x > hi_.x || p.y < lo_.y || p.y > hi_.y) return foldcover::distance_to_boundary(poly_, p);
  const auto cx = static_cast<long>(cell_x(p.x)), cy = static_cast<long>(cell_y(p.y));
  const auto nx = static_cast<long>(nx_), ny = static_cast<long>(ny_);
  double best = std::numeric_limits<double>::infinity();
  for (long k = 0;; ++k) {
    for (long y = std::max(cy - k, 0L); y <= std::min(cy + k, ny - 1); ++y) {
      const bool edge_row = y == cy - k || y == cy + k;
      for (long x = std::max(cx - k, 0L); x <= std::min(cx + k, nx - 1); ++x) {
        if (!edge_row && x != cx - k && x != cx + k) continue;
        for (std::size_t i : cells_[static_cast<std::size_t>(y * nx + x)])
          best = std::min(best, distance_to_segment(p, poly_[i], poly_.vertex(i + 1)));
      }
    }
    // Cells outside the searched block are at least this far away.
    double bound = std::numeric_limits<double>::infinity();
    if (cx - k > 0) bound = std::min(bound, p.x - (lo_.x + static_cast<double>(cx - k) * cw_));
    if (cx + k < nx - 1) bound = std::min(bound, lo_.x + static_cast<double>(cx + k + 1) * cw_ - p.x);
    if (cy - k > 0) bound = std::min(bound, p.y - (lo_.y + static_cast<double>(cy - k) * ch_));
    if (cy + k < ny - 1) bound = std::min(bound, lo_.y + static_cast<double>(cy + k + 1) * ch_ - p.y);
    if (best <= bound) return best;
  }
}

bool PolygonIndex::segment_inside(const Point& p, const Point& q) const {
  if (!contains(p) || !contains(q)) return false;
  const double len = dist(p, q);
  if (len == 0.0) return true;
  std::vector<double> ts{0.0, 1.0};
  bool blocked = false;
  const Point d = q - p;
  for_cells_on_segment(p, q, [&](std::size_t x, std::size_t y) {
    if (blocked) return;
    for (std::size_t i : cells_[y * nx_ + x]) {
      const Point& a = poly_[i];
      const Point& b = poly_.vertex(i + 1);
      if (segments_properly_intersect(p, q, a, b)) {
        blocked = true;
        return;
      }
      if (distance_to_segment(a, p, q) <= 1e-11 * (1.0 + len)) ts.push_back(dot(a - p, d) / (len * len));
    }
  });
  if (blocked) return false;
  std::sort(ts.begin(), ts.end());
  for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
    if (ts[k + 1] - ts[k] < 1e-12) continue;
    if (!contains(p + d * (0.5 * (ts[k] + ts[k + 1])))) return false;
  }
  return true;
}

}  // namespace foldcover
