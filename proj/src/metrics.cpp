#include "foldcover/metrics.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

#include "foldcover/numerics.hpp"

namespace foldcover {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool in_circle(const Circle& c, const Point& p) {
  return dist(c.center, p) <= c.radius + 1e-12 * (1.0 + c.radius);
}

Circle circle_from(const Point& a, const Point& b) { return {(a + b) * 0.5, 0.5 * dist(a, b)}; }

Circle circle_from(const Point& a, const Point& b, const Point& c) {
  const Point ab = b - a, ac = c - a;
  const double d = 2.0 * cross(ab, ac);
  if (std::abs(d) < 1e-18) {
    // Collinear: the two farthest points span the circle.
    Circle best = circle_from(a, b);
    for (const Circle& cand : {circle_from(a, c), circle_from(b, c)}) {
      if (cand.radius > best.radius) best = cand;
    }
    return best;
  }
  const double ab2 = dot(ab, ab), ac2 = dot(ac, ac);
  const Point o{(ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d};
  return {a + o, norm(o)};
}

struct Scored {
  Point p;
  double value = -kInf;
};

// Maximizes score over the box: uniform grid of cell centers, two x4
// refinements around the best few incumbents, then an 8-direction pattern search.
Scored coarse_to_fine(Point lo, Point hi, const std::function<double(const Point&)>& score,
                      std::size_t grid = 64) {
  const double cx = (hi.x - lo.x) / static_cast<double>(grid);
  const double cy = (hi.y - lo.y) / static_cast<double>(grid);
  std::vector<Scored> all;
  all.reserve(grid * grid);
  for (std::size_t j = 0; j < grid; ++j) {
    for (std::size_t i = 0; i < grid; ++i) {
      const Point p{lo.x + (static_cast<double>(i) + 0.5) * cx, lo.y + (static_cast<double>(j) + 0.5) * cy};
      all.push_back({p, score(p)});
    }
  }
  constexpr std::size_t kKeep = 4;
  std::partial_sort(all.begin(), all.begin() + static_cast<long>(std::min(kKeep, all.size())), all.end(),
                    [](const Scored& a, const Scored& b) { return a.value > b.value; });
  all.resize(std::min(kKeep, all.size()));

  Scored best = all.front();
  double sx = cx, sy = cy;
  for (int level = 0; level < 2; ++level) {
    sx /= 4.0;
    sy /= 4.0;
    std::vector<Scored> next;
    for (const Scored& c : all) {
      Scored local = c;
      for (int dj = -8; dj <= 8; ++dj) {
        for (int di = -8; di <= 8; ++di) {
          const Point p{c.p.x + di * sx, c.p.y + dj * sy};
          const double v = score(p);
          if (v > local.value) local = {p, v};
        }
      }
      next.push_back(local);
      if (local.value > best.value) best = local;
    }
    all = std::move(next);
  }

  double step = std::max(sx, sy);
  while (step > 1e-10) {
    bool moved = false;
    for (int k = 0; k < 8; ++k) {
      const Point p = best.p + unit_vector(k * kPi / 4.0) * step;
      const double v = score(p);
      if (v > best.value) {
        best = {p, v};
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }
  return best;
}

std::pair<Point, Point> bounds(const Polygon& poly) {
  Point lo = poly[0], hi = poly[0];
  for (const Point& p : poly.vertices) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  return {lo, hi};
}

}  // namespace

Circle min_enclosing_circle(std::span<const Point> input, std::uint64_t seed) {
  if (input.empty()) throw std::invalid_argument("min_enclosing_circle: no points");
  std::vector<Point> pts(input.begin(), input.end());
  std::mt19937_64 rng(seed);
  std::shuffle(pts.begin(), pts.end(), rng);
  Circle c{pts[0], 0.0};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (in_circle(c, pts[i])) continue;
    c = {pts[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (in_circle(c, pts[j])) continue;
      c = circle_from(pts[i], pts[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (!in_circle(c, pts[k])) c = circle_from(pts[i], pts[j], pts[k]);
      }
    }
  }
  return c;
}

Circle inradius(const Polygon& poly) {
  if (is_convex(poly)) {
    // Variables (x, y, -r): n . x + r <= h for every edge.
    std::vector<LpConstraint> lp;
    lp.reserve(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Point e = poly.vertex(i + 1) - poly[i];
      const double len = norm(e);
      if (len == 0.0) continue;
      const Point n{e.y / len, -e.x / len};
      lp.push_back({n.x, n.y, -1.0, dot(n, poly[i])});
    }
    const LpSolution s = solve_lp3(lp);
    if (s.status == LpStatus::Optimal) return {{s.tx, s.ty}, -s.c};
  }
  const PolygonIndex index(poly);
  const auto [lo, hi] = bounds(poly);
  const Scored best = coarse_to_fine(lo, hi, [&](const Point& p) {
    return index.contains(p, 0.0) ? distance_to_boundary(poly, p) : -kInf;
  });
  return {best.p, best.value};
}

Geodesics::Geodesics(const Polygon& poly) : index_(poly) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& prev = poly.vertex(i + n - 1);
    const Point& next = poly.vertex(i + 1);
    if (orient(prev, poly[i], next) < -kTolerance * dist(prev, poly[i]) * dist(poly[i], next)) {
      reflex_.push_back(i);
    }
  }
  const std::size_t r = reflex_.size();
  if (r == 0) return;
  std::vector<std::vector<double>> rr(r, std::vector<double>(r, kInf));
  for (std::size_t a = 0; a < r; ++a) {
    rr[a][a] = 0.0;
    for (std::size_t b = a + 1; b < r; ++b) {
      const Point& pa = poly[reflex_[a]];
      const Point& pb = poly[reflex_[b]];
      if (index_.segment_inside(pa, pb)) rr[a][b] = rr[b][a] = dist(pa, pb);
    }
  }
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) rr[a][b] = std::min(rr[a][b], rr[a][k] + rr[k][b]);

  std::vector<std::vector<double>> hop(r, std::vector<double>(n, kInf));
  for (std::size_t k = 0; k < r; ++k) {
    const Point& w = poly[reflex_[k]];
    for (std::size_t v = 0; v < n; ++v) {
      if (index_.segment_inside(w, poly[v])) hop[k][v] = dist(w, poly[v]);
    }
  }
  reflex_to_vertex_.assign(r, std::vector<double>(n, kInf));
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t k2 = 0; k2 < r; ++k2) {
      if (rr[k][k2] == kInf) continue;
      for (std::size_t v = 0; v < n; ++v) {
        reflex_to_vertex_[k][v] = std::min(reflex_to_vertex_[k][v], rr[k][k2] + hop[k2][v]);
      }
    }
}

bool Geodesics::visible(const Point& p, const Point& q) const {
  return convex() ? index_.contains(p) && index_.contains(q) : index_.segment_inside(p, q);
}

double Geodesics::distance(const Point& p, const Point& q) const {
  if (!index_.contains(p) || !index_.contains(q)) {
    throw std::domain_error("geodesic_distance: point outside the polygon");
  }
  if (convex() || index_.segment_inside(p, q)) return dist(p, q);
  const Polygon& poly = polygon();
  double best = kInf;
  std::vector<std::pair<std::size_t, double>> from_p;
  for (std::size_t k = 0; k < reflex_.size(); ++k) {
    const Point& w = poly[reflex_[k]];
    if (index_.segment_inside(p, w)) from_p.emplace_back(k, dist(p, w));
  }
  for (std::size_t k = 0; k < reflex_.size(); ++k) {
    const Point& w = poly[reflex_[k]];
    if (!index_.segment_inside(w, q)) continue;
    // reflex_to_vertex_ holds reflex-to-reflex distances at the reflex indices.
    for (const auto& [k0, d0] : from_p) {
      best = std::min(best, d0 + reflex_to_vertex_[k0][reflex_[k]] + dist(w, q));
    }
  }
  return best;
}

std::vector<double> Geodesics::distances_to_vertices(const Point& p) const {
  const Polygon& poly = polygon();
  const std::size_t n = poly.size();
  std::vector<double> out(n, kInf);
  if (convex()) {
    for (std::size_t v = 0; v < n; ++v) out[v] = dist(p, poly[v]);
    return out;
  }
  std::vector<std::pair<std::size_t, double>> from_p;
  for (std::size_t k = 0; k < reflex_.size(); ++k) {
    const Point& w = poly[reflex_[k]];
    if (index_.segment_inside(p, w)) from_p.emplace_back(k, dist(p, w));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (index_.segment_inside(p, poly[v])) {
      out[v] = dist(p, poly[v]);
      continue;
    }
    for (const auto& [k, d] : from_p) out[v] = std::min(out[v], d + reflex_to_vertex_[k][v]);
  }
  return out;
}

std::vector<double> Geodesics::vertex_distances(std::size_t i) const {
  return distances_to_vertices(polygon()[i]);
}

double geodesic_distance(const Polygon& poly, const Point& p, const Point& q) {
  return Geodesics(poly).distance(p, q);
}

GeodesicPair geodesic_diameter(const Polygon& poly) {
  GeodesicPair best;
  const std::size_t n = poly.size();
  if (is_convex(poly)) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double d = dist(poly[i], poly[j]);
        if (d > best.length) best = {d, poly[i], poly[j]};
      }
    return best;
  }
  const Geodesics geo(poly);
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = geo.vertex_distances(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d[j] > best.length && d[j] < kInf) best = {d[j], poly[i], poly[j]};
    }
  }
  return best;
}

Circle geodesic_radius(const Polygon& poly) {
  if (is_convex(poly)) return min_enclosing_circle(poly.vertices);
  const Geodesics geo(poly);
  const PolygonIndex index(poly);
  // Farthest points sit at convex vertices.
  std::vector<std::size_t> convex_vertices;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (orient(poly.vertex(i + poly.size() - 1), poly[i], poly.vertex(i + 1)) >= 0.0) convex_vertices.push_back(i);
  }
  const auto [lo, hi] = bounds(poly);
  const Scored best = coarse_to_fine(lo, hi, [&](const Point& p) {
    if (!index.contains(p, 0.0)) return -kInf;
    const auto d = geo.distances_to_vertices(p);
    double m = 0.0;
    for (std::size_t v : convex_vertices) m = std::max(m, d[v]);
    return -m;
  });
  return {best.p, -best.value};
}

double MetricsReport::jung_lower_margin() const { return D() - std::sqrt(3.0) * R(); }
double MetricsReport::jung_upper_margin() const { return 2.0 * R() - D(); }

MetricsReport compute_metrics(const Polygon& poly) {
  MetricsReport m;
  m.convex = is_convex(poly);
  m.incircle = inradius(poly);
  m.circumcircle = min_enclosing_circle(poly.vertices);
  m.diameter = geodesic_diameter(poly);
  m.geodesic = m.convex ? m.circumcircle : geodesic_radius(poly);
  return m;
}

}  // namespace foldcover
