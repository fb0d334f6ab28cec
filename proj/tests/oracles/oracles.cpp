#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <random>

namespace foldcover::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Winding number, boundary counted as inside when within eps.
bool inside_or_on(const Polygon& poly, const Point& p, double eps = 1e-12) {
  int wn = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = poly.vertices[i];
    const Point b = poly.vertices[(i + 1) % n];
    const Point ab{b.x - a.x, b.y - a.y};
    const double len2 = ab.x * ab.x + ab.y * ab.y;
    double t = ((p.x - a.x) * ab.x + (p.y - a.y) * ab.y) / len2;
    t = std::clamp(t, 0.0, 1.0);
    const double dx = a.x + t * ab.x - p.x, dy = a.y + t * ab.y - p.y;
    if (dx * dx + dy * dy <= eps * eps) return true;
    const double side = ab.x * (p.y - a.y) - ab.y * (p.x - a.x);
    if (a.y <= p.y) {
      if (b.y > p.y && side > 0) ++wn;
    } else {
      if (b.y <= p.y && side < 0) --wn;
    }
  }
  return wn != 0;
}

double seg_dist(const Point& p, const Point& a, const Point& b) {
  const double abx = b.x - a.x, aby = b.y - a.y;
  const double len2 = abx * abx + aby * aby;
  double t = len2 > 0 ? ((p.x - a.x) * abx + (p.y - a.y) * aby) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(a.x + t * abx - p.x, a.y + t * aby - p.y);
}

double boundary_dist(const Polygon& poly, const Point& p) {
  double d = kInf;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    d = std::min(d, seg_dist(p, poly.vertices[i], poly.vertices[(i + 1) % poly.size()]));
  }
  return d;
}

double orient3(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Closed segment stays in the closed polygon: no proper crossing with any
// edge, and sampled interior points are inside.
bool segment_inside(const Polygon& poly, const Point& p, const Point& q) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = poly.vertices[i];
    const Point b = poly.vertices[(i + 1) % n];
    const double o1 = orient3(p, q, a), o2 = orient3(p, q, b);
    const double o3 = orient3(a, b, p), o4 = orient3(a, b, q);
    const double e = 1e-12;
    if (((o1 > e && o2 < -e) || (o1 < -e && o2 > e)) && ((o3 > e && o4 < -e) || (o3 < -e && o4 > e))) {
      return false;
    }
  }
  // Pieces between consecutive boundary contacts must be inside.
  std::vector<double> ts{0.0, 1.0};
  for (std::size_t i = 0; i < n; ++i) {
    const Point v = poly.vertices[i];
    const double dx = q.x - p.x, dy = q.y - p.y;
    const double len2 = dx * dx + dy * dy;
    if (len2 == 0) break;
    const double t = ((v.x - p.x) * dx + (v.y - p.y) * dy) / len2;
    if (t > 0 && t < 1 && seg_dist(v, p, q) < 1e-12) ts.push_back(t);
  }
  std::sort(ts.begin(), ts.end());
  for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
    const double t = 0.5 * (ts[k] + ts[k + 1]);
    const Point m{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
    if (!inside_or_on(poly, m, 1e-12)) return false;
  }
  return true;
}

// All-pairs geodesic distances between polygon vertices (Floyd-Warshall on
// the full vertex visibility graph).
std::vector<std::vector<double>> vertex_apsp(const Polygon& poly) {
  const std::size_t n = poly.size();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (segment_inside(poly, poly.vertices[i], poly.vertices[j])) {
        d[i][j] = d[j][i] = std::hypot(poly.vertices[i].x - poly.vertices[j].x,
                                        poly.vertices[i].y - poly.vertices[j].y);
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

std::vector<double> point_to_vertices(const Polygon& poly, const std::vector<std::vector<double>>& apsp,
                                      const Point& p) {
  const std::size_t n = poly.size();
  std::vector<double> direct(n, kInf);
  for (std::size_t i = 0; i < n; ++i) {
    if (segment_inside(poly, p, poly.vertices[i])) {
      direct[i] = std::hypot(p.x - poly.vertices[i].x, p.y - poly.vertices[i].y);
    }
  }
  std::vector<double> out(n, kInf);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) out[j] = std::min(out[j], direct[i] + apsp[i][j]);
  return out;
}

double points_geodesic(const Polygon& poly, const std::vector<std::vector<double>>& apsp, const Point& p,
                       const Point& q) {
  if (segment_inside(poly, p, q)) return std::hypot(p.x - q.x, p.y - q.y);
  const auto dp = point_to_vertices(poly, apsp, p);
  double best = kInf;
  for (std::size_t j = 0; j < poly.size(); ++j) {
    if (segment_inside(poly, poly.vertices[j], q)) {
      best = std::min(best, dp[j] + std::hypot(q.x - poly.vertices[j].x, q.y - poly.vertices[j].y));
    }
  }
  return best;
}

std::vector<Point> gift_wrap(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
              return a.x == b.x && a.y == b.y;
            }),
            pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> hull;
  std::size_t cur = 0;
  do {
    hull.push_back(pts[cur]);
    std::size_t next = (cur + 1) % pts.size();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double o = orient3(pts[cur], pts[next], pts[i]);
      const double dn = std::hypot(pts[next].x - pts[cur].x, pts[next].y - pts[cur].y);
      const double di = std::hypot(pts[i].x - pts[cur].x, pts[i].y - pts[cur].y);
      if (o < 0 || (o == 0 && di > dn)) next = i;
    }
    cur = next;
  } while (cur != 0 && hull.size() <= pts.size());
  return hull;
}

}  // namespace

std::pair<int, int> flood_fill_components(const Polygon& poly, const Line& line, double cell) {
  double x0 = kInf, y0 = kInf, x1 = -kInf, y1 = -kInf;
  for (const Point& p : poly.vertices) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  const auto nx = static_cast<std::size_t>(std::ceil((x1 - x0) / cell));
  const auto ny = static_cast<std::size_t>(std::ceil((y1 - y0) / cell));
  const double ca = std::cos(line.angle()), sa = std::sin(line.angle());
  // 0 outside, 1 positive side, 2 negative side.
  std::vector<std::uint8_t> label(nx * ny, 0);
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      const Point c{x0 + (i + 0.5) * cell, y0 + (j + 0.5) * cell};
      if (!inside_or_on(poly, c, 0.0)) continue;
      const double s = c.x * ca + c.y * sa - line.offset();
      label[j * nx + i] = s > 0 ? 1 : 2;
    }
  }
  int counts[3] = {0, 0, 0};
  std::vector<bool> seen(nx * ny, false);
  std::queue<std::size_t> queue;
  for (std::size_t k = 0; k < nx * ny; ++k) {
    if (label[k] == 0 || seen[k]) continue;
    std::size_t size = 0;
    seen[k] = true;
    queue.push(k);
    while (!queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop();
      ++size;
      const std::size_t i = cur % nx, j = cur / nx;
      const std::size_t nb[4] = {i > 0 ? cur - 1 : cur, i + 1 < nx ? cur + 1 : cur, j > 0 ? cur - nx : cur,
                                 j + 1 < ny ? cur + nx : cur};
      for (std::size_t m : nb) {
        if (!seen[m] && label[m] == label[k]) {
          seen[m] = true;
          queue.push(m);
        }
      }
    }
    if (size >= 4) ++counts[label[k]];
  }
  return {counts[1], counts[2]};
}

Circle brute_force_enclosing_circle(std::span<const Point> input) {
  const std::vector<Point> pts = gift_wrap({input.begin(), input.end()});
  if (pts.size() == 1) return {pts[0], 0.0};
  auto encloses = [&](const Point& c, double r) {
    for (const Point& p : pts) {
      if (std::hypot(p.x - c.x, p.y - c.y) > r * (1 + 1e-12) + 1e-12) return false;
    }
    return true;
  };
  Circle best{{0, 0}, kInf};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Point c{(pts[i].x + pts[j].x) / 2, (pts[i].y + pts[j].y) / 2};
      const double r = std::hypot(pts[i].x - c.x, pts[i].y - c.y);
      if (r < best.radius && encloses(c, r)) best = {c, r};
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        const Point a = pts[i], b = pts[j], e = pts[k];
        const double d = 2 * (a.x * (b.y - e.y) + b.x * (e.y - a.y) + e.x * (a.y - b.y));
        if (std::abs(d) < 1e-15) continue;
        const double a2 = a.x * a.x + a.y * a.y, b2 = b.x * b.x + b.y * b.y, e2 = e.x * e.x + e.y * e.y;
        const Point cc{(a2 * (b.y - e.y) + b2 * (e.y - a.y) + e2 * (a.y - b.y)) / d,
                       (a2 * (e.x - b.x) + b2 * (a.x - e.x) + e2 * (b.x - a.x)) / d};
        const double rr = std::hypot(a.x - cc.x, a.y - cc.y);
        if (rr < best.radius && encloses(cc, rr)) best = {cc, rr};
      }
    }
  }
  return best;
}

Circle grid_inradius(const Polygon& poly, double cell) {
  double x0 = kInf, y0 = kInf, x1 = -kInf, y1 = -kInf;
  for (const Point& p : poly.vertices) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  Circle best{{x0, y0}, 0.0};
  for (double y = y0; y <= y1; y += cell) {
    for (double x = x0; x <= x1; x += cell) {
      const Point c{x, y};
      if (!inside_or_on(poly, c, 0.0)) continue;
      const double d = boundary_dist(poly, c);
      if (d > best.radius) best = {c, d};
    }
  }
  return best;
}

double grid_geodesic_distance(const Polygon& poly, const Point& p, const Point& q, double cell) {
  double x0 = kInf, y0 = kInf, x1 = -kInf, y1 = -kInf;
  for (const Point& v : poly.vertices) {
    x0 = std::min(x0, v.x);
    y0 = std::min(y0, v.y);
    x1 = std::max(x1, v.x);
    y1 = std::max(y1, v.y);
  }
  const auto nx = static_cast<long>(std::floor((x1 - x0) / cell)) + 1;
  const auto ny = static_cast<long>(std::floor((y1 - y0) / cell)) + 1;
  std::vector<Point> nodes{p, q};
  std::vector<long> index(static_cast<std::size_t>(nx * ny), -1);
  for (long j = 0; j < ny; ++j) {
    for (long i = 0; i < nx; ++i) {
      const Point c{x0 + i * cell, y0 + j * cell};
      if (inside_or_on(poly, c, 1e-12)) {
        index[static_cast<std::size_t>(j * nx + i)] = static_cast<long>(nodes.size());
        nodes.push_back(c);
      }
    }
  }
  constexpr long kReach = 3;
  auto cell_of = [&](const Point& a) {
    return std::pair<long, long>{std::lround((a.x - x0) / cell), std::lround((a.y - y0) / cell)};
  };
  std::vector<double> dist(nodes.size(), kInf);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[0] = 0.0;
  heap.push({0.0, 0});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    if (u == 1) return d;
    const Point a = nodes[u];
    auto relax = [&](std::size_t v) {
      if (v == u) return;
      const double w = std::hypot(a.x - nodes[v].x, a.y - nodes[v].y);
      if (d + w < dist[v] && segment_inside(poly, a, nodes[v])) {
        dist[v] = d + w;
        heap.push({dist[v], v});
      }
    };
    const auto [ci, cj] = cell_of(a);
    for (long dj = -kReach; dj <= kReach; ++dj) {
      for (long di = -kReach; di <= kReach; ++di) {
        const long i = ci + di, j = cj + dj;
        if (i < 0 || j < 0 || i >= nx || j >= ny) continue;
        const long v = index[static_cast<std::size_t>(j * nx + i)];
        if (v >= 0) relax(static_cast<std::size_t>(v));
      }
    }
    // The endpoints connect to their own neighbourhoods.
    for (std::size_t e = 0; e < 2; ++e) {
      const auto [ei, ej] = cell_of(nodes[e]);
      if (std::abs(ei - ci) <= kReach && std::abs(ej - cj) <= kReach) relax(e);
    }
  }
  return dist[1];
}

double sampled_geodesic_diameter(const Polygon& poly, double spacing) {
  const auto apsp = vertex_apsp(poly);
  std::vector<Point> samples;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point a = poly.vertices[i], b = poly.vertices[(i + 1) % poly.size()];
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    const int k = std::max(1, static_cast<int>(std::ceil(len / spacing)));
    for (int j = 0; j < k; ++j) samples.push_back({a.x + (b.x - a.x) * j / k, a.y + (b.y - a.y) * j / k});
  }
  std::vector<std::vector<double>> to_vertex;
  to_vertex.reserve(samples.size());
  for (const Point& s : samples) to_vertex.push_back(point_to_vertices(poly, apsp, s));
  double best = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      double d;
      if (segment_inside(poly, samples[i], samples[j])) {
        d = std::hypot(samples[i].x - samples[j].x, samples[i].y - samples[j].y);
      } else {
        d = kInf;
        for (std::size_t v = 0; v < poly.size(); ++v) {
          if (!segment_inside(poly, poly.vertices[v], samples[j])) continue;
          d = std::min(d, to_vertex[i][v] + std::hypot(samples[j].x - poly.vertices[v].x,
                                                       samples[j].y - poly.vertices[v].y));
        }
      }
      best = std::max(best, d);
    }
  }
  return best;
}

double grid_geodesic_radius(const Polygon& poly, double cell) {
  const auto apsp = vertex_apsp(poly);
  double x0 = kInf, y0 = kInf, x1 = -kInf, y1 = -kInf;
  for (const Point& v : poly.vertices) {
    x0 = std::min(x0, v.x);
    y0 = std::min(y0, v.y);
    x1 = std::max(x1, v.x);
    y1 = std::max(y1, v.y);
  }
  double best = kInf;
  for (double y = y0; y <= y1; y += cell) {
    for (double x = x0; x <= x1; x += cell) {
      const Point c{x, y};
      if (!inside_or_on(poly, c, 0.0)) continue;
      const auto d = point_to_vertices(poly, apsp, c);
      best = std::min(best, *std::max_element(d.begin(), d.end()));
    }
  }
  return best;
}

namespace {

// Grid scan over [0, period), then a second scan of the same density
// around the best coarse sample.
template <class F>
double two_stage_scan(double period, std::size_t samples, F&& width) {
  const double step = period / static_cast<double>(samples);
  double best = kInf, at = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double th = step * static_cast<double>(k);
    const double w = width(th);
    if (w < best) best = w, at = th;
  }
  const std::size_t fine = std::min<std::size_t>(samples, 20000);
  for (std::size_t k = 0; k <= fine; ++k) {
    const double th = at - 2 * step + 4 * step * static_cast<double>(k) / static_cast<double>(fine);
    best = std::min(best, width(th));
  }
  return best;
}

}  // namespace

double dense_min_square(std::span<const Point> pts, std::size_t samples) {
  return two_stage_scan(kPi / 2, samples, [&](double th) {
    const double c = std::cos(th), s = std::sin(th);
    double a0 = kInf, a1 = -kInf, b0 = kInf, b1 = -kInf;
    for (const Point& p : pts) {
      const double u = c * p.x + s * p.y, v = -s * p.x + c * p.y;
      a0 = std::min(a0, u);
      a1 = std::max(a1, u);
      b0 = std::min(b0, v);
      b1 = std::max(b1, v);
    }
    return std::max(a1 - a0, b1 - b0);
  });
}

double dense_min_triangle(std::span<const Point> pts, std::size_t samples) {
  return two_stage_scan(2 * kPi / 3, samples, [&](double th) {
    // Three supporting lines n_i . x = h_i; the triangle corners are their
    // pairwise intersections and the side is a corner-to-corner distance.
    Point n[3];
    double h[3];
    for (int i = 0; i < 3; ++i) {
      const double a = th + 2 * kPi * i / 3;
      n[i] = {std::cos(a), std::sin(a)};
      h[i] = -kInf;
      for (const Point& p : pts) h[i] = std::max(h[i], n[i].x * p.x + n[i].y * p.y);
    }
    auto meet = [&](int i, int j) {
      const double det = n[i].x * n[j].y - n[i].y * n[j].x;
      return Point{(h[i] * n[j].y - h[j] * n[i].y) / det, (n[i].x * h[j] - n[j].x * h[i]) / det};
    };
    const Point c01 = meet(0, 1), c02 = meet(0, 2);
    return std::hypot(c01.x - c02.x, c01.y - c02.y);
  });
}

Cover vertex_enumeration_cover(const Polygon& container, std::span<const Point> pts) {
  struct Con {
    double a, b, d, r;
  };
  std::vector<Con> cons;
  const std::size_t k = container.size();
  for (std::size_t j = 0; j < k; ++j) {
    const Point e0 = container.vertices[j], e1 = container.vertices[(j + 1) % k];
    const double len = std::hypot(e1.x - e0.x, e1.y - e0.y);
    const Point nrm{(e1.y - e0.y) / len, -(e1.x - e0.x) / len};
    const double hj = nrm.x * e0.x + nrm.y * e0.y;
    for (const Point& p : pts) cons.push_back({-nrm.x, -nrm.y, -hj, -(nrm.x * p.x + nrm.y * p.y)});
  }
  cons.push_back({0, 0, -1, 0});
  Cover best{kInf, {}};
  for (std::size_t i = 0; i < cons.size(); ++i)
    for (std::size_t j = i + 1; j < cons.size(); ++j)
      for (std::size_t l = j + 1; l < cons.size(); ++l) {
        const Con& A = cons[i];
        const Con& B = cons[j];
        const Con& C = cons[l];
        const double det = A.a * (B.b * C.d - B.d * C.b) - A.b * (B.a * C.d - B.d * C.a) +
                           A.d * (B.a * C.b - B.b * C.a);
        if (std::abs(det) < 1e-12) continue;
        const double x = (A.r * (B.b * C.d - B.d * C.b) - A.b * (B.r * C.d - B.d * C.r) +
                          A.d * (B.r * C.b - B.b * C.r)) / det;
        const double y = (A.a * (B.r * C.d - B.d * C.r) - A.r * (B.a * C.d - B.d * C.a) +
                          A.d * (B.a * C.r - B.r * C.a)) / det;
        const double c = (A.a * (B.b * C.r - B.r * C.b) - A.b * (B.a * C.r - B.r * C.a) +
                          A.r * (B.a * C.b - B.b * C.a)) / det;
        bool ok = true;
        for (const Con& q : cons) {
          if (q.a * x + q.b * y + q.d * c > q.r + 1e-9) {
            ok = false;
            break;
          }
        }
        if (ok && c < best.c) best = {c, {x, y}};
      }
  return best;
}

double translation_grid_cover(const Polygon& container, std::span<const Point> pts, double lo, double hi,
                              std::size_t steps) {
  const std::size_t k = container.size();
  double best = kInf;
  for (std::size_t iy = 0; iy <= steps; ++iy) {
    for (std::size_t ix = 0; ix <= steps; ++ix) {
      const Point t{lo + (hi - lo) * ix / steps, lo + (hi - lo) * iy / steps};
      double need = 0.0;
      for (std::size_t j = 0; j < k; ++j) {
        const Point e0 = container.vertices[j], e1 = container.vertices[(j + 1) % k];
        const double len = std::hypot(e1.x - e0.x, e1.y - e0.y);
        const Point nrm{(e1.y - e0.y) / len, -(e1.x - e0.x) / len};
        const double hj = nrm.x * e0.x + nrm.y * e0.y;
        for (const Point& p : pts) need = std::max(need, (nrm.x * (p.x - t.x) + nrm.y * (p.y - t.y)) / hj);
      }
      best = std::min(best, need);
    }
  }
  return best;
}

std::pair<double, double> union_area_monte_carlo(const std::vector<Polygon>& parts, std::size_t samples,
                                                 std::uint64_t seed) {
  double x0 = kInf, y0 = kInf, x1 = -kInf, y1 = -kInf;
  for (const Polygon& poly : parts)
    for (const Point& p : poly.vertices) {
      x0 = std::min(x0, p.x);
      y0 = std::min(y0, p.y);
      x1 = std::max(x1, p.x);
      y1 = std::max(y1, p.y);
    }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(x0, x1), uy(y0, y1);
  std::size_t hits = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const Point p{ux(rng), uy(rng)};
    for (const Polygon& poly : parts) {
      if (inside_or_on(poly, p, 0.0)) {
        ++hits;
        break;
      }
    }
  }
  const double box = (x1 - x0) * (y1 - y0);
  const double frac = static_cast<double>(hits) / static_cast<double>(samples);
  return {box * frac, box * std::sqrt(frac * (1 - frac) / static_cast<double>(samples))};
}

std::vector<Point> fold_convex_points(const Polygon& convex, const Line& line, bool fold_positive) {
  const Point n{std::cos(line.angle()), std::sin(line.angle())};
  const double off = line.offset();
  auto sd = [&](const Point& p) { return n.x * p.x + n.y * p.y - off; };
  auto mirror = [&](const Point& p) {
    const double d = sd(p);
    return Point{p.x - 2 * d * n.x, p.y - 2 * d * n.y};
  };
  std::vector<Point> out;
  const std::size_t k = convex.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Point a = convex.vertices[i], b = convex.vertices[(i + 1) % k];
    const double da = sd(a), db = sd(b);
    const bool folded = fold_positive ? da > 0 : da < 0;
    out.push_back(folded ? mirror(a) : a);
    if ((da > 0 && db < 0) || (da < 0 && db > 0)) {
      const double t = da / (da - db);
      out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
    }
  }
  return out;
}

double brute_one_fold_factor(const Polygon& convex, std::size_t angles, std::size_t offsets,
                             double (*side)(std::span<const Point>, std::size_t), std::size_t samples) {
  const double base = side(convex.vertices, samples);
  double best = 0.0;
  for (std::size_t i = 0; i < angles; ++i) {
    const double a = kPi * static_cast<double>(i) / static_cast<double>(angles);
    const Point n{std::cos(a), std::sin(a)};
    double lo = kInf, hi = -kInf;
    for (const Point& v : convex.vertices) {
      lo = std::min(lo, n.x * v.x + n.y * v.y);
      hi = std::max(hi, n.x * v.x + n.y * v.y);
    }
    for (std::size_t j = 0; j < offsets; ++j) {
      const double off = lo + (hi - lo) * (static_cast<double>(j) + 0.5) / static_cast<double>(offsets);
      const auto pts = fold_convex_points(convex, Line(a, off), true);
      best = std::max(best, side(pts, samples) / base);
    }
  }
  return best;
}

bool covers_sampled(const Polygon& S, const std::vector<Polygon>& parts, double theta, bool reflected,
                    const Point& t, double c, double spacing, double tol) {
  const double cs = std::cos(theta), sn = std::sin(theta);
  auto to_shape = [&](const Point& p) {
    const double x = p.x - t.x, y = p.y - t.y;
    Point q{(cs * x + sn * y) / c, (-sn * x + cs * y) / c};
    if (reflected) q.x = -q.x;
    return q;
  };
  for (const Polygon& part : parts) {
    const std::size_t k = part.size();
    for (std::size_t i = 0; i < k; ++i) {
      const Point a = part.vertices[i], b = part.vertices[(i + 1) % k];
      const double len = std::hypot(b.x - a.x, b.y - a.y);
      const auto steps = static_cast<std::size_t>(std::ceil(len / spacing)) + 1;
      for (std::size_t j = 0; j < steps; ++j) {
        const double u = static_cast<double>(j) / static_cast<double>(steps);
        const Point q = to_shape({a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)});
        if (!inside_or_on(S, q) && boundary_dist(S, q) > tol / c) return false;
      }
    }
  }
  return true;
}

bool in_limacon_loop(const Point& p, const Point& A, double chord, std::size_t arc_samples) {
  const double mid = std::atan2(A.y, A.x);
  const double half = std::acos(chord / std::hypot(A.x, A.y));
  for (std::size_t i = 0; i <= arc_samples; ++i) {
    const double a = mid - half + 2 * half * static_cast<double>(i) / static_cast<double>(arc_samples);
    const Point c{chord * std::cos(a), chord * std::sin(a)};
    if (std::hypot(p.x - c.x, p.y - c.y) > std::hypot(A.x - c.x, A.y - c.y) + 1e-15) return false;
  }
  return true;
}

double s_phi_area_grid(double phi, double cell) {
  const double h = std::cos(phi);
  const Point A{-std::sin(phi), h}, B{std::sin(phi), h};
  const auto n = static_cast<std::size_t>(std::ceil(2.0 / cell));
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = -1.0 + (static_cast<double>(i) + 0.5) * cell;
    for (std::size_t j = 0; j < n; ++j) {
      const double y = -1.0 + (static_cast<double>(j) + 0.5) * cell;
      const Point p{x, y};
      bool in = x * x + y * y <= 1.0 && y <= h;
      if (!in && y > h - 0.5) in = in_limacon_loop(p, A, h, 256) || in_limacon_loop(p, B, h, 256);
      if (in) total += cell * cell;
    }
  }
  return total;
}

}  // namespace foldcover::oracle
