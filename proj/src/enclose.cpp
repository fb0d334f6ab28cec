#include "foldcover/enclose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "foldcover/numerics.hpp"

namespace foldcover {

namespace {

const double kSqrt3 = std::sqrt(3.0);
const Point kTriangleNormals[3] = {{0.0, -1.0}, {kSqrt3 / 2, 0.5}, {-kSqrt3 / 2, 0.5}};

// Relative tolerance for reporting contacts and lemma patterns.
constexpr double kContactTol = 1e-7;

Point mirror(const Point& p) { return {-p.x, p.y}; }

std::vector<Point> target_hull(std::span<const Point> pts) {
  if (pts.empty()) throw std::invalid_argument("enclosing target has no points");
  return hull_points(std::vector<Point>(pts.begin(), pts.end()));
}

std::vector<Contact> collect_contacts(const Polygon& posed, std::span<const Point> pts, double tol) {
  std::vector<Contact> out;
  const std::size_t n = posed.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Point a = posed[j], b = posed.vertex(j + 1);
    if (a == b) continue;
    for (const Point& p : pts) {
      if (distance_to_segment(p, a, b) <= tol) out.push_back({p, j});
    }
  }
  return out;
}

// Supports of a ccw convex hull along normals sorted counterclockwise, by a
// rotating pointer.
void merged_supports(const std::vector<Point>& hull, std::span<const Point> normals, std::vector<double>& out) {
  out.resize(normals.size());
  const std::size_t m = hull.size();
  if (m < 3) {
    for (std::size_t j = 0; j < normals.size(); ++j) out[j] = support(hull, normals[j]);
    return;
  }
  std::size_t idx = 0;
  double best = dot(hull[0], normals[0]);
  for (std::size_t i = 1; i < m; ++i) {
    const double v = dot(hull[i], normals[0]);
    if (v > best) best = v, idx = i;
  }
  for (std::size_t j = 0; j < normals.size(); ++j) {
    const Point& u = normals[j];
    double cur = dot(hull[idx], u);
    for (std::size_t steps = 0; steps < m; ++steps) {
      const std::size_t nx = (idx + 1) % m;
      const double v = dot(hull[nx], u);
      if (v < cur) break;
      idx = nx;
      cur = v;
    }
    out[j] = cur;
  }
}

// S relative to its centroid, with edge normals and supports.
struct Prepared {
  std::vector<Point> normals;  // unit outward, ccw order
  std::vector<double> h;
  std::vector<Point> mirrored_normals;
  std::vector<double> mirrored_h;
  Point centroid{};
};

Prepared prepare(const Polygon& S) {
  Prepared p;
  p.centroid = centroid(S);
  const std::size_t n = S.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Point e = S.vertex(j + 1) - S[j];
    const double len = norm(e);
    if (len == 0.0) continue;
    const Point nrm{e.y / len, -e.x / len};
    p.normals.push_back(nrm);
    p.h.push_back(dot(nrm, S[j] - p.centroid));
  }
  // Mirroring reverses orientation; walking the edges backwards keeps ccw order.
  for (std::size_t j = p.normals.size(); j-- > 0;) {
    p.mirrored_normals.push_back(mirror(p.normals[j]));
    p.mirrored_h.push_back(p.h[j]);
  }
  return p;
}

class ScaleEvaluator {
 public:
  ScaleEvaluator(const Polygon& S, std::vector<Point> hull) : prep_(prepare(S)), hull_(std::move(hull)) {}

  FixedScale solve(double theta, bool reflected) {
    const auto& n0 = reflected ? prep_.mirrored_normals : prep_.normals;
    const auto& h = reflected ? prep_.mirrored_h : prep_.h;
    normals_.resize(n0.size());
    for (std::size_t j = 0; j < n0.size(); ++j) normals_[j] = rotate(n0[j], theta);
    merged_supports(hull_, normals_, supports_);
    rows_.clear();
    for (std::size_t j = 0; j < normals_.size(); ++j) {
      rows_.push_back({-normals_[j].x, -normals_[j].y, -h[j], -supports_[j]});
    }
    rows_.push_back({0.0, 0.0, -1.0, 0.0});
    const LpSolution sol = solve_lp3(rows_);
    if (sol.status != LpStatus::Optimal) throw GeometryError("enclosing LP did not reach an optimum");
    const Point g = rotate(reflected ? mirror(prep_.centroid) : prep_.centroid, theta);
    return {sol.c, Point{sol.tx, sol.ty} - g * sol.c};
  }

 private:
  Prepared prep_;
  std::vector<Point> hull_;
  std::vector<Point> normals_;
  std::vector<double> supports_;
  std::vector<LpConstraint> rows_;
};

bool near_rel(double a, double b, double scale) { return std::abs(a - b) <= 1e-9 * scale; }

// Interleaved edge lengths and turn angles, lengths normalized by the perimeter.
std::vector<double> shape_signature(const Polygon& S) {
  const std::size_t n = S.size();
  const double per = perimeter(S);
  std::vector<double> sig;
  for (std::size_t i = 0; i < n; ++i) {
    const Point e0 = S.vertex(i + 1) - S[i];
    const Point e1 = S.vertex(i + 2) - S.vertex(i + 1);
    sig.push_back(norm(e0) / per);
    sig.push_back(std::atan2(cross(e0, e1), dot(e0, e1)));
  }
  return sig;
}

bool cyclic_match(const std::vector<double>& a, const std::vector<double>& b, std::size_t shift) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(a[(i + shift) % n] - b[i]) > 1e-9) return false;
  return true;
}

}  // namespace

Polygon base_square() { return Polygon{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}; }

Polygon base_triangle() { return Polygon{{{-0.5, 0}, {0.5, 0}, {0, kSqrt3 / 2}}}; }

double triangle_side_at(std::span<const Point> pts, double theta) {
  double s = 0.0;
  for (const Point& n : kTriangleNormals) s += support(pts, rotate(n, theta));
  return 2.0 / kSqrt3 * s;
}

double square_side_at(std::span<const Point> pts, double theta) {
  const Point u = unit_vector(theta), v = perp(u);
  return std::max(support(pts, u) + support(pts, -u), support(pts, v) + support(pts, -v));
}

EnclosureResult min_equilateral_triangle(std::span<const Point> pts, OrientationSearch search) {
  const std::vector<Point> hull = target_hull(pts);
  const auto f = [&](double t) { return triangle_side_at(hull, t); };
  const Minimum m = minimize_1d(f, 0.0, 2.0 * kPi / 3.0, search.tol, {search.grid, search.basins});
  const double theta = m.x >= 2.0 * kPi / 3.0 ? 0.0 : m.x;
  double h[3];
  Point n[3];
  for (int i = 0; i < 3; ++i) {
    n[i] = rotate(kTriangleNormals[i], theta);
    h[i] = support(hull, n[i]);
  }
  const double s = 2.0 / kSqrt3 * (h[0] + h[1] + h[2]);
  const double rho = (h[0] + h[1] + h[2]) / 3.0;
  // Incenter: n_i . c = h_i - rho for i = 0, 1.
  const double det = cross(n[0], n[1]);
  const double r0 = h[0] - rho, r1 = h[1] - rho;
  const Point c{(r0 * n[1].y - r1 * n[0].y) / det, (n[0].x * r1 - n[1].x * r0) / det};
  EnclosureResult out;
  out.scale = s;
  out.pose.rotation = theta;
  out.pose.scale = s;
  out.pose.translation = c - rotate(Point{0.0, kSqrt3 / 6}, theta) * s;
  const Polygon posed = transform_polygon(base_triangle(), out.pose);
  out.contacts = collect_contacts(posed, pts, kContactTol * std::max(1.0, s));
  return out;
}

EnclosureResult min_square(std::span<const Point> pts, OrientationSearch search) {
  const std::vector<Point> hull = target_hull(pts);
  const auto f = [&](double t) { return square_side_at(hull, t); };
  const Minimum m = minimize_1d(f, 0.0, kPi / 2.0, search.tol, {search.grid, search.basins});
  const double theta = m.x >= kPi / 2.0 ? 0.0 : m.x;
  const Point u = unit_vector(theta), v = perp(u);
  const double a = -support(hull, -u), b = -support(hull, -v);
  const double s = std::max(support(hull, u) - a, support(hull, v) - b);
  EnclosureResult out;
  out.scale = s;
  out.pose.rotation = theta;
  out.pose.scale = s;
  out.pose.translation = u * a + v * b;
  const Polygon posed = transform_polygon(base_square(), out.pose);
  out.contacts = collect_contacts(posed, pts, kContactTol * std::max(1.0, s));
  return out;
}

Container::Container(Polygon shape) : shape_(std::move(shape)) {
  if (shape_.size() < 3 || !is_convex(shape_)) throw std::invalid_argument("container must be a convex polygon");
  centroid_ = foldcover::centroid(shape_);
  const std::size_t n = shape_.size();
  const std::vector<double> sig = shape_signature(shape_);

  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    if (cyclic_match(sig, sig, 2 * p)) {
      symmetry_ = static_cast<int>(n / p);
      break;
    }
  }
  std::vector<double> rev(sig.rbegin(), sig.rend());
  // rev starts with a turn angle; align it with the turns of sig.
  for (std::size_t s = 1; s < 2 * n && !mirror_symmetric_; s += 2) mirror_symmetric_ = cyclic_match(sig, rev, s);

  const bool equal_sides = symmetry_ == static_cast<int>(n);
  if (n == 4 && equal_sides && near_rel(std::abs(sig[1]), kPi / 2, 1.0)) kind_ = Kind::Square;
  if (n == 3 && equal_sides) kind_ = Kind::EquilateralTriangle;
}

FixedScale fixed_rotation_min_scale(const Polygon& S, std::span<const Point> pts, double theta, bool reflected) {
  ScaleEvaluator eval(S, target_hull(pts));
  return eval.solve(theta, reflected);
}

namespace {

EnclosureResult from_base(const EnclosureResult& base, const Container& S, const Point& base_anchor) {
  const Polygon& P = S.shape();
  const double L = dist(P[0], P[1]);
  const Point e = P[1] - P[0];
  const double phi0 = std::atan2(e.y, e.x);
  EnclosureResult out;
  out.scale = base.scale / L;
  double theta = std::fmod(base.pose.rotation - phi0, 2.0 * kPi);
  if (theta < 0) theta += 2.0 * kPi;
  out.pose.rotation = theta;
  out.pose.scale = out.scale;
  out.pose.translation = base.pose.translation - rotate(P[0], theta) * out.scale +
                         rotate(base_anchor, base.pose.rotation) * base.scale;
  return out;
}

}  // namespace

EnclosureResult min_scaled_copy(const Container& S, std::span<const Point> pts, ScaledCopyOptions options) {
  std::vector<Point> hull = target_hull(pts);
  EnclosureResult out;
  if (options.fast_paths && S.kind() == Container::Kind::Square) {
    out = from_base(min_square(hull, options.search), S, Point{0, 0});
  } else if (options.fast_paths && S.kind() == Container::Kind::EquilateralTriangle) {
    out = from_base(min_equilateral_triangle(hull, options.search), S, base_triangle()[0]);
  } else {
    ScaleEvaluator eval(S.shape(), hull);
    const double period = 2.0 * kPi / S.symmetry();
    bool best_reflected = false;
    Minimum best{0.0, std::numeric_limits<double>::infinity()};
    for (bool reflected : {false, true}) {
      if (reflected && S.mirror_symmetric()) break;
      const auto f = [&](double t) { return eval.solve(t, reflected).c; };
      const Minimum m = minimize_1d(f, 0.0, period, options.search.tol, {options.search.grid, options.search.basins});
      if (m.value < best.value) best = m, best_reflected = reflected;
    }
    const double theta = best.x >= period ? 0.0 : best.x;
    const FixedScale fs = eval.solve(theta, best_reflected);
    out.scale = fs.c;
    out.pose = Pose{theta, best_reflected, fs.translation, fs.c};
  }
  const Polygon posed = transform_polygon(S.shape(), out.pose);
  out.contacts = collect_contacts(posed, pts, kContactTol * std::max(1.0, out.scale));
  return out;
}

EnclosureResult min_scaled_copy(const Container& S, const FoldedState& F, ScaledCopyOptions options) {
  const std::vector<Point> pts = F.vertices();
  return min_scaled_copy(S, pts, options);
}

double containment_violation(const PolygonIndex& S, const PolyShape& F, const Pose& pose, double spacing) {
  const Polygon& shape = S.polygon();
  double worst = 0.0;
  for (const Polygon& part : F.parts) {
    for (const Point& p : boundary_samples(part, spacing)) {
      const Point q = pose.apply_inverse(p);
      if (S.contains(q, 0.0)) continue;
      worst = std::max(worst, S.distance_to_boundary(q) * pose.scale);
    }
  }
  const std::size_t n = shape.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = shape.vertex(i + n - 1);
    const Point& b = shape[i];
    const Point& c = shape.vertex(i + 1);
    if (orient(a, b, c) >= 0.0) continue;
    const Point w = pose.apply(b);
    for (const Polygon& part : F.parts) {
      if (inside_crossing(part, w)) worst = std::max(worst, signed_depth(part, w));
    }
  }
  return worst;
}

bool contains_region(const Polygon& S, const PolyShape& F, const Pose& pose, double tol) {
  if (is_convex(S)) {
    for (const Polygon& part : F.parts)
      for (const Point& v : part.vertices)
        if (!contains_point(S, pose.apply_inverse(v), tol / pose.scale)) return false;
    return true;
  }
  const PolygonIndex index(S);
  return containment_violation(index, F, pose, tol) <= tol;
}

}  // namespace foldcover
