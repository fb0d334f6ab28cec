#include "foldcover/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "foldcover/enclose.hpp"

namespace foldcover {

namespace {

void require_region(const Point& P, const char* who) {
  if (!in_square_fold_region(P)) throw std::domain_error(std::string(who) + ": P outside the parameter region");
}

Polygon square_from(const Point& corner, const Point& a, const Point& b, double side) {
  return make_polygon({corner, corner + a * side, corner + (a + b) * side, corner + b * side}, 0.0);
}

}  // namespace

SquareFoldGeometry square_fold_geometry(const Point& P) {
  require_region(P, "square_fold_geometry");
  const double px = P.x, py = P.y;
  const double slope = -px / (py - 1.0);
  const double intercept = (px * px + py * py - 1.0) / (2.0 * (py - 1.0));
  const double den = px * px + (py - 1.0) * (py - 1.0);
  const double k = px * px + py * py - 1.0;
  SquareFoldGeometry g;
  g.P = P;
  g.ell = Line::through({0.0, intercept}, {1.0, intercept + slope});
  g.T = {den / (2.0 * px), 1.0};
  g.B = {k / (2.0 * px), 0.0};
  g.Q = {px * k / den, k * (py - 1.0) / den};
  return g;
}

double SigmaTriple::selected_min() const { return sigma2_selected ? std::min({s1, s2, s3}) : std::min(s1, s3); }

double SigmaTriple::min() const { return std::min({s1, s2, s3}); }

SigmaTriple sigma_sides(const Point& P) {
  require_region(P, "sigma_sides");
  const double x = P.x, y = P.y;
  const double x2 = x * x, x3 = x2 * x, x4 = x3 * x, x5 = x4 * x;
  const double y2 = y * y, y3 = y2 * y, y4 = y3 * y;
  const double root = std::sqrt((x - 1) * (x - 1) + (y - 1) * (y - 1));

  SigmaTriple s;
  s.s1 = y;
  s.d_B_l2 = std::abs(x2 * y + y3 + x2 - 2 * x * y - y2 - y + 1) / (2 * x * root);
  s.d_corner_l2p = std::abs(y2 * x + x3 - y2 - 3 * x2 + 2 * y + x - 1) / (2 * x * root);
  s.N1 = x5 + 2 * x3 * y2 + x * y4 - x4 - 2 * x3 * y - 2 * x * y3 + y4 - 4 * x2 * y - 4 * y3 + 4 * x2 + 2 * x * y +
         6 * y2 - x - 4 * y + 1;
  s.d_Q_l2p = std::abs(s.N1) / (2 * x * (1 + (x - y) * (x - y)) * root);
  s.s2 = s.d_B_l2;
  s.m = (x2 + y2 - 1) / (x2 + (y - 1) * (y - 1));
  s.N2 = x4 + 2 * x2 * y2 + y4 - 4 * x3 - 2 * x2 * y - 4 * x * y2 - 2 * y3 + 4 * x * y + 2 * y - 1;
  s.D2 = x4 + 2 * x2 * y2 + y4 - 2 * x2 * y - 2 * y3 + 2 * y2 - 2 * y + 1;
  s.s3 = std::sqrt(2.0) * std::abs(s.N2) / (4 * x * std::sqrt(s.D2));
  s.sigma2_selected = y <= 0.5 * (1 + std::sqrt(4 * x - 4 * x2 + 1));
  return s;
}

SigmaSquares sigma_squares(const Point& P) {
  const SquareFoldGeometry g = square_fold_geometry(P);
  const SigmaTriple s = sigma_sides(P);
  SigmaSquares out;
  out.sigma1 = square_from({g.T.x, 0.0}, {1, 0}, {0, 1}, s.s1);

  // sigma_2: one side on l2 through P and (1,1), B on the opposite side, T on a third.
  const Point corner11{1, 1};
  Point u = (corner11 - P) / dist(corner11, P);
  if (dot(corner11 - g.T, u) < 0) u = -u;
  Point n = perp(u);
  if (dot(g.B - P, n) < 0) n = -n;
  out.sigma2 = square_from(P + u * dot(g.T - P, u), u, n, s.s2);

  // sigma_3: sides on l3 through (1,0) and l3' through (1,1), meeting at K.
  const Point a0 = Point{1, s.m} / std::hypot(1.0, s.m);
  const Point b0 = perp(a0);
  const Point K = Point{1, 0} + a0 * dot(corner11 - Point{1, 0}, a0);
  const Point a = dot(g.B - K, a0) >= 0 ? a0 : -a0;
  const Point b = dot(g.T - K, b0) >= 0 ? b0 : -b0;
  out.sigma3 = square_from(K, a, b, s.s3);
  return out;
}

FoldedState triangle_apex_fold(const Point& P) {
  const Point apex{0, std::sqrt(3.0)};
  if (dist(P, apex) < kTolerance) throw std::invalid_argument("triangle_apex_fold: P coincides with the apex");
  const Polygon T{{{-1, 0}, {1, 0}, apex}};
  const Line line = Line::through_with_direction((apex + P) * 0.5, perp(P - apex));
  const Side side = line.signed_distance(apex) > 0 ? Side::Positive : Side::Negative;
  return single_fold(T, line, FoldMask::all(side));
}

double TriangleTauReport::best() const {
  double b = std::numeric_limits<double>::infinity();
  for (const auto& t : {tau1, tau2, tau3})
    if (t) b = std::min(b, *t);
  return b;
}

TriangleTauReport triangle_tau_factors(const Point& P) {
  const double s3 = std::sqrt(3.0);
  constexpr double eps = 1e-12;
  TriangleTauReport r;
  r.P = P;
  const Point apex{0, s3};
  r.fold_line = Line::through_with_direction((apex + P) * 0.5, perp(P - apex));

  const double ax = std::abs(P.x);
  if (P.y >= -eps && P.y <= s3 * (ax + 1) + eps) r.tau1 = std::max(1.0, (s3 * (ax + 1) + P.y) / (2 * s3));
  if (P.y <= eps && P.y <= s3 * (1 - ax) + eps) r.tau2 = 1.0 - P.y / s3;
  if (P.y <= -s3 / 3 + eps) {
    const double m = P.x / (s3 - P.y);
    const Point mid = (apex + P) * 0.5;
    const double b = mid.y - m * mid.x;
    r.tau3 = (1 + b / s3) * std::cos(std::atan(m));
  }

  const std::vector<Point> pts = triangle_apex_fold(P).vertices();
  const Point u = P - Point{-1, 0};
  Point mean{};
  for (const Point& p : pts) mean += p / static_cast<double>(pts.size());
  double theta = std::atan2(u.y, u.x);
  if (cross(u, mean - Point{-1, 0}) < 0) theta += kPi;
  r.tau4 = triangle_side_at(pts, theta) / 2.0;
  return r;
}

}  // namespace foldcover
