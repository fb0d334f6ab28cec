#include <doctest.h>

#include <random>

#include "foldcover/fold.hpp"
#include "oracles/oracles.hpp"

using namespace foldcover;

namespace {

Polygon unit_square() { return make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
Polygon l_shape() { return make_polygon({{0, 0}, {3, 0}, {3, 1}, {2, 1}, {2, 3}, {0, 3}}); }

bool near(const Point& a, const Point& b, double tol) { return dist(a, b) <= tol; }

bool has_vertex(const Polygon& p, const Point& q, double tol) {
  for (const Point& v : p.vertices)
    if (near(v, q, tol)) return true;
  return false;
}

}  // namespace

TEST_CASE("single_fold examples") {
  const Polygon sq = unit_square();
  // Fold the left half over x = 0.5: the image is the right half.
  const auto half = single_fold(sq, Line(0.0, 0.5), FoldMask::all(Side::Negative));
  REQUIRE(half.parts.parts.size() == 2);
  for (const auto& part : half.parts.parts) {
    for (const Point& v : part.vertices) CHECK(v.x >= 0.5 - 1e-12);
    CHECK(area(part) == doctest::Approx(0.5));
  }
  // Diagonal fold: the image is one triangle.
  const Line diag = Line::through({0, 0}, {1, 1});
  const Side upper = diag.signed_distance({0, 1}) > 0 ? Side::Positive : Side::Negative;
  const auto tri = single_fold(sq, diag, FoldMask::all(upper));
  for (const auto& part : tri.parts.parts)
    for (const Point& v : part.vertices) CHECK(v.x >= v.y - 1e-8);

  // A fold through two adjacent sides stays inside the square.
  const auto corner = single_fold(sq, Line::through({0.6, 1.0}, {1.0, 0.3}), FoldMask::all(Side::Positive));
  for (const Point& v : corner.vertices()) CHECK(contains_point(sq, v, 1e-9));
  const auto corner2 = single_fold(sq, Line::through({0.6, 1.0}, {1.0, 0.3}), FoldMask::all(Side::Negative));
  CHECK(corner2.crossed);
}

TEST_CASE("single_fold errors and disjoint lines") {
  const Polygon sq = unit_square();
  CHECK_THROWS_AS(single_fold(sq, Line(0.0, 0.5), FoldMask{Side::Positive, 0}), std::invalid_argument);
  CHECK_THROWS_AS(single_fold(sq, Line(0.0, 0.5), FoldMask::only(Side::Positive, {1})), std::invalid_argument);
  const auto none = single_fold(sq, Line(0.0, 3.0), FoldMask::all(Side::Positive));
  CHECK_FALSE(none.crossed);
  REQUIRE(none.parts.parts.size() == 1);
  CHECK(area(none.parts.parts[0]) == doctest::Approx(1.0));
}

TEST_CASE("selective fold of a two-component side") {
  const Polygon L = l_shape();
  const Line l(kPi / 4, 3.5 / std::sqrt(2.0));
  const auto split = split_by_line(L, l);
  REQUIRE(split.positive.size() == 2);
  const auto one = single_fold(L, l, FoldMask::only(Side::Positive, {1}));
  int reflected = 0;
  for (const auto& pv : one.provenance) reflected += pv.reflected ? 1 : 0;
  CHECK(reflected == 1);
  CHECK(one.parts.parts.size() == 3);
}

TEST_CASE("fold isometry, area and involution") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> ang(0, kPi), off(-0.5, 3.5);
  const Polygon L = l_shape();
  for (int t = 0; t < 30; ++t) {
    const Line l(ang(rng), off(rng));
    const auto f = single_fold(L, l, FoldMask::all(Side::Positive));
    for (std::size_t i = 0; i < f.parts.parts.size(); ++i) {
      const auto& img = f.parts.parts[i].vertices;
      const auto& src = f.source_parts[i].vertices;
      REQUIRE(img.size() == src.size());
      // Reflected parts come back reversed; compare edge lengths as a cycle.
      for (std::size_t a = 0; a < img.size(); ++a) {
        const std::size_t ia = f.provenance[i].reflected ? img.size() - 1 - a : a;
        const std::size_t ib = f.provenance[i].reflected ? (img.size() * 2 - 2 - a) % img.size() : (a + 1) % img.size();
        CHECK(std::abs(dist(img[ia], img[ib]) - dist(src[a], src[(a + 1) % src.size()])) <= 1e-12);
      }
    }
    const auto [mc, se] = oracle::union_area_monte_carlo(f.parts.parts, 1000000, 100 + t);
    CHECK(mc <= area(L) + 1e-9 + 3 * se);

    // Reflecting the folded parts back restores the source components.
    for (std::size_t i = 0; i < f.parts.parts.size(); ++i) {
      if (!f.provenance[i].reflected) continue;
      const Polygon back = reflect_polygon(f.parts.parts[i], f.line_used);
      REQUIRE(back.size() == f.source_parts[i].size());
      for (std::size_t k = 0; k < back.size(); ++k) CHECK(dist(back[k], f.source_parts[i][k]) <= 1e-12);
    }
  }
}

TEST_CASE("map_point follows reflected components") {
  const Polygon sq = unit_square();
  const auto f = single_fold(sq, Line(0.0, 0.5), FoldMask::all(Side::Negative));
  CHECK(near(f.map_point({0.1, 0.3}), {0.9, 0.3}, 1e-12));
  CHECK(near(f.map_point({0.7, 0.3}), {0.7, 0.3}, 1e-15));
}

TEST_CASE("fold_vertex_image") {
  const Point P{0.3, 1.2};
  const auto f = fold_vertex_image(P);
  const double px = P.x, py = P.y;
  const Point T{(px * px + (py - 1) * (py - 1)) / (2 * px), 1};
  const Point B{(px * px + py * py - 1) / (2 * px), 0};
  const double den = px * px + (py - 1) * (py - 1);
  const Point Q{px * (px * px + py * py - 1) / den, (px * px + py * py - 1) * (py - 1) / den};
  const auto pts = f.vertices();
  auto found = [&](const Point& q) {
    for (const Point& v : pts)
      if (near(v, q, 1e-10)) return true;
    return false;
  };
  CHECK(found(P));
  CHECK(found(T));
  CHECK(found(B));
  CHECK(found(Q));
  CHECK(Q.x > 1);
  const Polygon hull = convex_hull(pts);
  CHECK(hull.size() == 6);
  for (const Point& v : {B, Point{1, 0}, Q, Point{1, 1}, P, T}) CHECK(has_vertex(hull, v, 1e-9));

  const Point P2{0.68, 1.105};
  const double qx2 = P2.x * (P2.x * P2.x + P2.y * P2.y - 1) / (P2.x * P2.x + (P2.y - 1) * (P2.y - 1));
  CHECK(qx2 < 1);
  CHECK(convex_hull(fold_vertex_image(P2).vertices()).size() == 5);

  // Close to the lower edge of the region the fold is a thin sliver.
  const auto thin = fold_vertex_image({1e-3, 1 + 1e-9});
  CHECK(std::abs(thin.line_used.angle()) < 1e-2);

  CHECK_THROWS_AS(fold_vertex_image({0.9, 1.1}), std::invalid_argument);
  CHECK_THROWS_AS(fold_vertex_image({0.5, 1.5}), std::invalid_argument);
}

TEST_CASE("spiralize") {
  const PolyPath straight{{{0, 0}, {1, 0}}};
  CHECK(spiralize(straight).vertices == straight.vertices);

  const PolyPath zig{{{0, 0}, {1, 0}, {2, 0.5}, {3, 0}}};
  const PolyPath s = spiralize(zig);
  CHECK(s.length() == doctest::Approx(1 + 2 * std::sqrt(1.25)).epsilon(1e-14));
  for (double a : s.turn_angles()) CHECK(a <= 1e-15);
  const auto before = zig.turn_angles(), after = s.turn_angles();
  for (std::size_t i = 0; i < before.size(); ++i) CHECK(std::abs(std::abs(before[i]) - std::abs(after[i])) < 1e-12);
  CHECK(spiralize(s).vertices == s.vertices);
}

TEST_CASE("crimp_circle") {
  for (int n : {8, 64, 360}) {
    const PolyPath c = crimp_circle(2 * kPi, n);
    CHECK(c.vertices.size() == static_cast<std::size_t>(n + 1));
    CHECK(std::abs(c.length() - 2 * kPi) <= 1e-12);
    CHECK(dist(c.vertices.front(), c.vertices.back()) < 1e-9);
    const double bound = 2 * kPi * (1 - std::sin(kPi / n) / (kPi / n));
    const double ratio = (kPi / n) / std::sin(kPi / n);
    for (const Point& v : c.vertices) {
      CHECK(std::abs(norm(v) - 1.0) <= bound);
      CHECK(norm(v) <= ratio + 1e-9);
    }
    for (double a : c.turn_angles()) CHECK(a < 0);
  }
  CHECK_THROWS_AS(crimp_circle(1.0, 7), std::invalid_argument);
  CHECK_THROWS_AS(crimp_circle(0.0, 10), std::invalid_argument);
}

TEST_CASE("simple_lower_bound") {
  CHECK(simple_lower_bound(unit_square()).value == doctest::Approx(std::sqrt(2.0) / (2 * kPi * 0.5)));
  const auto rect = simple_lower_bound(make_polygon({{0, 0}, {20, 0}, {20, 1}, {0, 1}}));
  CHECK(rect.value == doctest::Approx(std::sqrt(401.0) / kPi).epsilon(1e-12));
  std::vector<Point> disk;
  for (int i = 0; i < 720; ++i) disk.push_back(unit_vector(2 * kPi * i / 720));
  const auto d = simple_lower_bound(make_polygon(disk));
  CHECK(d.value == doctest::Approx(1 / kPi).epsilon(1e-4));
}
