#include "foldcover/families.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "foldcover/cover.hpp"
#include "foldcover/enclose.hpp"

namespace foldcover {

namespace {

constexpr double kSampleSpacing = 1e-3;
constexpr double kStretchSlack = 1e-9;

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

double uniform(std::mt19937_64& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

enum class Stratum { Near, Far, Selective };

struct LimaconTrial {
  Stratum stratum = Stratum::Near;
  double violation = 0.0;
  bool rotated = false;
  Line line;
};

// The first crossing fold drawn from the stratum; the selective stratum falls
// back to a far fold when no split side has two components.
std::pair<FoldedState, Stratum> limacon_fold(const Polygon& S, double chord, Stratum stratum, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 400; ++attempt) {
    if (stratum == Stratum::Selective) {
      const double psi = kPi / 2 + uniform(rng, -0.8, 0.8);
      const double reach = support(S, unit_vector(psi));
      const Line line(psi, uniform(rng, chord - 0.05, reach));
      const SplitResult split = split_by_line(S, line);
      if (!split.crossed || split.positive.size() < 2) continue;
      const auto pick = std::uniform_int_distribution<std::size_t>(0, split.positive.size() - 1)(rng);
      return {single_fold(S, line, FoldMask::only(Side::Positive, {pick})), stratum};
    }
    const double psi = uniform(rng, 0.0, 2.0 * kPi);
    const double offset = stratum == Stratum::Near ? uniform(rng, 0.0, chord) : uniform(rng, chord, 1.0);
    const Line line(psi, offset);
    // C = origin lies on the far side of the positive normal.
    const Side away = line.signed_distance({0, 0}) < 0 ? Side::Positive : Side::Negative;
    FoldedState f = single_fold(S, line, FoldMask::all(away));
    if (f.crossed) return {std::move(f), stratum};
  }
  if (stratum == Stratum::Selective) return limacon_fold(S, chord, Stratum::Far, rng);
  throw GeometryError("limacon_fold: no crossing line found");
}

}  // namespace

Pose limacon_rotation_pose(const Line& fold_line, Side folded_side) {
  const Point n = folded_side == Side::Positive ? fold_line.normal() : -fold_line.normal();
  const double turn = kPi / 2 - std::atan2(n.y, n.x);
  return Pose{-turn, false, {0, 0}, 1.0};
}

LimaconVerification verify_limacon_one_fold(double phi, std::size_t trials, std::uint64_t seed, int resolution,
                                            unsigned threads) {
  const LimaconShape shape = build_S_phi(phi, resolution);
  const PolygonIndex index(shape.boundary);
  std::vector<LimaconTrial> results(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    auto rng = trial_rng(seed, i);
    const auto [folded, stratum] = limacon_fold(shape.boundary, shape.chord_distance, static_cast<Stratum>(i % 3), rng);
    LimaconTrial& t = results[i];
    t.stratum = stratum;
    t.line = folded.fold_line;
    // Unreflected pieces are pieces of S, so the identity only needs the others.
    PolyShape moved;
    for (std::size_t k = 0; k < folded.parts.parts.size(); ++k)
      if (folded.provenance[k].reflected) moved.parts.push_back(folded.parts.parts[k]);
    t.violation = containment_violation(index, moved, Pose{}, kSampleSpacing);
    if (t.violation > 0.0) {
      const double rotated = containment_violation(index, folded.parts, limacon_rotation_pose(folded.line_used, folded.mask.side), kSampleSpacing);
      if (rotated < t.violation) t.violation = rotated, t.rotated = true;
    }
  });

  LimaconVerification out;
  out.phi = phi;
  out.trials = trials;
  out.seed = seed;
  out.resolution = resolution;
  for (const LimaconTrial& t : results) {
    (t.stratum == Stratum::Near ? out.near_trials : t.stratum == Stratum::Far ? out.far_trials : out.selective_trials)++;
    if (t.rotated) ++out.rotation_poses;
    if (t.violation > kFamilyTolerance) ++out.violations;
    if (t.violation > out.max_violation) out.max_violation = t.violation, out.worst_line = t.line;
  }
  return out;
}

CrimpCheck limacon_crimp_check(double phi, double delta, int resolution) {
  const LimaconShape shape = build_S_phi(phi, resolution);
  const Polygon& S = shape.boundary;
  CrimpCheck out;
  out.delta = delta;
  out.O = {0, -1};
  double far_left = -1.0, far_right = -1.0;
  for (const Point& v : S.vertices) {
    const double r = dist(v, out.O);
    if (v.x < 0 && r > far_left) far_left = r, out.tip_left = v;
    if (v.x > 0 && r > far_right) far_right = r, out.tip_right = v;
  }

  // Pleat along x = 0 and the line through O turned by -delta/2: the wedge
  // between them flips over x = 0 and the rest of the right half turns by delta.
  const Line l1 = Line::through_with_direction(out.O, {0, 1});
  const Line l2 = Line::through_with_direction(out.O, unit_vector(kPi / 2 - delta / 2));
  const SplitResult halves = split_by_line(S, l1);
  const Side left = l1.signed_distance({-1, 0}) > 0 ? Side::Positive : Side::Negative;
  for (const Polygon& p : halves.side(left)) out.folded.parts.push_back(p);
  const Side wedge = l2.signed_distance({-1, 0}) > 0 ? Side::Positive : Side::Negative;
  const Pose turn{delta, false, out.O - rotate(out.O, delta), 1.0};
  for (const Polygon& right : halves.side(opposite(left))) {
    const SplitResult cut = split_by_line(right, l2);
    for (const Polygon& w : cut.side(wedge)) out.folded.parts.push_back(reflect_polygon(w, l1));
    for (const Polygon& c : cut.side(opposite(wedge))) out.folded.parts.push_back(transform_polygon(c, turn));
  }

  const PolygonIndex index(S);
  out.identity_violation = containment_violation(index, out.folded, Pose{}, kSampleSpacing);
  out.min_violation = out.identity_violation;
  for (int k = 0; k < 720; ++k) {
    const Pose about_c{2.0 * kPi * k / 720, false, {0, 0}, 1.0};
    out.min_violation = std::min(out.min_violation, containment_violation(index, out.folded, about_c, kSampleSpacing));
  }
  for (int k = -20; k <= 20; ++k) {
    const double a = delta * k / 20.0;
    const Pose about_o{a, false, out.O - rotate(out.O, a), 1.0};
    out.min_violation = std::min(out.min_violation, containment_violation(index, out.folded, about_o, kSampleSpacing));
  }
  return out;
}

double s_phi_area_fraction(double phi, int resolution) { return area(build_S_phi(phi, resolution).boundary) / kPi; }

BumpsVerification verify_bumps_cover(double d, double e, std::size_t trials, std::uint64_t seed, int resolution,
                                     unsigned threads) {
  const BumpsShape shape = build_bumps(d, e, resolution);
  const PolygonIndex index(shape.boundary);
  struct Trial {
    double violation = 0.0;
    double stretch = 0.0;
    bool composite = false;
  };
  std::vector<Trial> results(trials);
  auto random_line = [](const std::vector<Point>& pts, std::mt19937_64& rng) {
    const double psi = uniform(rng, 0.0, kPi);
    const Point n = unit_vector(psi);
    return Line(psi, uniform(rng, -support(pts, -n), support(pts, n)));
  };
  auto random_side = [](std::mt19937_64& rng) {
    return std::bernoulli_distribution(0.5)(rng) ? Side::Positive : Side::Negative;
  };

  parallel_for(trials, threads, [&](std::size_t i) {
    auto rng = trial_rng(seed, i);
    Trial& t = results[i];
    t.composite = i % 2 == 1;
    FoldedState first = single_fold(shape.boundary, random_line(shape.boundary.vertices, rng), FoldMask::all(random_side(rng)));
    Point c = first.map_point(shape.C), dd = first.map_point(shape.D);
    PolyShape folded = first.parts;
    if (t.composite) {
      const FoldedState second = fold_all(folded, random_line(first.vertices(), rng), random_side(rng));
      c = second.map_point(c);
      dd = second.map_point(dd);
      folded = second.parts;
    }
    const double cd = dist(c, dd);
    t.stretch = cd / dist(shape.C, shape.D);
    const double rotation = cd > 1e-12 ? std::atan2(dd.y - c.y, dd.x - c.x) : 0.0;
    t.violation = containment_violation(index, folded, Pose{rotation, false, c, 1.0}, kSampleSpacing);
  });

  BumpsVerification out;
  out.d = d;
  out.e = e;
  out.trials = trials;
  out.seed = seed;
  const double base = dist(shape.C, shape.D);
  for (const Trial& t : results) {
    if (t.composite) ++out.composite_trials;
    if (t.violation > kFamilyTolerance) ++out.violations;
    if (t.stretch * base > base + kStretchSlack) ++out.stretch_failures;
    out.max_violation = std::max(out.max_violation, t.violation);
    out.max_stretch = std::max(out.max_stretch, t.stretch);
  }
  return out;
}

double bumps_theta(double e) { return std::acos(e); }

double bumps_radius_ratio(double theta) { return 2.0 / (1.0 + std::sin(theta) + std::cos(theta)); }

double bumps_coverage_fraction(double theta) {
  const double s = std::sin(theta);
  const double R = (1.0 + s + std::cos(theta)) / 2.0;
  const double union_area = kPi * (1.0 + s * s / 2.0) - theta + std::sin(2.0 * theta) / 2.0;
  return union_area / (kPi * R * R);
}

}  // namespace foldcover
