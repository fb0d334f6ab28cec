#include "foldcover/cover.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace foldcover {

double kappa() { return std::pow((std::sqrt(5.0) - 1.0) / 2.0, 2.5); }

double phi_star() { return 2.0 * std::atan(std::sqrt((std::sqrt(5.0) - 1.0) / 2.0)); }

double r_phi(double phi, double R) { return R / 2.0 * std::sin(phi) / (1.0 + std::sin(phi / 2.0)); }

double upper_bound_R_over_r(const MetricsReport& metrics) { return metrics.R() / metrics.r(); }

double upper_bound_R_over_r(const Polygon& S) { return upper_bound_R_over_r(compute_metrics(S)); }

ConvexLowerBound convex_lower_bound(const Polygon& S) {
  if (!is_convex(S)) throw std::domain_error("convex_lower_bound: shape is not convex");
  const MetricsReport m = compute_metrics(S);
  ConvexLowerBound out;
  out.R = m.R();
  out.r = m.r();
  out.value = kappa() * out.R / out.r;
  out.center = m.circumcircle.center;

  std::vector<Point> touching;
  for (const Point& v : S.vertices)
    if (dist(v, out.center) >= out.R * (1.0 - 1e-7)) touching.push_back(v);
  double widest = -1.0;
  for (std::size_t i = 0; i < touching.size(); ++i)
    for (std::size_t j = i + 1; j < touching.size(); ++j) {
      const Point a = touching[i] - out.center, b = touching[j] - out.center;
      const double ang = std::abs(std::atan2(cross(a, b), dot(a, b)));
      if (ang > widest) widest = ang, out.t1 = touching[i], out.t2 = touching[j];
    }
  if (widest < 0.0) throw GeometryError("convex_lower_bound: circumcircle has fewer than two contacts");

  const Point a = out.t1 - out.center, b = out.t2 - out.center;
  const double turn = cross(a, b) >= 0.0 ? 1.0 : -1.0;
  const Point target = out.center + rotate(a, turn * phi_star());
  const Point dir = (b / norm(b)) + (target - out.center) / norm(target - out.center);
  out.fold_line = Line::through_with_direction(out.center, dir);
  out.folded_side = out.fold_line.signed_distance(out.t2) > 0 ? Side::Positive : Side::Negative;
  const FoldedState folded = single_fold(S, out.fold_line, FoldMask::all(out.folded_side));
  out.t2_image = folded.map_point(out.t2);
  const double la = dist(out.t1, out.center), lb = dist(out.center, out.t2_image), lc = dist(out.t2_image, out.t1);
  const double tri_area = std::abs(orient(out.t1, out.center, out.t2_image)) / 2.0;
  out.inscribed_radius = 2.0 * tri_area / (la + lb + lc);
  return out;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

namespace {

// Shape moved so its centroid is the origin and its farthest vertex lies on +x.
struct Frame {
  Point origin;
  double rotation = 0.0;

  Point to_local(const Point& p) const { return rotate(p - origin, -rotation); }
  Point to_world(const Point& p) const { return origin + rotate(p, rotation); }
};

Frame intrinsic_frame(const Polygon& S) {
  Frame f;
  f.origin = centroid(S);
  double far = 0.0;
  for (const Point& v : S.vertices) far = std::max(far, dist(v, f.origin));
  for (const Point& v : S.vertices) {
    if (dist(v, f.origin) >= far * (1.0 - 1e-12)) {
      f.rotation = std::atan2(v.y - f.origin.y, v.x - f.origin.x);
      break;
    }
  }
  return f;
}

Polygon to_local(const Frame& f, const Polygon& S) {
  Polygon out;
  for (const Point& v : S.vertices) out.vertices.push_back(f.to_local(v));
  return out;
}

FoldChoice to_world(const Frame& f, const Line& local, const FoldMask& mask) {
  const Point a = f.to_world(local.anchor());
  const Point b = f.to_world(local.anchor() + local.direction());
  const Line world = Line::through(a, b);
  const Point probe = f.to_world(local.anchor() + local.normal());
  FoldMask m = mask;
  if (world.signed_distance(probe) < 0.0) m.side = opposite(mask.side);
  return {world, m};
}

std::vector<Point> reflex_vertices(const Polygon& S) {
  std::vector<Point> out;
  const std::size_t n = S.size();
  for (std::size_t i = 0; i < n; ++i)
    if (orient(S.vertex(i + n - 1), S[i], S.vertex(i + 1)) < 0.0) out.push_back(S[i]);
  return out;
}

// Precomputed data for covering folded states by copies of a non-convex S.
struct NonConvexTarget {
  explicit NonConvexTarget(const Polygon& S)
      : shape(S), index(S), hull(convex_hull(S.vertices)), reflex(reflex_vertices(S)) {
    const MetricsReport m = compute_metrics(S);
    incenter = m.incircle.center;
    geodesic_center = m.geodesic.center;
    cap = m.R() / m.r();
    diameter = m.circumcircle.radius * 2.0;
  }
  Polygon shape;
  PolygonIndex index;
  Container hull;
  std::vector<Point> reflex;
  Point incenter;
  Point geodesic_center;
  double cap = 0.0;
  double diameter = 0.0;
};

struct SampledParams {
  std::size_t orientations = 64;
  double spacing_fraction = 1e-2;  // of the diameter
  double rel_tol = 1e-4;
  /// Candidates whose translation is re-optimized at every trial scale.
  std::size_t translated = 0;
};

bool sampled_covers(const NonConvexTarget& T, std::span<const Point> samples, const PolyShape& F, const Pose& pose,
                    double spacing) {
  for (const Point& q : samples)
    if (!T.index.contains(pose.apply_inverse(q), 1e-9)) return false;
  for (const Point& w : T.reflex) {
    const Point p = pose.apply(w);
    for (const Polygon& part : F.parts)
      if (inside_crossing(part, p) && signed_depth(part, p) > spacing) return false;
  }
  return true;
}

// Largest distance of a sample outside the posed copy, plus reflex vertices
// sunk deeper than the sample spacing into F. Zero when sampled_covers holds.
double sampled_violation(const NonConvexTarget& T, std::span<const Point> samples, const PolyShape& F,
                         const Pose& pose, double spacing) {
  double worst = 0.0;
  for (const Point& q : samples) {
    const Point p = pose.apply_inverse(q);
    if (!T.index.contains(p, 1e-9)) worst = std::max(worst, T.index.distance_to_boundary(p) * pose.scale + 1e-12);
  }
  for (const Point& w : T.reflex) {
    const Point p = pose.apply(w);
    for (const Polygon& part : F.parts)
      if (inside_crossing(part, p)) worst = std::max(worst, signed_depth(part, p) - spacing);
  }
  return worst;
}

// Pattern search over the translation at a fixed rotation and scale; true
// once a covering translation turns up.
bool find_translation(const NonConvexTarget& T, std::span<const Point> samples, const PolyShape& F, Pose& pose,
                      double spacing) {
  double current = sampled_violation(T, samples, F, pose, spacing);
  double step = 0.05 * pose.scale * T.diameter;
  const double floor = 1e-4 * pose.scale * T.diameter;
  const Point moves[8] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  for (int iter = 0; current > 0.0 && step > floor && iter < 200; ++iter) {
    bool improved = false;
    for (const Point& m : moves) {
      Pose trial = pose;
      trial.translation = pose.translation + m * step;
      const double v = sampled_violation(T, samples, F, trial, spacing);
      if (v < current) {
        current = v;
        pose = trial;
        improved = true;
        if (v <= 0.0) break;
      }
    }
    if (!improved) step *= 0.5;
  }
  return current <= 0.0;
}

EnclosureResult sampled_cover(const NonConvexTarget& T, const FoldedState& F, const SampledParams& params) {
  const double spacing = T.diameter * params.spacing_fraction;
  std::vector<Point> samples;
  for (const Polygon& part : F.parts.parts) {
    const auto s = boundary_samples(part, spacing);
    samples.insert(samples.end(), s.begin(), s.end());
  }
  const std::vector<Point> pts = F.vertices();

  // Geodesic-radius pose: F stays within R of the image of the geodesic center.
  EnclosureResult best;
  best.scale = T.cap;
  best.pose = Pose{0.0, false, F.map_point(T.geodesic_center) - T.incenter * T.cap, T.cap};

  struct Candidate {
    double c;
    Pose pose;
  };
  std::vector<Candidate> cands;
  for (std::size_t o = 0; o < params.orientations; ++o) {
    const double theta = 2.0 * kPi * o / params.orientations;
    for (bool refl : {false, true}) {
      const FixedScale fs = fixed_rotation_min_scale(T.hull.shape(), pts, theta, refl);
      cands.push_back({fs.c, Pose{theta, refl, fs.translation, fs.c}});
    }
  }
  const EnclosureResult hull_opt = min_scaled_copy(T.hull, pts, {{256, 2, 1e-10}, true});
  cands.push_back({hull_opt.scale, hull_opt.pose});
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.c < b.c; });

  for (std::size_t k = 0; k < cands.size(); ++k) {
    const Candidate& cand = cands[k];
    const double hi0 = best.scale * (1.0 - params.rel_tol);
    if (cand.c >= hi0) break;
    const Point w = cand.pose.apply(T.incenter);
    // Scaled about the image of the incenter, then optionally shifted.
    const bool shift = k < params.translated;
    Point last_shift{};
    auto covers_at = [&](double c, Pose& out) {
      const Pose unit{cand.pose.rotation, cand.pose.reflected, {}, 1.0};
      out = Pose{cand.pose.rotation, cand.pose.reflected, w - unit.apply(T.incenter) * c + last_shift, c};
      if (!shift) return sampled_covers(T, samples, F.parts, out, spacing);
      if (!find_translation(T, samples, F.parts, out, spacing)) return false;
      last_shift = out.translation - (w - unit.apply(T.incenter) * c);
      return true;
    };
    Pose found;
    if (!covers_at(hi0, found)) continue;
    Pose hi_pose = found;
    double lo = cand.c, hi = hi0;
    if (covers_at(lo, found)) {
      hi = lo;
      hi_pose = found;
    } else {
      while (hi / lo - 1.0 > params.rel_tol) {
        const double mid = 0.5 * (lo + hi);
        if (covers_at(mid, found)) {
          hi = mid;
          hi_pose = found;
        } else {
          lo = mid;
        }
      }
    }
    best.scale = hi;
    best.pose = hi_pose;
  }
  return best;
}

struct FoldKey {
  double alpha = 0.0;
  double offset = 0.0;
  Side side = Side::Positive;
  std::uint64_t bits = 0;  // 0 = every component
};

struct Scored {
  double value = -std::numeric_limits<double>::infinity();
  FoldKey key;
};

FoldMask mask_of(const FoldKey& k) {
  return k.bits == 0 ? FoldMask::all(k.side) : FoldMask{k.side, k.bits};
}

// The fold search on a shape in its intrinsic frame.
class FoldSearch {
 public:
  FoldSearch(const Polygon& local, const CoverOptions& options)
      : local_(local), options_(options), convex_(is_convex(local)) {
    if (convex_) {
      container_.emplace(local_);
      symmetry_ = container_->symmetry();
    } else {
      target_.emplace(local_);
    }
  }

  bool convex() const { return convex_; }

  double alpha_range() const { return std::min(kPi, 2.0 * kPi / symmetry_); }

  std::pair<double, double> offset_range(double alpha) const {
    const Point n = unit_vector(alpha);
    return {-support(local_, -n), support(local_, n)};
  }

  // Enclosing scale of one fold; -inf when the fold is invalid or trivial.
  double value(const FoldKey& k, bool fine) const {
    FoldedState f;
    try {
      f = single_fold(local_, Line(k.alpha, k.offset), mask_of(k));
    } catch (const std::invalid_argument&) {
      return -std::numeric_limits<double>::infinity();
    }
    if (!f.crossed) return -std::numeric_limits<double>::infinity();
    if (convex_) {
      const bool fast = container_->kind() != Container::Kind::General;
      const std::size_t grid = fine || fast ? options_.theta_grid : options_.screen_grid;
      return min_scaled_copy(*container_, f, {{grid, 4, 1e-11}, true}).scale;
    }
    return sampled_cover(*target_, f, fine ? fine_params() : coarse_params()).scale;
  }

  // Every fold of one grid line: the positive side for convex shapes, both
  // sides and all masks otherwise.
  std::vector<FoldKey> folds_on(double alpha, double offset) const {
    if (convex_) return {{alpha, offset, Side::Positive, 0}};
    std::vector<FoldKey> out;
    const SplitResult split = split_by_line(local_, Line(alpha, offset));
    if (!split.crossed) return out;
    for (Side s : {Side::Positive, Side::Negative}) {
      const std::size_t comps = std::min<std::size_t>(split.side(s).size(), 6);
      if (comps <= 1) {
        out.push_back({alpha, offset, s, 0});
        continue;
      }
      for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << comps); ++bits)
        out.push_back({alpha, offset, s, bits == (std::uint64_t{1} << comps) - 1 ? 0 : bits});
    }
    return out;
  }

  static SampledParams coarse_params() { return {32, 1e-2, 1e-4, 0}; }
  static SampledParams fine_params() { return {256, 1e-3, 1e-7, 4}; }

 private:
  Polygon local_;
  CoverOptions options_;
  bool convex_;
  int symmetry_ = 1;
  std::optional<Container> container_;
  std::optional<NonConvexTarget> target_;
};

Scored pattern_search(const FoldSearch& search, Scored start, double d_alpha, double d_offset, int halvings) {
  Scored best = start;
  int halved = 0;
  for (int iter = 0; iter < 400 && halved <= halvings; ++iter) {
    Scored next = best;
    for (int da = -1; da <= 1; ++da)
      for (int ds = -1; ds <= 1; ++ds) {
        if (da == 0 && ds == 0) continue;
        FoldKey k = best.key;
        k.alpha += da * d_alpha;
        k.offset += ds * d_offset;
        const auto [lo, hi] = search.offset_range(k.alpha);
        if (k.offset <= lo || k.offset >= hi) continue;
        const double v = search.value(k, false);
        if (v > next.value + 1e-13) next = {v, k};
      }
    if (next.value > best.value) {
      best = next;
    } else {
      d_alpha /= 2;
      d_offset /= 2;
      ++halved;
    }
  }
  return best;
}

}  // namespace

EnclosureResult cover_scale(const Polygon& S, const FoldedState& F, std::size_t theta_grid) {
  if (is_convex(S)) return min_scaled_copy(Container(S), F, {{theta_grid, 4, 1e-11}, true});
  return sampled_cover(NonConvexTarget(S), F, FoldSearch::fine_params());
}

CoverReport one_fold_cover_factor(const Polygon& S, CoverOptions options, std::string shape_id) {
  const Frame frame = intrinsic_frame(S);
  const FoldSearch search(to_local(frame, S), options);
  const std::size_t base_angles = search.convex() ? options.angles : options.nonconvex_angles;
  const std::size_t n_off = std::max<std::size_t>(search.convex() ? options.offsets : options.nonconvex_offsets, 1);
  const double range = search.alpha_range();
  const std::size_t n_alpha =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(base_angles * range / kPi)));

  std::vector<FoldKey> keys;
  for (std::size_t i = 0; i < n_alpha; ++i) {
    const double alpha = range * i / n_alpha;
    const auto [lo, hi] = search.offset_range(alpha);
    for (std::size_t j = 0; j < n_off; ++j) {
      const double s = lo + (hi - lo) * (j + 0.5) / n_off;
      for (const FoldKey& k : search.folds_on(alpha, s)) keys.push_back(k);
    }
  }
  std::vector<Scored> scored(keys.size());
  parallel_for(keys.size(), options.threads, [&](std::size_t i) { scored[i] = {search.value(keys[i], false), keys[i]}; });
  std::stable_sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) { return a.value > b.value; });

  const double d_alpha = range / n_alpha;
  const auto [lo0, hi0] = search.offset_range(0.0);
  const double d_offset = (hi0 - lo0) / n_off;

  // Distinct starting folds for refinement.
  std::vector<Scored> starts;
  for (const Scored& s : scored) {
    if (starts.size() >= std::max<std::size_t>(options.refine_candidates, 1)) break;
    if (!std::isfinite(s.value)) break;
    bool close = false;
    for (const Scored& t : starts)
      close = close || (std::abs(t.key.alpha - s.key.alpha) <= 2 * d_alpha && std::abs(t.key.offset - s.key.offset) <= 2 * d_offset &&
                        t.key.side == s.key.side);
    if (!close) starts.push_back(s);
  }

  CoverReport report;
  report.shape_id = std::move(shape_id);
  report.convex = search.convex();
  report.options = options;
  report.folds_evaluated = keys.size();
  if (starts.empty()) {
    // No fold line meets the interior: the shape only covers itself.
    report.estimate = report.certified = 1.0;
    report.found = false;
    report.note = "no fold line crosses the shape";
    return report;
  }

  Scored best{-std::numeric_limits<double>::infinity(), {}};
  for (Scored s : starts) {
    if (options.refine) s = pattern_search(search, s, d_alpha, d_offset, options.halvings);
    s.value = search.value(s.key, true);
    if (s.value > best.value) best = s;
  }

  report.witness = to_world(frame, Line(best.key.alpha, best.key.offset), mask_of(best.key));
  report.folded = single_fold(S, report.witness.line, report.witness.mask);
  report.enclosure = cover_scale(S, report.folded, options.theta_grid);
  report.estimate = report.enclosure.scale;
  if (report.convex) {
    report.certified = report.estimate;
  } else {
    const Container hull(convex_hull(S.vertices));
    report.certified = min_scaled_copy(hull, report.folded, {{options.theta_grid, 4, 1e-11}, true}).scale;
  }
  return report;
}

CoverOptions witness_options() {
  CoverOptions o;
  o.angles = 60;
  o.offsets = 60;
  o.nonconvex_angles = 45;
  o.nonconvex_offsets = 50;
  o.screen_grid = 64;
  return o;
}

CoverReport polygon_witness_fold(const Polygon& P, CoverOptions options, std::string shape_id) {
  constexpr double kMargin = 1e-4;
  const bool convex = is_convex(P);
  const Point center = min_enclosing_circle(P.vertices).center;

  // Folds through the circumcenter first.
  const std::size_t n_lines = 360;
  Scored best{-std::numeric_limits<double>::infinity(), {}};
  std::optional<Container> hull;
  hull.emplace(convex ? P : convex_hull(P.vertices));
  std::vector<FoldKey> keys;
  for (std::size_t i = 0; i < n_lines; ++i) {
    const double alpha = kPi * i / n_lines;
    const Line l(alpha, dot(unit_vector(alpha), center));
    const SplitResult split = split_by_line(P, l);
    if (!split.crossed) continue;
    for (Side s : {Side::Positive, Side::Negative}) {
      const std::size_t comps = std::min<std::size_t>(split.side(s).size(), 6);
      for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << comps); ++bits)
        keys.push_back({alpha, l.offset(), s, bits == (std::uint64_t{1} << comps) - 1 ? 0 : bits});
      if (convex) break;
    }
  }
  std::vector<double> values(keys.size());
  parallel_for(keys.size(), options.threads, [&](std::size_t i) {
    const FoldedState f = single_fold(P, Line(keys[i].alpha, keys[i].offset), mask_of(keys[i]));
    values[i] = min_scaled_copy(*hull, f, {{options.screen_grid, 4, 1e-11}, true}).scale;
  });
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (values[i] > best.value) best = {values[i], keys[i]};

  CoverReport report;
  report.shape_id = std::move(shape_id);
  report.convex = convex;
  report.options = options;
  report.folds_evaluated = keys.size();
  if (std::isfinite(best.value)) {
    report.witness = {Line(best.key.alpha, best.key.offset), mask_of(best.key)};
    report.folded = single_fold(P, report.witness.line, report.witness.mask);
    // The hull bound certifies the fold for non-convex shapes as well.
    const EnclosureResult hull_cover = min_scaled_copy(*hull, report.folded, {{options.theta_grid, 4, 1e-11}, true});
    report.certified = hull_cover.scale;
    report.enclosure = convex ? hull_cover : cover_scale(P, report.folded, options.theta_grid);
    report.estimate = report.enclosure.scale;
    report.note = "fold through the circumcenter";
  }

  CoverReport grid = one_fold_cover_factor(P, options, report.shape_id);
  grid.note = "fold-line grid";
  grid.folds_evaluated += report.folds_evaluated;
  CoverReport& chosen = grid.certified >= report.certified ? grid : report;
  chosen.folds_evaluated = grid.folds_evaluated;
  if (chosen.certified <= 1.0 + kMargin) {
    chosen.found = false;
    chosen.note = "no witness found at this resolution";
  }
  return chosen;
}

std::optional<Point> square_witness_point(const Line& fold_line) {
  using Map = Point (*)(const Point&);
  static const Map symmetries[8] = {
      [](const Point& p) { return p; },
      [](const Point& p) { return Point{1 - p.x, p.y}; },
      [](const Point& p) { return Point{p.x, 1 - p.y}; },
      [](const Point& p) { return Point{1 - p.x, 1 - p.y}; },
      [](const Point& p) { return Point{p.y, p.x}; },
      [](const Point& p) { return Point{1 - p.y, p.x}; },
      [](const Point& p) { return Point{p.y, 1 - p.x}; },
      [](const Point& p) { return Point{1 - p.y, 1 - p.x}; },
  };
  const Point a = fold_line.anchor(), b = a + fold_line.direction();
  for (const Map g : symmetries) {
    const Point ga = g(a), gb = g(b);
    if (std::abs(gb.y - ga.y) < 1e-15) continue;
    // Crossings with y = 0 and y = 1.
    const double x0 = ga.x + (gb.x - ga.x) * (0.0 - ga.y) / (gb.y - ga.y);
    const double x1 = ga.x + (gb.x - ga.x) * (1.0 - ga.y) / (gb.y - ga.y);
    const double slope_sign = (gb.y - ga.y) * (gb.x - ga.x);
    if (x0 <= 0 || x0 >= 1 || x1 <= 0 || x1 >= 0.5 || slope_sign >= 0 || x0 + x1 >= 1) continue;
    return reflect_point({0, 1}, Line::through(ga, gb));
  }
  return std::nullopt;
}

std::optional<Point> triangle_witness_point(const Line& fold_line) {
  const Polygon T = Polygon{{{-1, 0}, {1, 0}, {0, std::sqrt(3.0)}}};
  const Point center{0, std::sqrt(3.0) / 3};
  int pos = 0;
  for (const Point& v : T.vertices) pos += fold_line.signed_distance(v) > 0 ? 1 : 0;
  if (pos == 0 || pos == 3) return std::nullopt;
  const bool lone_positive = pos == 1;
  for (const Point& v : T.vertices) {
    if ((fold_line.signed_distance(v) > 0) != lone_positive) continue;
    const Point image = reflect_point(v, fold_line);
    const double turn = std::atan2(T[2].y - center.y, T[2].x - center.x) - std::atan2(v.y - center.y, v.x - center.x);
    return center + rotate(image - center, turn);
  }
  return std::nullopt;
}

}  // namespace foldcover
