#include <cmath>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acceptance/suites.hpp"
#include "foldcover/analytic.hpp"
#include "foldcover/cover.hpp"
#include "foldcover/enclose.hpp"
#include "foldcover/families.hpp"
#include "foldcover/fold.hpp"
#include "foldcover/io.hpp"
#include "foldcover/metrics.hpp"
#include "foldcover/shapes.hpp"
#include "foldcover/svg.hpp"

using namespace foldcover;

namespace {

// key=value report lines.
class Report {
 public:
  Report() { out_.precision(15); }
  template <class T>
  Report& put(const std::string& key, const T& value) {
    out_ << key << '=' << value << '\n';
    return *this;
  }
  Report& put(const std::string& key, const Point& p) {
    out_ << key << '=' << p.x << ',' << p.y << '\n';
    return *this;
  }
  Report& put(const std::string& key, bool b) { return put(key, std::string(b ? "true" : "false")); }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

const SvgStyle kShape{"#1f4e79", "#9ecae1", 0.6, 1.5};
const SvgStyle kFolded{"#8c2d04", "#fdae6b", 0.6, 1.5};
const SvgStyle kKept{"#1f4e79", "#c6dbef", 0.6, 1.5};
const SvgStyle kCover{"#238b45", "none", 1.0, 2.0};
const SvgStyle kGuide{"#636363", "none", 1.0, 1.0};

std::pair<std::size_t, std::size_t> parse_grid(const std::string& grid) {
  const auto x = grid.find('x');
  if (x == std::string::npos) throw CLI::ValidationError("--grid", "expected AxO, e.g. 360x400");
  return {std::stoul(grid.substr(0, x)), std::stoul(grid.substr(x + 1))};
}

Polygon load_shape(const std::string& path) { return shape_from_json(read_text(path)).polygon; }

void emit(const Report& r, const std::string& report_path) {
  std::cout << r.str();
  if (!report_path.empty()) write_text(report_path, r.str());
}

void draw_folded(SvgScene& scene, const FoldedState& f) {
  scene.begin_layer("folded");
  for (std::size_t i = 0; i < f.parts.parts.size(); ++i)
    scene.polygon(f.parts.parts[i], f.provenance[i].reflected ? kFolded : kKept);
  scene.begin_layer("fold-line");
  scene.line(f.line_used, kGuide);
}

Polygon posed(const Polygon& p, const Pose& pose) {
  Polygon out;
  for (const Point& v : p.vertices) out.vertices.push_back(pose.apply(v));
  return out;
}

FoldMask parse_mask(const std::string& side, const std::vector<std::size_t>& components) {
  const Side s = side == "negative" ? Side::Negative : Side::Positive;
  if (components.empty()) return FoldMask::all(s);
  std::uint64_t bits = 0;
  for (std::size_t c : components) bits |= std::uint64_t{1} << c;
  return FoldMask{s, bits};
}

void report_cover(Report& r, const CoverReport& c) {
  r.put("shape", c.shape_id).put("convex", c.convex).put("found", c.found).put("estimate", c.estimate);
  r.put("certified", c.certified).put("fold_angle", c.witness.line.angle()).put("fold_offset", c.witness.line.offset());
  r.put("fold_side", std::string(c.witness.mask.side == Side::Positive ? "positive" : "negative"));
  r.put("pose_rotation", c.enclosure.pose.rotation).put("pose_reflected", c.enclosure.pose.reflected);
  r.put("pose_translation", c.enclosure.pose.translation).put("pose_scale", c.enclosure.pose.scale);
  r.put("grid", std::to_string(c.options.angles) + "x" + std::to_string(c.options.offsets));
  r.put("folds_evaluated", c.folds_evaluated).put("note", c.note);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cover factors of folded shapes"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 0;
  std::uint64_t seed = 42;
  std::string svg_path, report_path;
  app.add_option("--threads", threads, "Worker threads (0 = hardware)");
  app.add_option("--seed", seed, "Seed for randomized checks");
  app.add_option("--svg", svg_path, "Write an SVG rendering");
  app.add_option("--report", report_path, "Also write the key=value report to this file");

  // gen
  auto* gen = app.add_subcommand("gen", "Write a shape file");
  std::string gen_kind, gen_out;
  double phi = NAN, d = NAN, e = NAN, w = NAN, h = NAN;
  int n = 0, resolution = 0;
  gen->add_option("kind", gen_kind,
                  "square | equilateral-triangle | disk | limacon | bumps | l-shape | rectangle | regular | random-convex")
      ->required();
  gen->add_option("-o,--out", gen_out, "Output shape file")->required();
  gen->add_option("--phi", phi, "radians");
  gen->add_option("--d", d);
  gen->add_option("--e", e);
  gen->add_option("--width", w);
  gen->add_option("--height", h);
  gen->add_option("--n", n);
  gen->add_option("--resolution", resolution);

  // metrics
  auto* metrics = app.add_subcommand("metrics", "Inradius, circumradius, geodesic radius and diameter");
  std::string metrics_shape;
  metrics->add_option("shape", metrics_shape)->required()->check(CLI::ExistingFile);

  // fold
  auto* fold = app.add_subcommand("fold", "Fold a shape along a line or by a square corner image");
  std::string fold_shape, fold_out, fold_side = "positive";
  std::vector<double> fold_line, fold_p;
  std::vector<std::size_t> fold_components;
  fold->add_option("shape", fold_shape)->check(CLI::ExistingFile);
  fold->add_option("--line", fold_line, "angle,offset")->delimiter(',')->expected(2);
  fold->add_option("--P", fold_p, "px,py: fold the unit square so (0,1) lands on P")->delimiter(',')->expected(2);
  fold->add_option("--side", fold_side)->check(CLI::IsMember({"positive", "negative"}));
  fold->add_option("--components", fold_components, "Component indices on the folded side")->delimiter(',');
  fold->add_option("-o,--out", fold_out, "Write the folded-state file");

  // enclose
  auto* enclose = app.add_subcommand("enclose", "Smallest scaled copy of a container around a target");
  std::string enclose_target, enclose_container = "square";
  enclose->add_option("target", enclose_target, "Shape or folded-state file")->required()->check(CLI::ExistingFile);
  enclose->add_option("--container", enclose_container, "square | triangle | <shape file>");

  // cover
  auto* cover = app.add_subcommand("cover", "Cover factor search and family verifiers");
  cover->require_subcommand(1);
  auto* factor = cover->add_subcommand("factor", "One-fold cover factor estimate");
  std::string factor_shape, factor_grid;
  bool factor_refine = true, factor_witness = false;
  factor->add_option("shape", factor_shape)->required()->check(CLI::ExistingFile);
  factor->add_option("--grid", factor_grid, "AxO fold-line grid");
  factor->add_option("--refine", factor_refine, "Pattern-search refinement (default true)");
  factor->add_flag("--witness", factor_witness, "Only look for a fold with factor > 1");
  auto* bounds = cover->add_subcommand("bounds", "Lower and upper bounds on the cover factor");
  std::string bounds_shape;
  bounds->add_option("shape", bounds_shape)->required()->check(CLI::ExistingFile);
  auto* verify = cover->add_subcommand("verify", "Seeded family verifiers");
  verify->require_subcommand(1);
  auto* verify_limacon = verify->add_subcommand("limacon");
  double v_phi = kPi / 3, v_d = 0.5, v_e = 0.6;
  std::size_t v_trials = 1000;
  verify_limacon->add_option("--phi", v_phi, "radians");
  verify_limacon->add_option("--trials", v_trials);
  auto* verify_bumps = verify->add_subcommand("bumps");
  verify_bumps->add_option("--d", v_d);
  verify_bumps->add_option("--e", v_e);
  verify_bumps->add_option("--trials", v_trials);

  // verify-all
  auto* verify_all = app.add_subcommand("verify-all", "Run the acceptance checks");
  std::vector<std::string> suite_names;
  double tol = 1e-3;
  std::string all_grid;
  std::size_t limacon_trials = 10000, bumps_trials = 1000;
  verify_all->add_option("--suite", suite_names, "Suite names (repeatable); default all");
  verify_all->add_option("--tol", tol, "Tolerance on the triangle and square factor estimates");
  verify_all->add_option("--grid", all_grid, "AxO grid for the factor checks");
  verify_all->add_option("--limacon-trials", limacon_trials);
  verify_all->add_option("--bumps-trials", bumps_trials);

  CLI11_PARSE(app, argc, argv);

  try {
    Report r;
    SvgScene scene;
    if (gen->parsed()) {
      std::map<std::string, double> params;
      if (!std::isnan(phi)) params["phi"] = phi;
      if (!std::isnan(d)) params["d"] = d;
      if (!std::isnan(e)) params["e"] = e;
      if (!std::isnan(w)) params["w"] = w;
      if (!std::isnan(h)) params["h"] = h;
      if (n > 0) params["n"] = n;
      if (resolution > 0) params["resolution"] = resolution;
      if (gen_kind == "random-convex") params["seed"] = static_cast<double>(seed);
      const ShapeFile shape = generate_shape(gen_kind, params);
      write_text(gen_out, to_json(shape));
      r.put("kind", shape.kind).put("vertices", shape.polygon.size()).put("area", area(shape.polygon));
      r.put("out", gen_out);
      scene.polygon(shape.polygon, kShape);
    } else if (metrics->parsed()) {
      const Polygon S = load_shape(metrics_shape);
      const MetricsReport m = compute_metrics(S);
      r.put("vertices", S.size()).put("area", area(S)).put("convex", is_convex(S));
      r.put("r", m.r()).put("incenter", m.incircle.center);
      r.put("circumradius", m.circumcircle.radius).put("circumcenter", m.circumcircle.center);
      r.put("R", m.R()).put("geodesic_center", m.geodesic.center);
      r.put("D", m.D()).put("diameter_a", m.diameter.a).put("diameter_b", m.diameter.b);
      r.put("jung_lower_margin", m.D() - std::sqrt(3.0) * m.R()).put("jung_upper_margin", 2.0 * m.R() - m.D());
      scene.begin_layer("shape");
      scene.polygon(S, kShape);
      scene.begin_layer("circles");
      scene.circle(m.incircle, kCover);
      scene.circle(m.circumcircle, kGuide);
      scene.begin_layer("diameter");
      for (const Point& p : {m.diameter.a, m.diameter.b}) scene.circle({p, 0.01 * m.D()}, kFolded);
    } else if (fold->parsed()) {
      FoldedState f;
      if (!fold_p.empty()) {
        f = fold_vertex_image({fold_p[0], fold_p[1]});
        const SquareFoldGeometry g = square_fold_geometry({fold_p[0], fold_p[1]});
        r.put("T", g.T).put("B", g.B).put("Q", g.Q);
      } else {
        if (fold_shape.empty() || fold_line.empty()) throw CLI::ValidationError("fold", "need a shape and --line, or --P");
        f = single_fold(load_shape(fold_shape), Line(fold_line[0], fold_line[1]), parse_mask(fold_side, fold_components));
      }
      r.put("crossed", f.crossed).put("parts", f.parts.parts.size()).put("nudges", f.nudges);
      r.put("line_angle", f.line_used.angle()).put("line_offset", f.line_used.offset());
      r.put("area", total_area(f.parts));
      if (!fold_out.empty()) write_text(fold_out, to_json(f));
      draw_folded(scene, f);
    } else if (enclose->parsed()) {
      const std::string text = read_text(enclose_target);
      const PolyShape target = is_folded_json(text) ? parts_from_json(text) : PolyShape{{shape_from_json(text).polygon}};
      const std::vector<Point> pts = all_vertices(target);
      EnclosureResult res;
      Polygon base;
      if (enclose_container == "square") {
        res = min_square(pts);
        base = base_square();
      } else if (enclose_container == "triangle") {
        res = min_equilateral_triangle(pts);
        base = base_triangle();
      } else {
        base = load_shape(enclose_container);
        if (!is_convex(base)) throw std::invalid_argument("enclose: container must be convex");
        res = min_scaled_copy(Container(base), pts);
      }
      r.put("container", enclose_container).put("scale", res.scale).put("rotation", res.pose.rotation);
      r.put("reflected", res.pose.reflected).put("translation", res.pose.translation).put("contacts", res.contacts.size());
      scene.begin_layer("target");
      for (const Polygon& p : target.parts) scene.polygon(p, kShape);
      scene.begin_layer("container");
      scene.polygon(posed(base, res.pose), kCover);
    } else if (factor->parsed()) {
      const Polygon S = load_shape(factor_shape);
      CoverOptions o = factor_witness ? witness_options() : CoverOptions{};
      o.threads = threads;
      o.seed = seed;
      o.refine = factor_refine;
      if (!factor_grid.empty()) {
        std::tie(o.angles, o.offsets) = parse_grid(factor_grid);
        o.nonconvex_angles = o.angles;
        o.nonconvex_offsets = o.offsets;
      }
      const CoverReport c = factor_witness ? polygon_witness_fold(S, o, factor_shape) : one_fold_cover_factor(S, o, factor_shape);
      report_cover(r, c);
      if (const auto P = square_witness_point(c.witness.line); P && c.convex && S.size() == 4) r.put("square_witness_P", *P);
      draw_folded(scene, c.folded);
      scene.begin_layer("cover");
      scene.polygon(posed(S, c.enclosure.pose), kCover);
    } else if (bounds->parsed()) {
      const Polygon S = load_shape(bounds_shape);
      const MetricsReport m = compute_metrics(S);
      r.put("R_over_r", upper_bound_R_over_r(m)).put("crimp_D_over_2pi_r", m.D() / (2.0 * kPi * m.r()));
      r.put("kappa", kappa()).put("kappa_R_over_r", kappa() * m.R() / m.r());
      r.put("jung_sqrt3_over_2pi_R_over_r", std::sqrt(3.0) / (2.0 * kPi) * m.R() / m.r());
      if (is_convex(S)) {
        const ConvexLowerBound b = convex_lower_bound(S);
        r.put("convex_lower_bound", b.value).put("t1", b.t1).put("t2", b.t2).put("t2_image", b.t2_image);
        r.put("inscribed_radius", b.inscribed_radius);
        const FoldedState f = single_fold(S, b.fold_line, FoldMask::all(b.folded_side));
        draw_folded(scene, f);
      }
      const SimpleLowerBound crimp = simple_lower_bound(m);
      scene.begin_layer("crimp");
      scene.circle({crimp.incircle.center, crimp.crimp_radius}, kGuide);
      scene.circle(crimp.incircle, kCover);
    } else if (verify_limacon->parsed()) {
      const LimaconVerification v = verify_limacon_one_fold(v_phi, v_trials, seed, 1440, threads);
      r.put("phi", v.phi).put("trials", v.trials).put("seed", v.seed).put("violations", v.violations);
      r.put("max_violation", v.max_violation).put("near_trials", v.near_trials).put("far_trials", v.far_trials);
      r.put("selective_trials", v.selective_trials).put("rotation_poses", v.rotation_poses);
      scene.polygon(build_S_phi(v_phi).boundary, kShape);
      scene.line(v.worst_line, kGuide);
    } else if (verify_bumps->parsed()) {
      const BumpsVerification v = verify_bumps_cover(v_d, v_e, v_trials, seed, 1440, threads);
      r.put("d", v.d).put("e", v.e).put("trials", v.trials).put("seed", v.seed).put("violations", v.violations);
      r.put("max_violation", v.max_violation).put("composite_trials", v.composite_trials);
      r.put("stretch_failures", v.stretch_failures).put("max_stretch", v.max_stretch);
      scene.polygon(build_bumps(v_d, v_e).boundary, kShape);
    } else if (verify_all->parsed()) {
      acceptance::SuiteConfig config;
      config.tol = tol;
      config.threads = threads;
      config.seed = seed;
      config.limacon_trials = limacon_trials;
      config.bumps_trials = bumps_trials;
      if (!all_grid.empty()) std::tie(config.angles, config.offsets) = parse_grid(all_grid);
      std::string lines;
      int failed = 0;
      acceptance::run_suites(suite_names, config, [&](const acceptance::CheckResult& c) {
        std::cerr << acceptance::format_result(c, true) << std::endl;
        lines += acceptance::format_result(c) + "\n";
        failed += c.passed ? 0 : 1;
      });
      lines += "failed=" + std::to_string(failed) + "\n";
      std::cout << lines;
      if (!report_path.empty()) write_text(report_path, lines);
      return failed == 0 ? 0 : 1;
    }
    emit(r, report_path);
    if (!svg_path.empty()) write_text(svg_path, scene.render());
  } catch (const CLI::Error& err) {
    return app.exit(err);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
  return 0;
}
