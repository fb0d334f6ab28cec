#include "foldcover/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "foldcover/shapes.hpp"

namespace foldcover {

namespace {

using nlohmann::json;

double param(const std::map<std::string, double>& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw std::invalid_argument("missing shape parameter: " + key);
  return it->second;
}

int int_param(const std::map<std::string, double>& params, const std::string& key, int fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : static_cast<int>(std::lround(it->second));
}

json points_json(const std::vector<Point>& pts) {
  json out = json::array();
  for (const Point& p : pts) out.push_back({p.x, p.y});
  return out;
}

std::vector<Point> points_from(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("vertex list must be an array");
  std::vector<Point> out;
  for (const json& v : j) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
      throw std::invalid_argument("vertex must be an [x, y] pair");
    out.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

ShapeFile generate_shape(const std::string& kind, const std::map<std::string, double>& params) {
  ShapeFile out;
  out.kind = kind;
  out.params = params;
  if (kind == "square") {
    out.polygon = unit_square();
  } else if (kind == "equilateral-triangle") {
    out.polygon = side2_triangle();
  } else if (kind == "disk") {
    out.polygon = regular_polygon(int_param(params, "n", 720));
  } else if (kind == "limacon") {
    out.polygon = build_S_phi(param(params, "phi"), int_param(params, "resolution", 1440)).boundary;
  } else if (kind == "bumps") {
    out.polygon = build_bumps(param(params, "d"), param(params, "e"), int_param(params, "resolution", 1440)).boundary;
  } else if (kind == "l-shape") {
    out.polygon = l_shape();
  } else if (kind == "rectangle") {
    out.polygon = rectangle(param(params, "w"), param(params, "h"));
  } else if (kind == "regular") {
    out.polygon = regular_polygon(int_param(params, "n", 0));
  } else if (kind == "random-convex") {
    out.polygon = random_convex_polygon(int_param(params, "n", 10), static_cast<std::uint64_t>(param(params, "seed")));
  } else {
    throw std::invalid_argument("unknown shape kind: " + kind);
  }
  return out;
}

std::string to_json(const ShapeFile& shape) {
  json j;
  j["kind"] = shape.kind;
  j["params"] = json::object();
  for (const auto& [k, v] : shape.params) j["params"][k] = v;
  j["vertices"] = points_json(shape.polygon.vertices);
  return j.dump(1) + "\n";
}

ShapeFile shape_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw std::invalid_argument("shape file needs a string field 'kind'");
  std::map<std::string, double> params;
  if (j.contains("params")) {
    for (const auto& [k, v] : j["params"].items()) {
      if (!v.is_number()) throw std::invalid_argument("parameter " + k + " must be a number");
      params[k] = v.get<double>();
    }
  }
  const std::string kind = j["kind"].get<std::string>();
  if (j.contains("vertices")) {
    ShapeFile out;
    out.kind = kind;
    out.params = params;
    out.polygon = make_polygon(points_from(j["vertices"]));
    return out;
  }
  if (kind == "polygon") throw std::invalid_argument("polygon shape file needs 'vertices'");
  return generate_shape(kind, params);
}

std::string to_json(const FoldedState& folded) {
  json j;
  j["kind"] = "folded";
  j["fold_line"] = {{"angle", folded.fold_line.angle()}, {"offset", folded.fold_line.offset()}};
  j["crossed"] = folded.crossed;
  j["parts"] = json::array();
  for (std::size_t i = 0; i < folded.parts.parts.size(); ++i) {
    const PartProvenance& p = folded.provenance[i];
    j["parts"].push_back({{"side", p.side == Side::Positive ? "positive" : "negative"},
                          {"component", p.component},
                          {"reflected", p.reflected},
                          {"vertices", points_json(folded.parts.parts[i].vertices)}});
  }
  return j.dump(1) + "\n";
}

PolyShape parts_from_json(const std::string& text) {
  const json j = parse(text);
  if (!is_folded_json(text) || !j.contains("parts")) throw std::invalid_argument("not a folded-state file");
  PolyShape out;
  for (const json& part : j["parts"]) out.parts.push_back(make_polygon(points_from(part.at("vertices"))));
  return out;
}

bool is_folded_json(const std::string& text) {
  const json j = parse(text);
  return j.is_object() && j.value("kind", "") == "folded";
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace foldcover
