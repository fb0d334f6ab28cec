#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "foldcover/fold.hpp"
#include "foldcover/geom.hpp"

namespace foldcover {

/// A shape file: `kind` is one of polygon, square, equilateral-triangle,
/// disk, limacon, bumps, l-shape, rectangle, regular, random-convex. Vertices are stored for every kind so the file is
/// usable without regenerating; params record how it was generated.
struct ShapeFile {
  std::string kind = "polygon";
  std::map<std::string, double> params;
  Polygon polygon;
};

/// Builds the polygon for a kind. Recognized params: n and resolution
/// (disk), phi and resolution (limacon), d, e and resolution (bumps),
/// w and h (rectangle), n (regular), n and seed (random-convex).
/// Unknown kinds or missing params throw std::invalid_argument.
ShapeFile generate_shape(const std::string& kind, const std::map<std::string, double>& params);

std::string to_json(const ShapeFile& shape);
/// Vertices are taken from the file when present, otherwise regenerated
/// from kind and params. Malformed input throws std::invalid_argument.
ShapeFile shape_from_json(const std::string& text);

std::string to_json(const FoldedState& folded);
/// Folded-state files keep the parts only.
PolyShape parts_from_json(const std::string& text);

/// True when the document is a folded-state file rather than a shape file.
bool is_folded_json(const std::string& text);

std::string read_text(const std::filesystem::path& path);
/// Throws std::runtime_error when the file cannot be written.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace foldcover
