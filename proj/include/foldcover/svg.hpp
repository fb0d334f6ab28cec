#pragma once

#include <string>
#include <vector>

#include "foldcover/geom.hpp"
#include "foldcover/metrics.hpp"

namespace foldcover {

struct SvgStyle {
  std::string stroke = "#000000";
  std::string fill = "none";
  double opacity = 1.0;
  double width = 1.0;  // in output pixels
};

/// Layered drawing in world coordinates, y up. Output is a function of the
/// added elements only, so equal scenes give equal bytes.
class SvgScene {
 public:
  void begin_layer(const std::string& id);
  void polygon(const Polygon& p, const SvgStyle& style);
  void polyline(const std::vector<Point>& pts, const SvgStyle& style);
  void circle(const Circle& c, const SvgStyle& style);
  void segment(const Point& a, const Point& b, const SvgStyle& style);
  /// A dashed line drawn across the bounds of the other elements.
  void line(const Line& l, const SvgStyle& style);

  std::string render(double pixels = 600.0) const;

 private:
  struct Element {
    enum class Kind { Polygon, Polyline, Circle, Line } kind;
    std::vector<Point> pts;
    double radius = 0.0;
    Line line;
    SvgStyle style;
  };
  struct Layer {
    std::string id;
    std::vector<Element> elements;
  };
  Layer& current();
  std::vector<Layer> layers_;
};

}  // namespace foldcover
