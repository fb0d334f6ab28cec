#include "foldcover/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace foldcover {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", std::abs(v) < 5e-7 ? 0.0 : v);
  return buf;
}

struct Box {
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
  double x1 = -x0, y1 = -x0;
  void add(const Point& p) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  bool empty() const { return x0 > x1; }
};

}  // namespace

SvgScene::Layer& SvgScene::current() {
  if (layers_.empty()) layers_.push_back({"layer0", {}});
  return layers_.back();
}

void SvgScene::begin_layer(const std::string& id) { layers_.push_back({id, {}}); }

void SvgScene::polygon(const Polygon& p, const SvgStyle& style) {
  current().elements.push_back({Element::Kind::Polygon, p.vertices, 0.0, {}, style});
}

void SvgScene::polyline(const std::vector<Point>& pts, const SvgStyle& style) {
  current().elements.push_back({Element::Kind::Polyline, pts, 0.0, {}, style});
}

void SvgScene::circle(const Circle& c, const SvgStyle& style) {
  current().elements.push_back({Element::Kind::Circle, {c.center}, c.radius, {}, style});
}

void SvgScene::segment(const Point& a, const Point& b, const SvgStyle& style) { polyline({a, b}, style); }

void SvgScene::line(const Line& l, const SvgStyle& style) {
  current().elements.push_back({Element::Kind::Line, {}, 0.0, l, style});
}

std::string SvgScene::render(double pixels) const {
  Box box;
  for (const Layer& layer : layers_)
    for (const Element& e : layer.elements) {
      if (e.kind == Element::Kind::Circle) {
        box.add(e.pts[0] - Point{e.radius, e.radius});
        box.add(e.pts[0] + Point{e.radius, e.radius});
      } else {
        for (const Point& p : e.pts) box.add(p);
      }
    }
  if (box.empty()) box = {-1, -1, 1, 1};
  const double pad = 0.05 * std::max({box.x1 - box.x0, box.y1 - box.y0, 1e-9});
  box.x0 -= pad, box.y0 -= pad, box.x1 += pad, box.y1 += pad;
  const double span = std::max(box.x1 - box.x0, box.y1 - box.y0);
  const double unit = span / pixels;

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(pixels * (box.x1 - box.x0) / span)
    << "\" height=\"" << num(pixels * (box.y1 - box.y0) / span) << "\" viewBox=\"" << num(box.x0) << ' '
    << num(-box.y1) << ' ' << num(box.x1 - box.x0) << ' ' << num(box.y1 - box.y0) << "\">\n";
  // One flip turns world y-up into SVG y-down.
  o << "<g transform=\"scale(1,-1)\">\n";
  for (const Layer& layer : layers_) {
    o << "<g id=\"" << layer.id << "\">\n";
    for (const Element& e : layer.elements) {
      const std::string style = "stroke=\"" + e.style.stroke + "\" fill=\"" + e.style.fill + "\" stroke-width=\"" +
                                num(e.style.width * unit) + "\" opacity=\"" + num(e.style.opacity) + "\"";
      switch (e.kind) {
        case Element::Kind::Polygon:
        case Element::Kind::Polyline: {
          o << (e.kind == Element::Kind::Polygon ? "<polygon" : "<polyline") << " points=\"";
          for (std::size_t i = 0; i < e.pts.size(); ++i) o << (i ? " " : "") << num(e.pts[i].x) << ',' << num(e.pts[i].y);
          o << "\" " << style << "/>\n";
          break;
        }
        case Element::Kind::Circle:
          o << "<circle cx=\"" << num(e.pts[0].x) << "\" cy=\"" << num(e.pts[0].y) << "\" r=\"" << num(e.radius)
            << "\" " << style << "/>\n";
          break;
        case Element::Kind::Line: {
          const Point mid{(box.x0 + box.x1) / 2, (box.y0 + box.y1) / 2};
          const Point foot = mid - e.line.normal() * e.line.signed_distance(mid);
          const Point a = foot + e.line.direction() * span, b = foot - e.line.direction() * span;
          o << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(b.y)
            << "\" " << style << " stroke-dasharray=\"" << num(6 * unit) << "\"/>\n";
          break;
        }
      }
    }
    o << "</g>\n";
  }
  o << "</g>\n</svg>\n";
  return o.str();
}

}  // namespace foldcover
