#pragma once

#include <algorithm>
#include <cstdio>
#include <string>

#include "hyperfact/io.hpp"
#include "hyperfact/tropical_factor.hpp"

namespace hyperfact {

/// {"degree", "points": [[i, h]], "vertices": [[i, h]], "slopes", "zero_mult"}.
/// Heights and slopes are exact rationals written as strings; "+inf" marks a Zero coefficient.
inline Json to_json(const NewtonPolygon& poly) {
  Json points = Json::array();
  for (const auto& [i, h] : poly.points)
    points.push_back(Json::array({i, h ? Json(to_string(*h)) : Json("+inf")}));
  Json vertices = Json::array();
  for (const NewtonVertex& v : poly.vertices) vertices.push_back(Json::array({v.index, to_string(v.height)}));
  Json slopes = Json::array();
  for (const Rational& s : poly.slopes) slopes.push_back(to_string(s));
  Json out;
  out["degree"] = poly.degree;
  out["points"] = std::move(points);
  out["vertices"] = std::move(vertices);
  out["slopes"] = std::move(slopes);
  out["zero_mult"] = poly.zero_root_multiplicity;
  return out;
}

namespace detail {

inline std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace detail

/// Points (i, -log c_i) with the lower hull drawn through the vertices. Points
/// at height +∞ are listed in the right margin instead of plotted.
inline std::string render_newton_svg(const NewtonPolygon& poly) {
  constexpr double kScale = 60.0;
  constexpr double kPad = 40.0;
  constexpr double kMargin = 140.0;
  double lo = 0.0;
  double hi = 0.0;
  bool first = true;
  for (const auto& [i, h] : poly.points) {
    if (!h) continue;
    const double y = h->convert_to<double>();
    lo = first ? y : std::min(lo, y);
    hi = first ? y : std::max(hi, y);
    first = false;
  }
  const double width = static_cast<double>(poly.degree) * kScale + 2 * kPad + kMargin;
  const double height = std::max(hi - lo, 1.0) * kScale + 2 * kPad;
  auto sx = [&](std::size_t i) { return kPad + static_cast<double>(i) * kScale; };
  auto sy = [&](const Rational& h) { return kPad + (hi - h.convert_to<double>()) * kScale; };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fixed(width) + "\" height=\"" +
                    detail::fixed(height) + "\" viewBox=\"0 0 " + detail::fixed(width) + " " +
                    detail::fixed(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (poly.vertices.size() >= 2) {
    svg += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    for (std::size_t v = 0; v < poly.vertices.size(); ++v) {
      if (v) svg += " ";
      svg += detail::fixed(sx(poly.vertices[v].index)) + "," + detail::fixed(sy(poly.vertices[v].height));
    }
    svg += "\"/>\n";
  }
  double margin_y = kPad;
  for (const auto& [i, h] : poly.points) {
    if (h) {
      svg += "<circle cx=\"" + detail::fixed(sx(i)) + "\" cy=\"" + detail::fixed(sy(*h)) +
             "\" r=\"4\" fill=\"steelblue\"/>\n";
      svg += "<text x=\"" + detail::fixed(sx(i) + 6) + "\" y=\"" + detail::fixed(sy(*h) - 6) +
             "\" font-size=\"12\">(" + std::to_string(i) + ", " + to_string(*h) + ")</text>\n";
    } else {
      svg += "<text x=\"" + detail::fixed(width - kMargin + 10) + "\" y=\"" + detail::fixed(margin_y) +
             "\" font-size=\"12\">i=" + std::to_string(i) + ": +inf</text>\n";
      margin_y += 16;
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace hyperfact
