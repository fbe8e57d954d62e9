#pragma once

// Illustrative SVG rendering: two inputs, the hull outline and the box.
// Unbounded regions are clipped to a square viewport three times the box.

#include <sstream>
#include <string>
#include <vector>

#include "phull/reconstruct.hpp"

namespace phull {

namespace detail {

// Sutherland-Hodgman against one halfplane, exact.
inline std::vector<Point> clip(const std::vector<Point>& poly, const Ineq& e) {
  std::vector<Point> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % n];
    const Rational fp = e.eval(p) - e.c();
    const Rational fq = e.eval(q) - e.c();
    if (fp <= 0) out.push_back(p);
    if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0)) {
      const Rational t = fp / (fp - fq);
      out.emplace_back(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y));
    }
  }
  return out;
}

inline std::vector<Point> clip_to_view(const HPoly& poly, const Rational& half) {
  std::vector<Point> region{{half, -half}, {half, half}, {-half, half}, {-half, -half}};
  for (const Ineq& e : poly) {
    region = clip(region, e);
    if (region.empty()) break;
  }
  return region;
}

inline std::string svg_path(const std::vector<Point>& pts) {
  std::ostringstream os;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    os << (i ? " L " : "M ") << pts[i].x.get_d() << ' ' << -pts[i].y.get_d();
  }
  if (!pts.empty()) os << " Z";
  return os.str();
}

}  // namespace detail

/// Box half-width used by hull for these inputs, or 1 when either is the universe.
inline Rational hull_box_size(const HPoly& e1, const HPoly& e2) {
  if (e1.empty() || e2.empty()) return 1;
  std::vector<Point> pts = extreme(e1).points;
  const std::vector<Point> p2 = extreme(e2).points;
  pts.insert(pts.end(), p2.begin(), p2.end());
  return box_size(pts);
}

inline std::string render_svg(const HPoly& e1, const HPoly& e2, const HPoly& result, const Rational& s) {
  const Rational half = 3 * s;
  const double h = half.get_d();
  const double stroke = h / 200.0;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << -h << ' ' << -h << ' ' << 2 * h << ' ' << 2 * h
     << "\" width=\"600\" height=\"600\">\n";
  os << "<rect x=\"" << -h << "\" y=\"" << -h << "\" width=\"" << 2 * h << "\" height=\"" << 2 * h
     << "\" fill=\"white\"/>\n";
  auto region = [&](const HPoly& p, const char* fill, const char* stroke_color, double opacity) {
    const std::vector<Point> pts = detail::clip_to_view(p, half);
    if (pts.empty()) return;
    os << "<path d=\"" << detail::svg_path(pts) << "\" fill=\"" << fill << "\" fill-opacity=\"" << opacity
       << "\" stroke=\"" << stroke_color << "\" stroke-width=\"" << stroke << "\"/>\n";
  };
  region(result, "none", "black", 0.0);
  region(e1, "#1f77b4", "#1f77b4", 0.35);
  region(e2, "#d62728", "#d62728", 0.35);
  const double sd = s.get_d();
  os << "<rect x=\"" << -sd << "\" y=\"" << -sd << "\" width=\"" << 2 * sd << "\" height=\"" << 2 * sd
     << "\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"" << 4 * stroke << "\" stroke-width=\"" << stroke
     << "\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace phull
