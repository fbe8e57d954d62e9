#pragma once

// Brute-force reference implementations. Everything here works from global
// enumeration (all pairwise crossings, all candidate supporting lines, the
// A d <= 0 filter) and never from angular neighbourhoods, so agreement with
// decompose/reconstruct is evidence rather than a restatement.

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "phull/hpoly.hpp"
#include "phull/lp.hpp"
#include "phull/normalize.hpp"

namespace phull::oracle {

/// conv(points) + cone(rays) for a normalized, non-empty system.
inline VRep vrep_naive(const HPoly& poly) {
  if (poly.empty()) throw contract_error("vrep_naive: the universe has no vertices");
  if (!is_feasible(poly)) throw contract_error("vrep_naive: unsatisfiable system");
  VRep out;
  // A feasible crossing of two non-parallel boundaries is tight at two
  // independent constraints, so the sum of their normals exposes it alone:
  // every crossing found here is a vertex.
  out.points = feasible_crossings(poly);
  out.rays = recession_rays(poly);
  if (out.points.empty()) {
    // No vertex: the polyhedron contains a line. One anchor per boundary.
    for (const Ineq& e : poly) {
      const Integer norm2 = e.a() * e.a() + e.b() * e.b();
      Point p(e.a() * e.c() / norm2, e.b() * e.c() / norm2);
      if (poly.contains(p)) out.points.push_back(std::move(p));
    }
    sort_unique(out.points);
  }
  return out;
}

/// Smallest system containing conv(points) + cone(rays), by testing every
/// candidate supporting line: through two generator points, through a point
/// parallel to a ray, and axis-parallel through a point (the latter close off
/// zero- and one-dimensional results).
inline HPoly vrep_to_hpoly(const std::vector<Point>& points, const std::vector<Dir>& rays) {
  if (points.empty()) throw contract_error("vrep_to_hpoly: no points");
  std::vector<Ineq> kept;
  std::vector<Rational> proj(points.size());
  for (std::size_t pi = 0; pi < points.size(); ++pi) {
    const Point& p = points[pi];
    std::vector<Dir> normals{Dir(1, 0), Dir(0, 1)};
    for (std::size_t qi = pi + 1; qi < points.size(); ++qi) {
      normals.push_back(Dir::from_rational(points[qi].y - p.y, p.x - points[qi].x));
    }
    for (const Dir& r : rays) normals.emplace_back(r.dy(), -r.dx());
    for (const Dir& n : normals) {
      const Rational at_p = n.dx() * p.x + n.dy() * p.y;
      bool is_max = true, is_min = true;
      for (std::size_t qi = 0; qi < points.size() && (is_max || is_min); ++qi) {
        proj[qi] = n.dx() * points[qi].x + n.dy() * points[qi].y;
        if (proj[qi] > at_p) is_max = false;
        if (proj[qi] < at_p) is_min = false;
      }
      for (const Dir& r : rays) {
        const int s = sgn(Integer(n.dx() * r.dx() + n.dy() * r.dy()));
        if (s > 0) is_max = false;
        if (s < 0) is_min = false;
      }
      if (is_max) kept.emplace_back(n.dx(), n.dy(), at_p);
      if (is_min) kept.emplace_back(-n.dx(), -n.dy(), -at_p);
    }
  }
  return normalize(HPoly(std::move(kept)));
}

/// Smallest system containing [[e1]] and [[e2]]; inputs normalized or empty.
inline HPoly hull_naive(const HPoly& e1, const HPoly& e2) {
  if (e1.empty() || e2.empty()) return {};
  VRep v1 = vrep_naive(e1);
  const VRep v2 = vrep_naive(e2);
  v1.points.insert(v1.points.end(), v2.points.begin(), v2.points.end());
  v1.rays.insert(v1.rays.end(), v2.rays.begin(), v2.rays.end());
  sort_unique(v1.points);
  sort_unique(v1.rays);
  return vrep_to_hpoly(v1.points, v1.rays);
}

/// [[e1]] is contained in [[e2]].
inline bool poly_includes(const HPoly& e2, const HPoly& e1) {
  for (const Ineq& e : e2) {
    const LpResult r = lp_max(e1, e.a(), e.b());
    if (r.unbounded() || (r.finite() && r.value > e.c())) return false;
  }
  return true;
}

inline bool poly_equal(const HPoly& e1, const HPoly& e2) { return poly_includes(e1, e2) && poly_includes(e2, e1); }

enum class Shape { polytope, wedge, strip, halfplane, point, line, random };

inline constexpr Shape kAllShapes[] = {Shape::polytope, Shape::wedge, Shape::strip, Shape::halfplane,
                                       Shape::point,    Shape::line,  Shape::random};

inline std::string_view shape_name(Shape s) {
  switch (s) {
    case Shape::polytope: return "polytope";
    case Shape::wedge: return "wedge";
    case Shape::strip: return "strip";
    case Shape::halfplane: return "halfplane";
    case Shape::point: return "point";
    case Shape::line: return "line";
    case Shape::random: return "random";
  }
  return "?";
}

inline std::optional<Shape> parse_shape(std::string_view name) {
  for (Shape s : kAllShapes) {
    if (shape_name(s) == name) return s;
  }
  return std::nullopt;
}

namespace detail {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  // Uniform on [lo, hi]; the modulo bias is irrelevant at these ranges.
  long range(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  Dir normal(long bound) {
    for (;;) {
      const long a = range(-bound, bound), b = range(-bound, bound);
      if (a != 0 || b != 0) return Dir(a, b);
    }
  }

  Point point(long bound) { return Point(range(-bound, bound), range(-bound, bound)); }

 private:
  std::mt19937_64 rng_;
};

inline Rational dot(const Dir& n, const Point& p) { return n.dx() * p.x + n.dy() * p.y; }

inline Ineq through(const Dir& n, const Point& p, long slack = 0) { return Ineq(n.dx(), n.dy(), dot(n, p) + slack); }

inline bool parallel(const Dir& u, const Dir& v) { return u.dx() * v.dy() == u.dy() * v.dx(); }

}  // namespace detail

/// Deterministic random normalized instance. n is the number of halfplanes
/// drawn before normalization for the polytope, wedge and random families;
/// the other families have fixed sizes. n = 0 always gives the universe.
/// The line family covers every one-dimensional kind: lines, rays and segments.
inline HPoly gen_instance(std::uint64_t seed, std::size_t n, long coeff_bound, Shape shape) {
  if (n == 0) return {};
  if (coeff_bound < 1) throw contract_error("gen_instance: coefficient bound must be positive");
  detail::Draw draw(seed);
  const long k = coeff_bound;
  const Point center = draw.point(k);
  std::vector<Ineq> out;

  switch (shape) {
    case Shape::polytope: {
      for (std::size_t i = 0; i < std::max<std::size_t>(n, 3); ++i) {
        out.push_back(detail::through(draw.normal(k), center, draw.range(1, k)));
      }
      while (!recession_rays(HPoly(out)).empty()) {
        out.push_back(detail::through(draw.normal(k), center, draw.range(1, k)));
      }
      break;
    }
    case Shape::wedge: {
      // All normals strictly on one side of a recession direction w.
      const Dir w = draw.normal(k);
      bool two_directions = false;
      while (out.size() < std::max<std::size_t>(n, 2) || !two_directions) {
        Dir nrm = draw.normal(k);
        const Integer along = nrm.dx() * w.dx() + nrm.dy() * w.dy();
        if (along == 0) continue;
        if (along > 0) nrm = -nrm;
        for (const Ineq& e : out) {
          if (!detail::parallel(Dir(e.a(), e.b()), nrm)) two_directions = true;
        }
        out.push_back(detail::through(nrm, center, draw.range(0, k)));
      }
      break;
    }
    case Shape::strip: {
      const Dir nrm = draw.normal(k);
      out.push_back(detail::through(nrm, center, draw.range(1, k)));
      out.push_back(detail::through(-nrm, center, draw.range(1, k)));
      break;
    }
    case Shape::halfplane:
      out.push_back(detail::through(draw.normal(k), center, draw.range(-k, k)));
      break;
    case Shape::point: {
      const Dir n1 = draw.normal(k);
      Dir n2 = draw.normal(k);
      while (detail::parallel(n1, n2)) n2 = draw.normal(k);
      out.push_back(detail::through(n1, center));
      out.push_back(detail::through(n2, center));
      if (draw.range(0, 1) == 0) {
        const long l1 = draw.range(1, 3), l2 = draw.range(1, 3);
        out.push_back(detail::through(Dir(-(l1 * n1.dx() + l2 * n2.dx()), -(l1 * n1.dy() + l2 * n2.dy())), center));
      } else {
        out.push_back(detail::through(-n1, center));
        out.push_back(detail::through(-n2, center));
      }
      break;
    }
    case Shape::line: {
      const Dir nrm = draw.normal(k);
      out.push_back(detail::through(nrm, center));
      out.push_back(detail::through(-nrm, center));
      const Dir along(-nrm.dy(), nrm.dx());
      const long kind = draw.range(0, 2);  // 0 line, 1 ray, 2 segment
      if (kind >= 1) {
        Dir cap = draw.normal(k);
        Integer s = cap.dx() * along.dx() + cap.dy() * along.dy();
        while (s == 0) {
          cap = draw.normal(k);
          s = cap.dx() * along.dx() + cap.dy() * along.dy();
        }
        if (s > 0) cap = -cap;
        out.push_back(detail::through(cap, center));
        if (kind == 2) {
          const long t = draw.range(1, 3);
          const Point far(center.x + t * along.dx(), center.y + t * along.dy());
          Dir cap2 = draw.normal(k);
          Integer s2 = cap2.dx() * along.dx() + cap2.dy() * along.dy();
          while (s2 == 0) {
            cap2 = draw.normal(k);
            s2 = cap2.dx() * along.dx() + cap2.dy() * along.dy();
          }
          if (s2 < 0) cap2 = -cap2;
          out.push_back(detail::through(cap2, far));
        }
      }
      break;
    }
    case Shape::random: {
      for (;;) {
        out.clear();
        for (std::size_t i = 0; i < n; ++i) {
          const Dir nrm = draw.normal(k);
          out.emplace_back(nrm.dx(), nrm.dy(), draw.range(-k, k));
        }
        if (is_feasible(HPoly(out))) break;
      }
      break;
    }
  }
  return normalize(HPoly(std::move(out)));
}

/// Convex polygon with integer vertices and n edges (n rounded down to a
/// multiple of four, at least four), translated by shift, as a normalized
/// system. Edge directions are the shortest primitive vectors of the first
/// quadrant and their rotations, so the coordinates stay small.
inline HPoly gen_convex_polygon(std::size_t n, const Point& shift = Point(0, 0)) {
  const std::size_t quarter = std::max<std::size_t>(n / 4, 1);
  std::vector<Dir> dirs;
  for (long l1 = 1; dirs.size() < quarter; ++l1) {
    for (long dx = l1; dx >= 1 && dirs.size() < quarter; --dx) {
      const long dy = l1 - dx;
      if (std::gcd(dx, dy) == 1) dirs.emplace_back(dx, dy);
    }
  }
  std::sort(dirs.begin(), dirs.end(),
            [](const Dir& u, const Dir& v) { return angle_compare(u.dx(), u.dy(), v.dx(), v.dy()) < 0; });
  std::vector<Point> vertices;
  Point cur = shift;
  for (int rot = 0; rot < 4; ++rot) {
    for (const Dir& d : dirs) {
      vertices.push_back(cur);
      Integer dx = d.dx(), dy = d.dy();
      for (int k = 0; k < rot; ++k) {
        Integer t = -dy;
        dy = dx;
        dx = t;
      }
      cur = Point(cur.x + dx, cur.y + dy);
    }
  }
  std::vector<Ineq> out;
  out.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) out.push_back(connect(vertices[i], vertices[(i + 1) % vertices.size()]));
  theta_sort(out);
  return HPoly(std::move(out));
}

}  // namespace phull::oracle
