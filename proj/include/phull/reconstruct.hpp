#pragma once

// Smallest H-polyhedron containing two planar H-polyhedra.
//
// Both inputs are decomposed into points and rays. All points fit strictly
// inside the square (-s, s)^2; every point is also pushed along every ray far
// enough to leave that square. A Graham scan over the resulting finite set then
// visits the hull edges in order, and an edge becomes an output inequality only
// when the square witnesses it: one of its endpoints, or some point lying on
// it, is an original point. Edges joining two translated points with nothing
// original between them are artefacts of the finite translation and are
// dropped.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "phull/decompose.hpp"
#include "phull/hpoly.hpp"

namespace phull {

struct HullOptions {
  /// Inputs are already sorted by orientation (for instance, earlier hull output).
  bool assume_sorted = false;
  /// Skip the on-edge witness search when the edge cannot meet the square.
  bool skip_inner_loop = true;
};

/// Half-width of a square strictly containing every point.
inline Rational box_size(const std::vector<Point>& points) {
  if (points.empty()) throw contract_error("box_size: no points");
  Rational m = 0;
  for (const Point& p : points) {
    if (abs(p.x) > m) m = abs(p.x);
    if (abs(p.y) > m) m = abs(p.y);
  }
  return m + 1;
}

/// Translation factor giving d a Chebyshev length of exactly 4 s.
inline Rational ray_scale(const Dir& d, const Rational& s) {
  const Integer len = abs(d.dx()) > abs(d.dy()) ? Integer(abs(d.dx())) : Integer(abs(d.dy()));
  return Rational(4 * s / len);
}

/// The points plus every point moved along every ray out of the square.
inline std::vector<Point> translate(const std::vector<Point>& points, const std::vector<Dir>& rays,
                                    const Rational& s) {
  std::vector<Point> q = points;
  q.reserve(points.size() * (rays.size() + 1));
  for (const Dir& r : rays) {
    const Rational mu = ray_scale(r, s);
    Rational ox = mu * r.dx();
    Rational oy = mu * r.dy();
    for (const Point& p : points) q.emplace_back(p.x + ox, p.y + oy);
  }
  sort_unique(q);
  return q;
}

inline Point centroid(const std::vector<Point>& q) {
  if (q.size() < 2) throw contract_error("centroid: fewer than two points");
  Rational sx = 0, sy = 0;
  for (const Point& p : q) {
    sx += p.x;
    sy += p.y;
  }
  const Rational n(static_cast<unsigned long>(q.size()));
  return Point(sx / n, sy / n);
}

/// Points sorted counter-clockwise around the pivot; the pivot itself is dropped.
inline std::vector<Point> sort_ccw(const std::vector<Point>& q, const Point& pivot) {
  // Offsets from the pivot, all scaled by one positive common denominator so
  // the comparisons run on integers; scaling keeps angles and distance order.
  Integer denom = 1;
  for (const Point& p : q) {
    if (p == pivot) continue;
    Rational dx = p.x - pivot.x;
    Rational dy = p.y - pivot.y;
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), dx.get_den_mpz_t());
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), dy.get_den_mpz_t());
  }
  struct Entry {
    const Point* p;
    Integer dx, dy;
  };
  std::vector<Entry> entries;
  entries.reserve(q.size());
  for (const Point& p : q) {
    if (p == pivot) continue;
    Rational dx = (p.x - pivot.x) * denom;
    Rational dy = (p.y - pivot.y) * denom;
    entries.push_back({&p, dx.get_num(), dy.get_num()});
  }
  if (entries.size() < 2) throw contract_error("sort_ccw: fewer than two points besides the pivot");
  std::sort(entries.begin(), entries.end(), [](const Entry& u, const Entry& v) {
    const std::strong_ordering by_angle = angle_compare(u.dx, u.dy, v.dx, v.dy);
    if (by_angle != 0) return by_angle < 0;
    Integer du = u.dx * u.dx + u.dy * u.dy;
    Integer dv = v.dx * v.dx + v.dy * v.dy;
    return du < dv;
  });
  std::vector<Point> out;
  out.reserve(entries.size());
  for (const Entry& e : entries) out.push_back(*e.p);
  return out;
}

/// Ascending indices of the hull vertices of a counter-clockwise sorted
/// sequence. Collinear points are never vertices; an entirely collinear
/// sequence yields its two extreme points.
inline std::vector<std::size_t> scan(const std::vector<Point>& seq, OpCounters* counters = nullptr) {
  const std::size_t n = seq.size();
  if (n < 2) throw contract_error("scan: fewer than two points");

  bool collinear = true;
  for (std::size_t i = 2; i < n && collinear; ++i) collinear = orient(seq[0], seq[1], seq[i]) == 0;
  if (collinear) {
    const auto [lo, hi] = std::minmax_element(seq.begin(), seq.end());
    std::vector<std::size_t> k{static_cast<std::size_t>(lo - seq.begin()),
                               static_cast<std::size_t>(hi - seq.begin())};
    std::sort(k.begin(), k.end());
    return k;
  }

  // The lowest point (then leftmost) is always a vertex; start there.
  std::size_t start = 0;
  for (std::size_t i = 1; i < n; ++i) {
    const int c = cmp(seq[i].y, seq[start].y);
    if (c < 0 || (c == 0 && seq[i].x < seq[start].x)) start = i;
  }

  std::vector<std::size_t> stack;
  stack.reserve(n);
  stack.push_back(start);
  for (std::size_t step = 1; step <= n; ++step) {
    const std::size_t idx = (start + step) % n;
    while (stack.size() >= 2 && orient(seq[stack[stack.size() - 2]], seq[stack.back()], seq[idx]) <= 0) {
      stack.pop_back();
      if (counters) ++counters->scan_steps;
    }
    if (step < n) stack.push_back(idx);
    if (counters) ++counters->scan_steps;
  }
  std::sort(stack.begin(), stack.end());
  return stack;
}

namespace detail {

// True when the closed segment p1-p2 cannot meet the open square (-s, s)^2.
// Separating axes: x, y and the segment normal.
inline bool segment_misses_box(const Point& p1, const Point& p2, const Rational& s) {
  const Rational neg = -s;
  if ((p1.x >= s && p2.x >= s) || (p1.x <= neg && p2.x <= neg)) return true;
  if ((p1.y >= s && p2.y >= s) || (p1.y <= neg && p2.y <= neg)) return true;
  Rational a = p2.y - p1.y;
  Rational b = p1.x - p2.x;
  Rational c = a * p1.x + b * p1.y;
  // Range of a*x + b*y over the square is c0 +- s(|a| + |b|) with c0 = 0.
  Rational reach = s * (abs(a) + abs(b));
  return c >= reach || c <= -reach;
}

inline Ineq axis_cap(const Point& from, const Point& to) {
  if (from.y == to.y) {
    const int sg = cmp(from.x, to.x) > 0 ? 1 : -1;
    return Ineq(sg, 0, sg * from.x);
  }
  const int sg = cmp(from.y, to.y) > 0 ? 1 : -1;
  return Ineq(0, sg, sg * from.y);
}

inline HPoly finish(std::vector<Ineq> out) {
  theta_sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return HPoly(std::move(out));
}

}  // namespace detail

/// Smallest H-polyhedron containing [[e1]] and [[e2]]. Each input must be
/// satisfiable and non-redundant, or empty (the whole plane). The result is
/// sorted by orientation, starting with the smallest angle.
inline HPoly hull(const HPoly& e1, const HPoly& e2, const HullOptions& opts = {},
                  OpCounters* counters = nullptr) {
  if (e1.empty() || e2.empty()) return {};

  VRep v1 = extreme(e1, opts.assume_sorted, counters);
  VRep v2 = extreme(e2, opts.assume_sorted, counters);

  std::vector<Point> points = std::move(v1.points);
  points.insert(points.end(), v2.points.begin(), v2.points.end());
  sort_unique(points);
  std::vector<Dir> rays = std::move(v1.rays);
  rays.insert(rays.end(), v2.rays.begin(), v2.rays.end());
  sort_unique(rays);

  const Rational s = box_size(points);
  const std::vector<Point> q = translate(points, rays, s);
  if (counters) counters->translated_points += q.size();

  if (q.size() == 1) {
    const Point& p = q.front();
    return detail::finish({Ineq(1, 0, p.x), Ineq(0, 1, p.y), Ineq(-1, 0, -p.x), Ineq(0, -1, -p.y)});
  }

  const Point pivot = centroid(q);
  const std::vector<Point> seq = sort_ccw(q, pivot);
  const std::vector<std::size_t> k = scan(seq, counters);
  const std::size_t n = seq.size();
  const std::size_t m = k.size();

  std::vector<Ineq> out;
  for (std::size_t i = 0; i < m; ++i) {
    const Point& p1 = seq[k[i]];
    const Point& p2 = seq[k[(i + 1) % m]];
    Ineq e = connect(p1, p2);
    if (counters) ++counters->edges;

    bool add = in_box(s, p1) || in_box(s, p2) || m == 2;
    if (!add && opts.skip_inner_loop && detail::segment_misses_box(p1, p2, s)) {
      if (counters) ++counters->inner_loops_skipped;
    } else {
      for (std::size_t j = (k[i] + 1) % n; !add && j != k[(i + 1) % m]; j = (j + 1) % n) {
        add = saturates(seq[j], e) && in_box(s, seq[j]);
        if (counters) ++counters->inner_loop_steps;
      }
    }
    if (m == 2 && in_box(s, p1)) out.push_back(detail::axis_cap(p1, p2));
    if (add) out.push_back(std::move(e));
  }
  return detail::finish(std::move(out));
}

}  // namespace phull
