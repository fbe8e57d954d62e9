#pragma once

// H-representation to point-and-ray representation for planar polyhedra.
//
// After sorting by orientation, each halfplane only needs to be compared with
// its two angular neighbours. A gap of less than pi to the successor means the
// two boundaries meet in a vertex; a gap of pi or more means the boundary of
// the current halfplane recedes to infinity on that side and contributes a ray.

#include <cstddef>
#include <optional>
#include <vector>

#include "phull/hpoly.hpp"

namespace phull {

/// Work counters shared by decomposition and reconstruction.
struct OpCounters {
  std::size_t extreme_sorts = 0;
  std::size_t extreme_steps = 0;
  std::size_t translated_points = 0;
  std::size_t scan_steps = 0;
  std::size_t edges = 0;
  std::size_t inner_loop_steps = 0;
  std::size_t inner_loops_skipped = 0;
};

/// Foot of the perpendicular from the origin onto the boundary of e.
inline Point boundary_point(const Ineq& e) {
  const Integer norm2 = e.a() * e.a() + e.b() * e.b();
  Rational x = e.a() * e.c() / norm2;
  Rational y = e.b() * e.c() / norm2;
  return Point(std::move(x), std::move(y));
}

namespace detail {

// Cheap local checks on a sorted system. They catch repeated orientations,
// contradictory facing pairs and boundary chains that run backwards, which
// together cover most malformed inputs; full validation lives in normalize.
inline void check_sorted_system(const std::vector<Ineq>& e) {
  const std::size_t n = e.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (theta_compare(e[i], e[i + 1]) >= 0) {
      throw contract_error(theta_equal(e[i], e[i + 1])
                               ? "extreme: two inequalities share an orientation"
                               : "extreme: inequalities are not sorted by orientation");
    }
  }
  for (std::size_t i = 0; n > 1 && i < n; ++i) {
    const Ineq& f = e[i];
    const Ineq& g = e[(i + 1) % n];
    if (f.a() == -g.a() && f.b() == -g.b() && f.c() + g.c() < 0) {
      throw contract_error("extreme: facing halfplanes do not overlap");
    }
  }
}

}  // namespace detail

/// Decomposes a satisfiable, non-redundant system into points and rays with
/// [[E]] = conv(points) + cone(rays). With assume_sorted the input must already
/// be strictly sorted by orientation and no sort is performed.
inline VRep extreme(const HPoly& poly, bool assume_sorted = false, OpCounters* counters = nullptr) {
  if (poly.empty()) throw contract_error("extreme: empty system (the universe has no vertices)");
  std::vector<Ineq> e = poly.ineqs();
  if (!assume_sorted) {
    theta_sort(e);
    if (counters) ++counters->extreme_sorts;
  }
  detail::check_sorted_system(e);

  const std::size_t n = e.size();
  VRep out;
  if (n == 1) out.rays.emplace_back(-e[0].a(), -e[0].b());

  // degenerate[i]: the gap from e[i] to e[i + 1] is at least pi.
  std::vector<char> degenerate(n);
  for (std::size_t i = 0; i < n; ++i) degenerate[i] = n == 1 || gap_ge_pi(e[i], e[(i + 1) % n]);

  // vertex[i]: boundary crossing of e[i] and e[i + 1] when it is a vertex.
  std::vector<std::optional<Point>> vertex(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Ineq& cur = e[i];
    const bool d_pre = degenerate[(i + n - 1) % n];
    const bool d_post = degenerate[i];
    if (d_pre) out.rays.emplace_back(cur.b(), -cur.a());
    if (d_post) {
      out.rays.emplace_back(-cur.b(), cur.a());
    } else {
      vertex[i] = intersect(cur, e[(i + 1) % n]);
      out.points.push_back(*vertex[i]);
    }
    if (d_pre && d_post) out.points.push_back(boundary_point(cur));
    if (counters) ++counters->extreme_steps;
  }

  // Along each boundary the vertices must advance counter-clockwise.
  for (std::size_t i = 0; n > 2 && i < n; ++i) {
    const std::optional<Point>& in = vertex[(i + n - 1) % n];
    const std::optional<Point>& out_pt = vertex[i];
    if (!in || !out_pt) continue;
    Rational adv = -e[i].b() * (out_pt->x - in->x) + e[i].a() * (out_pt->y - in->y);
    if (adv < 0) throw contract_error("extreme: system is unsatisfiable or redundant");
  }

  sort_unique(out.points);
  sort_unique(out.rays);
  return out;
}

}  // namespace phull
