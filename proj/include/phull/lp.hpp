#pragma once

// Exact two-variable linear programming by enumeration. Deliberately naive:
// the optimum of a pointed polyhedron sits on some pairwise boundary crossing,
// unboundedness is decided from the recession cone {d : A d <= 0}, and systems
// whose normals are all parallel reduce to one dimension. Nothing here looks at
// angular order.

#include <optional>
#include <vector>

#include "phull/hpoly.hpp"

namespace phull::oracle {

enum class LpStatus { finite, unbounded, infeasible };

struct LpResult {
  LpStatus status;
  Rational value;  // meaningful only when status == finite

  bool finite() const { return status == LpStatus::finite; }
  bool unbounded() const { return status == LpStatus::unbounded; }
  bool infeasible() const { return status == LpStatus::infeasible; }

  static LpResult make_finite(Rational v) { return {LpStatus::finite, std::move(v)}; }
  static LpResult make_unbounded() { return {LpStatus::unbounded, 0}; }
  static LpResult make_infeasible() { return {LpStatus::infeasible, 0}; }
};

inline bool contains_point(const HPoly& poly, const Point& p) { return poly.contains(p); }

namespace detail {

// a*x + b*y <= c scaled to integers: A*x + B*y <= C.
struct Row {
  Integer a, b, c;
};

// (x, y) = (X / W, Y / W) with W > 0.
struct HomPoint {
  Integer x, y, w;
};

inline std::vector<Row> to_rows(const HPoly& poly) {
  std::vector<Row> rows;
  rows.reserve(poly.size());
  for (const Ineq& e : poly) {
    const Integer& den = e.c().get_den();
    rows.push_back({e.a() * den, e.b() * den, e.c().get_num()});
  }
  return rows;
}

inline bool satisfies(const Row& r, const HomPoint& p) { return r.a * p.x + r.b * p.y <= r.c * p.w; }

inline bool satisfies_all(const std::vector<Row>& rows, const HomPoint& p, std::size_t skip1 = -1,
                          std::size_t skip2 = -1) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i == skip1 || i == skip2) continue;
    if (!satisfies(rows[i], p)) return false;
  }
  return true;
}

inline std::optional<HomPoint> crossing(const Row& r, const Row& s) {
  Integer w = r.a * s.b - s.a * r.b;
  if (w == 0) return std::nullopt;
  Integer x = r.c * s.b - s.c * r.b;
  Integer y = r.a * s.c - s.a * r.c;
  if (w < 0) {
    w = -w;
    x = -x;
    y = -y;
  }
  return HomPoint{std::move(x), std::move(y), std::move(w)};
}

inline bool all_parallel(const HPoly& poly) {
  for (const Ineq& e : poly) {
    if (e.a() * poly[0].b() != poly[0].a() * e.b()) return false;
  }
  return true;
}

}  // namespace detail

/// Candidate generators of the recession cone {d : A d <= 0}: both boundary
/// directions and the inward normal of every halfplane, kept when feasible.
inline std::vector<Dir> recession_rays(const HPoly& poly) {
  std::vector<Dir> out;
  auto feasible = [&](const Integer& dx, const Integer& dy) {
    for (const Ineq& e : poly) {
      if (e.a() * dx + e.b() * dy > 0) return false;
    }
    return true;
  };
  for (const Ineq& e : poly) {
    const Integer cand[3][2] = {{e.b(), -e.a()}, {-e.b(), e.a()}, {-e.a(), -e.b()}};
    for (const auto& d : cand) {
      if (feasible(d[0], d[1])) out.emplace_back(d[0], d[1]);
    }
  }
  sort_unique(out);
  return out;
}

/// Feasible boundary crossings of non-parallel pairs.
inline std::vector<Point> feasible_crossings(const HPoly& poly) {
  const std::vector<detail::Row> rows = detail::to_rows(poly);
  std::vector<Point> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      std::optional<detail::HomPoint> p = detail::crossing(rows[i], rows[j]);
      if (!p || !detail::satisfies_all(rows, *p, i, j)) continue;
      out.emplace_back(make_rational(p->x, p->w), make_rational(p->y, p->w));
    }
  }
  sort_unique(out);
  return out;
}

/// Exact emptiness test.
inline bool is_feasible(const HPoly& poly) {
  if (poly.empty()) return true;
  if (detail::all_parallel(poly)) {
    // Every row is +-(u . x) <= c for one primitive u.
    std::optional<Rational> upper, lower;
    for (const Ineq& e : poly) {
      if (e.a() == poly[0].a() && e.b() == poly[0].b()) {
        if (!upper || e.c() < *upper) upper = e.c();
      } else {
        Rational lo = -e.c();
        if (!lower || lo > *lower) lower = lo;
      }
    }
    return !upper || !lower || *lower <= *upper;
  }
  const std::vector<detail::Row> rows = detail::to_rows(poly);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      std::optional<detail::HomPoint> p = detail::crossing(rows[i], rows[j]);
      if (p && detail::satisfies_all(rows, *p, i, j)) return true;
    }
  }
  return false;
}

/// sup { dx*x + dy*y : (x, y) in [[poly]] }.
inline LpResult lp_max(const HPoly& poly, const Integer& dx, const Integer& dy) {
  if (dx == 0 && dy == 0) throw contract_error("lp_max: zero objective");
  if (!is_feasible(poly)) return LpResult::make_infeasible();
  if (poly.empty()) return LpResult::make_unbounded();
  for (const Dir& r : recession_rays(poly)) {
    if (dx * r.dx() + dy * r.dy() > 0) return LpResult::make_unbounded();
  }

  if (detail::all_parallel(poly)) {
    // Bounded, so the objective is constant along the common boundary direction
    // and the optimum lies on the tightest boundary.
    std::optional<Rational> best;
    for (const Ineq& e : poly) {
      const Integer norm2 = e.a() * e.a() + e.b() * e.b();
      const Point p(e.a() * e.c() / norm2, e.b() * e.c() / norm2);
      if (!poly.contains(p)) continue;
      Rational v = dx * p.x + dy * p.y;
      if (!best || v > *best) best = v;
    }
    return LpResult::make_finite(*best);
  }

  const std::vector<detail::Row> rows = detail::to_rows(poly);
  // Best value so far as the fraction num / den, den > 0.
  std::optional<std::pair<Integer, Integer>> best;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      std::optional<detail::HomPoint> p = detail::crossing(rows[i], rows[j]);
      if (!p) continue;
      Integer num = dx * p->x + dy * p->y;
      if (best && num * best->second <= best->first * p->w) continue;
      if (!detail::satisfies_all(rows, *p, i, j)) continue;
      best.emplace(std::move(num), p->w);
    }
  }
  return LpResult::make_finite(make_rational(best->first, best->second));
}

inline LpResult lp_max(const HPoly& poly, const Dir& d) { return lp_max(poly, d.dx(), d.dy()); }

}  // namespace phull::oracle
