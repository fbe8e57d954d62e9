#pragma once

// Establishing the hull precondition on arbitrary inequality lists, and the
// canonical form used to compare polyhedra structurally.

#include <vector>

#include "phull/hpoly.hpp"
#include "phull/lp.hpp"

namespace phull {

inline bool is_satisfiable(const HPoly& poly) { return oracle::is_feasible(poly); }

/// Canonical coefficients, sorted by orientation from the smallest angle,
/// identical duplicates removed.
inline HPoly canonical_poly(const HPoly& poly) {
  std::vector<Ineq> out = poly.ineqs();
  theta_sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return HPoly(std::move(out));
}

/// True iff dropping e from poly leaves the feasible set unchanged.
inline bool is_redundant_in(const HPoly& rest, const Ineq& e) {
  const oracle::LpResult r = oracle::lp_max(rest, e.a(), e.b());
  return r.infeasible() || (r.finite() && r.value <= e.c());
}

/// Minimal subset with the same feasible set. Of several halfplanes sharing an
/// orientation only the tightest survives; the remaining candidates are tested
/// in orientation order and dropped as soon as the others imply them.
inline HPoly remove_redundant(const HPoly& poly) {
  if (!is_satisfiable(poly)) throw contract_error("remove_redundant: unsatisfiable system");
  std::vector<Ineq> sorted = poly.ineqs();
  theta_sort(sorted);
  std::vector<Ineq> kept;
  for (Ineq& e : sorted) {
    if (!kept.empty() && theta_equal(kept.back(), e)) {
      if (e.c() < kept.back().c()) kept.back() = std::move(e);
      continue;
    }
    kept.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<Ineq> rest;
    rest.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) rest.push_back(kept[j]);
    }
    if (is_redundant_in(HPoly(rest), kept[i])) {
      kept = std::move(rest);
    } else {
      ++i;
    }
  }
  return HPoly(std::move(kept));
}

/// Satisfiable, sorted by strictly increasing orientation and non-redundant.
inline bool is_normalized(const HPoly& poly) {
  if (poly.empty()) return true;
  if (!is_satisfiable(poly)) return false;
  for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
    if (theta_compare(poly[i], poly[i + 1]) >= 0) return false;
  }
  for (std::size_t i = 0; i < poly.size(); ++i) {
    std::vector<Ineq> rest;
    for (std::size_t j = 0; j < poly.size(); ++j) {
      if (j != i) rest.push_back(poly[j]);
    }
    if (is_redundant_in(HPoly(std::move(rest)), poly[i])) return false;
  }
  return true;
}

/// remove_redundant followed by canonical_poly; the form hull expects.
inline HPoly normalize(const HPoly& poly) { return canonical_poly(remove_redundant(poly)); }

}  // namespace phull
