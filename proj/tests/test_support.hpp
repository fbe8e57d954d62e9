#pragma once

// Test-only helpers: seeded sampling of polyhedra and an exact membership test
// for conv(P) + cone(R) that solves the combination system directly.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "phull/phull.hpp"

namespace phull::testing {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long range(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  Rational fraction(long bound, long den = 7) { return make_rational(range(-bound * den, bound * den), den); }

  Point point(long bound) { return Point(fraction(bound), fraction(bound)); }

  /// Random point of conv(points) + cone(rays).
  Point in_conv_cone(const std::vector<Point>& points, const std::vector<Dir>& rays) {
    std::vector<Rational> w(points.size());
    Rational total = 0;
    for (Rational& wi : w) {
      wi = range(0, 5);
      total += wi;
    }
    if (total == 0) {
      w[range(0, static_cast<long>(points.size()) - 1)] = 1;
      total = 1;
    }
    Rational x = 0, y = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      x += w[i] * points[i].x / total;
      y += w[i] * points[i].y / total;
    }
    for (const Dir& r : rays) {
      const Rational mu = make_rational(range(0, 20), range(1, 3));
      x += mu * r.dx();
      y += mu * r.dy();
    }
    return Point(x, y);
  }

  /// Points of [[poly]]: rejection sampling around its generators, mixed with
  /// boundary-heavy combinations of the brute-force generators.
  std::vector<Point> inside(const HPoly& poly, std::size_t count) {
    std::vector<Point> out;
    if (poly.empty()) {
      while (out.size() < count) out.push_back(point(40));
      return out;
    }
    const VRep v = oracle::vrep_naive(poly);
    long bound = 4;
    for (const Point& p : v.points) {
      bound = std::max(bound, static_cast<long>(Rational(abs(p.x)).get_d()) + 4);
      bound = std::max(bound, static_cast<long>(Rational(abs(p.y)).get_d()) + 4);
    }
    std::size_t attempts = 0;
    while (out.size() < count / 2 && attempts++ < 20 * count) {
      Point p = point(bound);
      if (poly.contains(p)) out.push_back(std::move(p));
    }
    while (out.size() < count) {
      if (range(0, 3) == 0) {
        out.push_back(v.points[range(0, static_cast<long>(v.points.size()) - 1)]);
      } else {
        out.push_back(in_conv_cone(v.points, v.rays));
      }
    }
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

namespace detail {

// Unique solution of the 3 x k system cols * lambda = rhs, if the columns are
// independent and the system is consistent.
inline std::optional<std::vector<Rational>> solve_columns(const std::vector<std::array<Rational, 3>>& cols,
                                                          const std::array<Rational, 3>& rhs) {
  const std::size_t k = cols.size();
  std::vector<std::vector<Rational>> m(3, std::vector<Rational>(k + 1));
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < k; ++c) m[r][c] = cols[c][r];
    m[r][k] = rhs[r];
  }
  std::size_t row = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = row;
    while (piv < 3 && m[piv][c] == 0) ++piv;
    if (piv == 3) return std::nullopt;  // dependent columns
    std::swap(m[piv], m[row]);
    for (std::size_t r = 0; r < 3; ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[row][c];
      for (std::size_t cc = c; cc <= k; ++cc) m[r][cc] -= f * m[row][cc];
    }
    ++row;
  }
  for (std::size_t r = row; r < 3; ++r) {
    if (m[r][k] != 0) return std::nullopt;
  }
  std::vector<Rational> lambda(k);
  for (std::size_t c = 0; c < k; ++c) lambda[c] = m[c][k] / m[c][c];
  return lambda;
}

}  // namespace detail

/// Exact x in conv(points) + cone(rays), by Caratheodory: x is a nonnegative
/// combination of at most three homogenized generators (p, 1) / (r, 0).
inline bool in_conv_cone(const std::vector<Point>& points, const std::vector<Dir>& rays, const Point& x) {
  std::vector<std::array<Rational, 3>> gens;
  for (const Point& p : points) gens.push_back({p.x, p.y, 1});
  for (const Dir& r : rays) gens.push_back({Rational(r.dx()), Rational(r.dy()), 0});
  const std::array<Rational, 3> rhs{x.x, x.y, 1};
  const std::size_t g = gens.size();
  auto try_subset = [&](std::initializer_list<std::size_t> idx) {
    std::vector<std::array<Rational, 3>> cols;
    for (std::size_t i : idx) cols.push_back(gens[i]);
    const auto lambda = detail::solve_columns(cols, rhs);
    if (!lambda) return false;
    for (const Rational& l : *lambda) {
      if (l < 0) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < g; ++i) {
    if (try_subset({i})) return true;
    for (std::size_t j = i + 1; j < g; ++j) {
      if (try_subset({i, j})) return true;
      for (std::size_t k = j + 1; k < g; ++k) {
        if (try_subset({i, j, k})) return true;
      }
    }
  }
  return false;
}

inline HPoly make(std::initializer_list<std::array<long, 3>> rows) {
  HPoly out;
  for (const auto& r : rows) out.push_back(Ineq(r[0], r[1], r[2]));
  return out;
}

/// Zero-dimensional system {x <= px, y <= py, -x <= -px, -y <= -py}.
inline HPoly point_poly(long px, long py) { return make({{1, 0, px}, {0, 1, py}, {-1, 0, -px}, {0, -1, -py}}); }

}  // namespace phull::testing
