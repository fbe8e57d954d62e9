#pragma once

// Points, ray directions, halfplanes and the exact predicates built on them.
//
// Angles are never materialised. The orientation of a halfplane a*x + b*y <= c
// is the counter-clockwise angle of its outward normal (a, b) measured from
// (1, 0), i.e. from the normal of x <= 0. Comparing two orientations needs only
// the half of the circle each normal lies in and the sign of a cross product.

#include <compare>
#include <optional>
#include <ostream>
#include <utility>

#include "phull/rational.hpp"

namespace phull {

struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}

  friend bool operator==(const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; }

  /// Lexicographic by (x, y); used only for set semantics.
  friend bool operator<(const Point& p, const Point& q) {
    const int cx = cmp(p.x, q.x);
    return cx != 0 ? cx < 0 : p.y < q.y;
  }

  friend std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << '(' << to_string(p.x) << ", " << to_string(p.y) << ')';
  }
};

/// A ray direction, stored as a primitive integer vector.
class Dir {
 public:
  Dir(Integer dx, Integer dy) : dx_(std::move(dx)), dy_(std::move(dy)) {
    if (dx_ == 0 && dy_ == 0) throw contract_error("zero ray direction");
    Integer g;
    mpz_gcd(g.get_mpz_t(), dx_.get_mpz_t(), dy_.get_mpz_t());
    if (g != 1) {
      mpz_divexact(dx_.get_mpz_t(), dx_.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(dy_.get_mpz_t(), dy_.get_mpz_t(), g.get_mpz_t());
    }
  }

  /// Positive rescaling of a rational vector to its primitive integer form.
  static Dir from_rational(const Rational& dx, const Rational& dy) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), dx.get_den_mpz_t(), dy.get_den_mpz_t());
    Rational sx = dx * l;
    Rational sy = dy * l;
    return Dir(sx.get_num(), sy.get_num());
  }

  const Integer& dx() const { return dx_; }
  const Integer& dy() const { return dy_; }

  Dir operator-() const { return Dir(-dx_, -dy_); }

  friend bool operator==(const Dir& u, const Dir& v) { return u.dx_ == v.dx_ && u.dy_ == v.dy_; }
  friend bool operator<(const Dir& u, const Dir& v) {
    const int c = cmp(u.dx_, v.dx_);
    return c != 0 ? c < 0 : u.dy_ < v.dy_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Dir& d) {
    return os << '<' << d.dx_.get_str() << ", " << d.dy_.get_str() << '>';
  }

 private:
  Integer dx_;
  Integer dy_;
};

/// Closed halfplane a*x + b*y <= c in canonical form: integer coprime (a, b),
/// rational c. Two halfplanes are equal iff they denote the same set.
class Ineq {
 public:
  /// Canonicalises by a positive scalar; the feasible set is unchanged.
  Ineq(const Rational& a, const Rational& b, const Rational& c) {
    if (a == 0 && b == 0) throw contract_error("inequality with zero normal");
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
    Integer ia = Rational(a * l).get_num();
    Integer ib = Rational(b * l).get_num();
    Integer g;
    mpz_gcd(g.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
    mpz_divexact(a_.get_mpz_t(), ia.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b_.get_mpz_t(), ib.get_mpz_t(), g.get_mpz_t());
    c_ = c * l / g;
  }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Rational& c() const { return c_; }

  Rational eval(const Point& p) const { return Rational(a_ * p.x + b_ * p.y); }
  bool contains(const Point& p) const { return eval(p) <= c_; }
  bool strictly_contains(const Point& p) const { return eval(p) < c_; }

  friend bool operator==(const Ineq& e, const Ineq& f) {
    return e.a_ == f.a_ && e.b_ == f.b_ && e.c_ == f.c_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Ineq& e) {
    return os << e.a_.get_str() << "x + " << e.b_.get_str() << "y <= " << to_string(e.c_);
  }

 private:
  Integer a_;
  Integer b_;
  Rational c_;
};

inline Ineq canonical(const Rational& a, const Rational& b, const Rational& c) { return Ineq(a, b, c); }

namespace detail {

// 0 for angles in [0, pi), 1 for [pi, 2 pi).
template <typename T>
int half_of(const T& x, const T& y) {
  return (sgn(y) > 0 || (sgn(y) == 0 && sgn(x) > 0)) ? 0 : 1;
}

}  // namespace detail

/// Orders nonzero vectors by counter-clockwise angle from (1, 0) in [0, 2 pi).
template <typename T>
std::strong_ordering angle_compare(const T& ux, const T& uy, const T& vx, const T& vy) {
  const int hu = detail::half_of(ux, uy);
  const int hv = detail::half_of(vx, vy);
  if (hu != hv) return hu <=> hv;
  // Same half: v is further counter-clockwise iff u x v > 0.
  const int cross = cmp(ux * vy, uy * vx);
  return 0 <=> cross;
}

inline std::strong_ordering theta_compare(const Ineq& e1, const Ineq& e2) {
  return angle_compare(e1.a(), e1.b(), e2.a(), e2.b());
}

inline bool theta_equal(const Ineq& e1, const Ineq& e2) { return e1.a() == e2.a() && e1.b() == e2.b(); }

/// True iff the counter-clockwise angle from e1's normal to e2's is >= pi.
inline bool gap_ge_pi(const Ineq& e1, const Ineq& e2) {
  const int cross = cmp(e1.a() * e2.b(), e2.a() * e1.b());
  if (cross != 0) return cross < 0;
  return sgn(Integer(e1.a() * e2.a() + e1.b() * e2.b())) < 0;
}

/// Crossing of the two boundary lines; empty when they are parallel.
inline std::optional<Point> intersect(const Ineq& e1, const Ineq& e2) {
  const Integer det = e1.a() * e2.b() - e2.a() * e1.b();
  if (det == 0) return std::nullopt;
  Rational x = (e1.c() * e2.b() - e2.c() * e1.b()) / det;
  Rational y = (e1.a() * e2.c() - e2.a() * e1.c()) / det;
  return Point(std::move(x), std::move(y));
}

/// Halfplane through p1 and p2 whose feasible side lies to the left of the
/// directed line p1 -> p2.
inline Ineq connect(const Point& p1, const Point& p2) {
  if (p1 == p2) throw contract_error("connect: coincident points");
  Rational a = p2.y - p1.y;
  Rational b = p1.x - p2.x;
  Rational c = a * p1.x + b * p1.y;
  return Ineq(a, b, c);
}

inline bool saturates(const Point& p, const Ineq& e) { return e.eval(p) == e.c(); }

/// Strictly inside the open square (-s, s) x (-s, s).
inline bool in_box(const Rational& s, const Point& p) { return abs(p.x) < s && abs(p.y) < s; }

/// Sign of (q - p) x (r - p): greater is a counter-clockwise turn.
inline std::strong_ordering orient(const Point& p, const Point& q, const Point& r) {
  Rational lhs = (q.x - p.x) * (r.y - p.y);
  Rational rhs = (q.y - p.y) * (r.x - p.x);
  return cmp(lhs, rhs) <=> 0;
}

/// Counter-clockwise angular order of p1, p2 around the pivot, angle measured
/// from the +x axis; points on a common ray from the pivot are ordered by
/// increasing distance. Distinct points never compare equal.
inline std::strong_ordering pivot_compare(const Point& pivot, const Point& p1, const Point& p2) {
  if (p1 == pivot || p2 == pivot) throw contract_error("pivot_compare: point equals pivot");
  Rational ux = p1.x - pivot.x, uy = p1.y - pivot.y;
  Rational vx = p2.x - pivot.x, vy = p2.y - pivot.y;
  const std::strong_ordering by_angle = angle_compare(ux, uy, vx, vy);
  if (by_angle != 0) return by_angle;
  Rational d1 = ux * ux + uy * uy;
  Rational d2 = vx * vx + vy * vy;
  return cmp(d1, d2) <=> 0;
}

}  // namespace phull
