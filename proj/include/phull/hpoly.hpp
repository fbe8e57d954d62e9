#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "phull/geometry.hpp"

namespace phull {

/// A finite list of halfplanes; the empty list is the whole plane.
class HPoly {
 public:
  HPoly() = default;
  HPoly(std::initializer_list<Ineq> ineqs) : ineqs_(ineqs) {}
  explicit HPoly(std::vector<Ineq> ineqs) : ineqs_(std::move(ineqs)) {}

  bool is_universe() const { return ineqs_.empty(); }
  bool empty() const { return ineqs_.empty(); }
  std::size_t size() const { return ineqs_.size(); }

  const Ineq& operator[](std::size_t i) const { return ineqs_[i]; }
  auto begin() const { return ineqs_.begin(); }
  auto end() const { return ineqs_.end(); }

  const std::vector<Ineq>& ineqs() const { return ineqs_; }
  std::vector<Ineq>& ineqs() { return ineqs_; }

  void push_back(Ineq e) { ineqs_.push_back(std::move(e)); }

  bool contains(const Point& p) const {
    return std::all_of(ineqs_.begin(), ineqs_.end(), [&](const Ineq& e) { return e.contains(p); });
  }

  friend bool operator==(const HPoly& p, const HPoly& q) { return p.ineqs_ == q.ineqs_; }

  friend std::ostream& operator<<(std::ostream& os, const HPoly& p) {
    os << '{';
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "; " : "") << p[i];
    return os << '}';
  }

 private:
  std::vector<Ineq> ineqs_;
};

/// conv(points) + cone(rays). Both lists are kept sorted and duplicate free.
struct VRep {
  std::vector<Point> points;
  std::vector<Dir> rays;
};

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// Sorts by orientation, smallest angle first. Stable for equal orientations.
inline void theta_sort(std::vector<Ineq>& ineqs) {
  std::stable_sort(ineqs.begin(), ineqs.end(),
                   [](const Ineq& e, const Ineq& f) { return theta_compare(e, f) < 0; });
}

}  // namespace phull
