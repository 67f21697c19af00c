#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "tilecert/rational.hpp"

namespace tilecert {

// Lattice point in N^2. Coordinates are kept non-negative.
struct Point {
  int x = 0;
  int y = 0;
  auto operator<=>(const Point&) const = default;
};

// Finite non-empty set of lattice points in N^2 with set semantics.
// Points are stored sorted lexicographically by (x, y); iteration order is
// the canonical column-major order used everywhere (matrix columns, ASCII
// letters, search branching).
class Diagram {
 public:
  explicit Diagram(std::vector<Point> pts);

  // {0..w-1} x {0..h-1}
  static Diagram rect(int w, int h);

  const std::vector<Point>& points() const { return pts_; }
  int size() const { return (int)pts_.size(); }
  bool contains(Point p) const;

  Diagram translated(int dx, int dy) const;

  int min_x() const;
  int min_y() const;
  int max_x() const;
  int max_y() const;
  long long sum_x() const;
  long long sum_y() const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.pts_ == b.pts_;
  }
  friend bool operator!=(const Diagram& a, const Diagram& b) {
    return !(a == b);
  }
  friend bool operator<(const Diagram& a, const Diagram& b) {
    return a.pts_ < b.pts_;
  }

 private:
  std::vector<Point> pts_;
};

std::pair<Rational, Rational> center_of_mass(const Diagram& d);

// i(D) = sum over D of squared distance to the center of mass; exact.
Rational inertia(const Diagram& d);

// axis 1: column profile (x -> count); axis 2: row profile (y -> count).
// Absent keys mean zero.
std::map<int, int> boundary_distribution(const Diagram& d, int axis);

// True iff every non-empty vertical and horizontal section is a contiguous
// integer interval.
bool sections_are_segments(const Diagram& d);

// True iff the set of occupied columns is a contiguous interval.
bool x_projection_is_segment(const Diagram& d);

Diagram minkowski_sum(const Diagram& a, const Diagram& b);

// Least point set among the 8 dihedral images of d, each translated so that
// min x = min y = 0. Idempotent; isometric diagrams share canonical forms.
Diagram canonical_form(const Diagram& d);

// All distinct dihedral images of d, each normalized to touch both axes,
// sorted. canonical_form(d) is the first element.
std::vector<Diagram> isometry_images(const Diagram& d);

}  // namespace tilecert
