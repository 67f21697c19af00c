#include "tilecert/diagram.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace tilecert {

Diagram::Diagram(std::vector<Point> pts) : pts_(std::move(pts)) {
  if (pts_.empty()) throw std::invalid_argument("Diagram: empty point set");
  for (const Point& p : pts_)
    if (p.x < 0 || p.y < 0)
      throw std::invalid_argument("Diagram: negative coordinate");
  std::sort(pts_.begin(), pts_.end());
  pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

Diagram Diagram::rect(int w, int h) {
  if (w < 1 || h < 1) throw std::invalid_argument("Diagram::rect: empty");
  std::vector<Point> pts;
  pts.reserve((size_t)w * h);
  for (int x = 0; x < w; ++x)
    for (int y = 0; y < h; ++y) pts.push_back({x, y});
  return Diagram(std::move(pts));
}

bool Diagram::contains(Point p) const {
  return std::binary_search(pts_.begin(), pts_.end(), p);
}

Diagram Diagram::translated(int dx, int dy) const {
  std::vector<Point> pts;
  pts.reserve(pts_.size());
  for (const Point& p : pts_) pts.push_back({p.x + dx, p.y + dy});
  return Diagram(std::move(pts));
}

int Diagram::min_x() const {
  int m = pts_[0].x;
  for (const Point& p : pts_) m = std::min(m, p.x);
  return m;
}
int Diagram::min_y() const {
  int m = pts_[0].y;
  for (const Point& p : pts_) m = std::min(m, p.y);
  return m;
}
int Diagram::max_x() const { return pts_.back().x; }
int Diagram::max_y() const {
  int m = pts_[0].y;
  for (const Point& p : pts_) m = std::max(m, p.y);
  return m;
}
long long Diagram::sum_x() const {
  long long s = 0;
  for (const Point& p : pts_) s += p.x;
  return s;
}
long long Diagram::sum_y() const {
  long long s = 0;
  for (const Point& p : pts_) s += p.y;
  return s;
}

std::pair<Rational, Rational> center_of_mass(const Diagram& d) {
  long long n = d.size();
  return {Rational(d.sum_x(), n), Rational(d.sum_y(), n)};
}

Rational inertia(const Diagram& d) {
  // sum ||delta - c||^2 = sum ||delta||^2 - (Sx^2 + Sy^2)/n
  long long n = d.size();
  long long sq = 0;
  for (const Point& p : d.points())
    sq += (long long)p.x * p.x + (long long)p.y * p.y;
  long long sx = d.sum_x(), sy = d.sum_y();
  return Rational(sq) - Rational(sx * sx + sy * sy, n);
}

std::map<int, int> boundary_distribution(const Diagram& d, int axis) {
  if (axis != 1 && axis != 2)
    throw std::invalid_argument("boundary_distribution: axis must be 1 or 2");
  std::map<int, int> out;
  for (const Point& p : d.points()) ++out[axis == 1 ? p.x : p.y];
  return out;
}

bool sections_are_segments(const Diagram& d) {
  std::map<int, std::pair<int, int>> cols, rows;  // key -> (min, max)
  auto grow = [](std::map<int, std::pair<int, int>>& m, int k, int v) {
    auto it = m.find(k);
    if (it == m.end())
      m.emplace(k, std::make_pair(v, v));
    else {
      it->second.first = std::min(it->second.first, v);
      it->second.second = std::max(it->second.second, v);
    }
  };
  for (const Point& p : d.points()) {
    grow(cols, p.x, p.y);
    grow(rows, p.y, p.x);
  }
  auto phi1 = boundary_distribution(d, 1);
  auto phi2 = boundary_distribution(d, 2);
  for (const auto& [x, mm] : cols)
    if (mm.second - mm.first + 1 != phi1[x]) return false;
  for (const auto& [y, mm] : rows)
    if (mm.second - mm.first + 1 != phi2[y]) return false;
  return true;
}

bool x_projection_is_segment(const Diagram& d) {
  auto phi1 = boundary_distribution(d, 1);
  return (int)phi1.size() == d.max_x() - d.min_x() + 1;
}

Diagram minkowski_sum(const Diagram& a, const Diagram& b) {
  std::set<Point> out;
  for (const Point& p : a.points())
    for (const Point& q : b.points()) out.insert({p.x + q.x, p.y + q.y});
  return Diagram(std::vector<Point>(out.begin(), out.end()));
}

std::vector<Diagram> isometry_images(const Diagram& d) {
  // The dihedral group of the square acting on (x, y), then translated back
  // so the image touches both axes.
  using Xf = std::array<int, 4>;  // (x,y) -> (a*x + b*y, c*x + d*y)
  static const Xf xfs[8] = {
      {1, 0, 0, 1},  {0, -1, 1, 0},  {-1, 0, 0, -1}, {0, 1, -1, 0},
      {-1, 0, 0, 1}, {1, 0, 0, -1},  {0, 1, 1, 0},   {0, -1, -1, 0}};
  std::set<Diagram> out;
  for (const Xf& t : xfs) {
    std::vector<Point> pts;
    pts.reserve(d.points().size());
    int mx = 0, my = 0;
    bool first = true;
    for (const Point& p : d.points()) {
      int x = t[0] * p.x + t[1] * p.y;
      int y = t[2] * p.x + t[3] * p.y;
      if (first || x < mx) mx = x;
      if (first || y < my) my = y;
      first = false;
      pts.push_back({x, y});
    }
    for (Point& p : pts) {
      p.x -= mx;
      p.y -= my;
    }
    out.insert(Diagram(std::move(pts)));
  }
  return std::vector<Diagram>(out.begin(), out.end());
}

Diagram canonical_form(const Diagram& d) { return isometry_images(d).front(); }

}  // namespace tilecert
