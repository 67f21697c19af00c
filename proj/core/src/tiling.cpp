#include "tilecert/tiling.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "tilecert/interp.hpp"
#include "tilecert/stability.hpp"

namespace tilecert {

bool tiles_disjoint(const Tiling& t) {
  std::set<Point> seen;
  for (const Diagram& d : t.tiles)
    for (const Point& p : d.points())
      if (!seen.insert(p).second) return false;
  return true;
}

Diagram tiling_union(const Tiling& t) {
  if (t.tiles.empty()) throw std::invalid_argument("tiling_union: empty");
  if (!tiles_disjoint(t))
    throw std::invalid_argument("tiling_union: tiles overlap");
  std::vector<Point> pts;
  for (const Diagram& d : t.tiles)
    pts.insert(pts.end(), d.points().begin(), d.points().end());
  return Diagram(std::move(pts));
}

Tiling canonical_order(const Tiling& t) {
  Tiling out = t;
  std::sort(out.tiles.begin(), out.tiles.end());
  return out;
}

bool is_congruent(const Tiling& t, const Tiling& t2,
                  const CongruenceMap& pairing) {
  const int n = (int)t.tiles.size();
  if ((int)t2.tiles.size() != n || (int)pairing.size() != n) return false;
  if (!tiles_disjoint(t) || !tiles_disjoint(t2)) return false;
  std::vector<bool> hit(n, false);
  for (int i = 0; i < n; ++i) {
    int j = pairing[i];
    if (j < 0 || j >= n || hit[j]) return false;
    hit[j] = true;
    const Diagram& a = t.tiles[i];
    const Diagram& b = t2.tiles[j];
    if (a.size() != b.size()) return false;
    if (center_of_mass(a) != center_of_mass(b)) return false;
  }
  return tiling_union(t) == tiling_union(t2);
}

bool precedes(const Diagram& d, const Diagram& d2) {
  std::map<int, int> min1, min2;
  for (const Point& p : d.points()) {
    auto it = min1.find(p.x);
    if (it == min1.end() || p.y < it->second) min1[p.x] = p.y;
  }
  for (const Point& p : d2.points()) {
    auto it = min2.find(p.x);
    if (it == min2.end() || p.y < it->second) min2[p.x] = p.y;
  }
  for (const auto& [x, m1] : min1) {
    auto it = min2.find(x);
    if (it != min2.end() && m1 <= it->second) return true;
  }
  return false;
}

namespace {

// True iff the precedence digraph (self-loops ignored) has a directed cycle,
// i.e. the relation cannot be extended to a partial order on the tiles.
bool has_precedence_cycle(const Tiling& t) {
  const int n = (int)t.tiles.size();
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && precedes(t.tiles[i], t.tiles[j])) adj[i].push_back(j);
  std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    for (int w : adj[v]) {
      if (state[w] == 1) return true;
      if (state[w] == 0 && dfs(w)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (int v = 0; v < n; ++v)
    if (state[v] == 0 && dfs(v)) return true;
  return false;
}

}  // namespace

bool order_extendable(const Tiling& t) {
  for (const Diagram& d : t.tiles)
    if (!x_projection_is_segment(d))
      throw std::invalid_argument(
          "order_extendable: tile x-projection is not a segment");
  const int n = (int)t.tiles.size();
  bool pairwise = true;
  for (int i = 0; i < n && pairwise; ++i)
    for (int j = i + 1; j < n && pairwise; ++j)
      if (precedes(t.tiles[i], t.tiles[j]) &&
          precedes(t.tiles[j], t.tiles[i]) && t.tiles[i] != t.tiles[j])
        pairwise = false;
  bool acyclic = !has_precedence_cycle(t);
  if (pairwise != acyclic)
    throw std::logic_error(
        "order_extendable: pairwise antisymmetry and cycle check disagree");
  return pairwise;
}

bool uniqueness_sufficient(const Tiling& t) {
  if (t.tiles.empty() || !tiles_disjoint(t)) return false;
  for (const Diagram& d : t.tiles) {
    if (degree_for_size(d.size()) < 0) return false;
    if (!is_stable_cached(d)) return false;
  }
  bool segments = true;
  for (const Diagram& d : t.tiles)
    if (!x_projection_is_segment(d)) segments = false;
  if (segments) return order_extendable(t);
  return !has_precedence_cycle(t);
}

namespace {

struct BruteForce {
  std::vector<Point> cells;  // sorted union
  std::vector<const Diagram*> tiles;
  std::vector<int> degrees;
  std::vector<bool> used;
  std::vector<std::vector<Point>> parts;
  bool rival_found = false;

  // Choose cells for part j among unused cells, matching cardinality and
  // coordinate sums; recurse over tiles.
  void assign(int j) {
    if (rival_found) return;
    if (j == (int)tiles.size()) {
      bool identity = true;
      for (int i = 0; i < (int)tiles.size() && identity; ++i)
        if (Diagram(parts[i]) != *tiles[i]) identity = false;
      if (!identity) rival_found = true;
      return;
    }
    const Diagram& tile = *tiles[j];
    pick(j, 0, tile.size(), tile.sum_x(), tile.sum_y());
  }

  void pick(int j, int idx, int left, long long needx, long long needy) {
    if (rival_found) return;
    if (left == 0) {
      if (needx != 0 || needy != 0) return;
      Diagram part(parts[j]);
      // A special part may appear in a congruent tiling without breaking
      // uniqueness, so only all-non-special completions count as rivals.
      if (!diagram_degree_specialty_cached(part, degrees[j])) assign(j + 1);
      return;
    }
    for (int i = idx; i + left <= (int)cells.size(); ++i) {
      if (used[i]) continue;
      long long nx = needx - cells[i].x;
      if (nx < 0) break;  // cells sorted lex, x nondecreasing
      long long ny = needy - cells[i].y;
      if (ny < 0) continue;
      used[i] = true;
      parts[j].push_back(cells[i]);
      pick(j, i + 1, left - 1, nx, ny);
      parts[j].pop_back();
      used[i] = false;
    }
  }
};

}  // namespace

bool uniqueness_bruteforce(const Tiling& t) {
  if (t.tiles.empty()) throw std::invalid_argument("uniqueness: empty tiling");
  Diagram u = tiling_union(t);  // also checks disjointness
  if (u.size() > 16)
    throw std::invalid_argument("uniqueness_bruteforce: union exceeds 16");

  BruteForce bf;
  bf.cells = u.points();
  for (const Diagram& d : t.tiles) {
    int m = degree_for_size(d.size());
    if (m < 0)
      throw std::invalid_argument("uniqueness: tile size not triangular");
    // Uniqueness is defined only for tilings of non-special diagrams.
    if (diagram_degree_specialty_cached(d, m)) return false;
    bf.tiles.push_back(&d);
    bf.degrees.push_back(m);
  }
  bf.used.assign(bf.cells.size(), false);
  bf.parts.assign(bf.tiles.size(), {});
  bf.assign(0);
  return !bf.rival_found;
}

}  // namespace tilecert
