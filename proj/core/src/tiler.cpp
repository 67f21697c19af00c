#include "tilecert/tiler.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <set>
#include <stdexcept>

#include "tilecert/classify.hpp"
#include "tilecert/interp.hpp"
#include "tilecert/stability.hpp"

namespace tilecert {

const char* to_string(CoverMode m) {
  switch (m) {
    case CoverMode::Exact:
      return "exact";
    case CoverMode::SubsetOfTarget:
      return "subset";
    case CoverMode::SupersetOfTarget:
      return "superset";
  }
  return "?";
}

std::optional<CoverMode> cover_mode_from_string(const std::string& s) {
  if (s == "exact") return CoverMode::Exact;
  if (s == "subset") return CoverMode::SubsetOfTarget;
  if (s == "superset") return CoverMode::SupersetOfTarget;
  return std::nullopt;
}

namespace {

constexpr int kMaxCells = 256;
using Mask = std::bitset<kMaxCells>;

struct Placement {
  Mask mask;
  std::vector<int> cells;  // sorted; cell = x * H + y, so index order is
                           // lexicographic point order
  int size = 0;
  int out_cells = 0;  // cells falling outside the target (superset mode)
  std::vector<std::pair<int, int>> colmin;  // (x, min y), ascending x
};

bool precedes_pl(const Placement& a, const Placement& b) {
  auto ia = a.colmin.begin();
  auto ib = b.colmin.begin();
  while (ia != a.colmin.end() && ib != b.colmin.end()) {
    if (ia->first < ib->first)
      ++ia;
    else if (ib->first < ia->first)
      ++ib;
    else {
      if (ia->second <= ib->second) return true;
      ++ia;
      ++ib;
    }
  }
  return false;
}

bool order_conflict(const Placement& a, const Placement& b) {
  return precedes_pl(a, b) && precedes_pl(b, a);
}

struct Searcher {
  // Geometry
  int W = 0, H = 0;
  Diagram target;  // in board coordinates
  Mask target_mask;
  CoverMode mode = CoverMode::Exact;

  // Tiles
  std::vector<int> sizes;        // distinct sizes
  std::vector<int> counts;       // remaining tiles per distinct size
  std::vector<Placement> pls;
  std::vector<std::vector<int>> at_cell;  // placements covering a cell

  // Options
  long long budget = 0;
  bool order_prune = true;
  bool collect_all = false;

  // Multiplicity-1 tiles stay out of the search: the cover may skip up to
  // `singles` target cells, which are filled with 1-diagrams afterwards,
  // and leftovers are appended greedily at the least free cells.
  int singles = 0;

  // How many 3/6-tile cells may fall outside the target in total; covering
  // the target leaves no slack for more (each uncovered target cell needs a
  // 1-diagram). Zero outside superset mode.
  int out_budget = 0;

  // State
  Mask covered, excluded;
  int out_used = 0;
  int skips_left = 0;
  std::vector<int> placed;
  std::vector<int> single_cells;
  int extra_singles = 0;
  long long explored = 0;
  bool aborted = false;
  std::optional<Certificate> found;
  std::vector<Tiling> all;
  std::vector<int> orig_mults;

  explicit Searcher(Diagram t) : target(std::move(t)) {}

  void build_placements() {
    std::set<int> size_set;
    for (int s : sizes) size_set.insert(s);
    bool restrict_to_target = mode != CoverMode::SupersetOfTarget;
    for (int s : size_set) {
      const TileCatalog& cat = catalog_for_size(s);
      if (cat.members.empty())
        throw std::invalid_argument("tiler: empty catalog for size " +
                                    std::to_string(s));
      for (const Diagram& member : cat.members)
        for (const Diagram& img : isometry_images(member)) {
          int w = img.max_x() + 1, h = img.max_y() + 1;
          for (int dx = 0; dx + w <= W; ++dx)
            for (int dy = 0; dy + h <= H; ++dy) {
              Placement p;
              p.size = s;
              bool ok = true;
              for (const Point& q : img.points()) {
                Point abs{q.x + dx, q.y + dy};
                if (!target.contains(abs)) {
                  if (restrict_to_target) {
                    ok = false;
                    break;
                  }
                  ++p.out_cells;
                }
                p.cells.push_back(abs.x * H + abs.y);
              }
              if (!ok) continue;
              std::sort(p.cells.begin(), p.cells.end());
              for (int c : p.cells) p.mask.set(c);
              std::map<int, int> cm;
              for (int c : p.cells) {
                int x = c / H, y = c % H;
                auto it = cm.find(x);
                if (it == cm.end() || y < it->second) cm[x] = y;
              }
              p.colmin.assign(cm.begin(), cm.end());
              pls.push_back(std::move(p));
            }
        }
    }
    // Canonical placement order: by cell list, which is unique per placement.
    std::sort(pls.begin(), pls.end(),
              [](const Placement& a, const Placement& b) {
                return a.cells < b.cells;
              });
    at_cell.assign((size_t)W * H, {});
    for (int i = 0; i < (int)pls.size(); ++i)
      for (int c : pls[i].cells) at_cell[c].push_back(i);
  }

  int size_class(int s) const {
    for (int i = 0; i < (int)sizes.size(); ++i)
      if (sizes[i] == s) return i;
    return -1;
  }

  bool counts_empty() const {
    for (int c : counts)
      if (c != 0) return false;
    return true;
  }

  bool conflicts_with_placed(const Placement& p) const {
    if (!order_prune) return false;
    for (int q : placed)
      if (order_conflict(p, pls[q])) return true;
    return false;
  }

  // Returns true to stop the whole search.
  bool emit_solution(const std::vector<int>& extra) {
    Tiling t;
    for (int i : placed) {
      std::vector<Point> pts;
      for (int c : pls[i].cells) pts.push_back({c / H, c % H});
      t.tiles.push_back(Diagram(std::move(pts)));
    }
    for (int c : single_cells) t.tiles.push_back(Diagram({{c / H, c % H}}));
    for (int c : extra) t.tiles.push_back(Diagram({{c / H, c % H}}));
    t = canonical_order(t);
    if (collect_all) {
      all.push_back(t);
      return false;
    }
    Certificate cert = verify(t);
    if (!cert.tiles_stable || !cert.order_ok || !cert.mode_inclusion_ok)
      return false;  // keep searching
    found = cert;
    return true;
  }

  Certificate verify(const Tiling& t) const {
    Certificate c;
    c.tiling = t;
    c.target = target;
    c.mults = orig_mults;
    c.mode = mode;
    // All checks from scratch; nothing is trusted from the search.
    std::multiset<int> want, got;
    for (int m : orig_mults)
      if (m > 0) want.insert((int)binom2(m));
    for (const Diagram& d : t.tiles) got.insert(d.size());
    bool sizes_ok = want == got && tiles_disjoint(t);
    c.tiles_stable = sizes_ok;
    for (const Diagram& d : t.tiles)
      if (!is_stable_cached(d)) c.tiles_stable = false;
    c.order_ok = c.tiles_stable && uniqueness_sufficient(t);
    Diagram u = tiling_union(t);
    switch (mode) {
      case CoverMode::Exact:
        c.mode_inclusion_ok = u == target;
        break;
      case CoverMode::SubsetOfTarget: {
        bool inc = true;
        for (const Point& p : u.points())
          if (!target.contains(p)) inc = false;
        c.mode_inclusion_ok = inc;
        break;
      }
      case CoverMode::SupersetOfTarget: {
        bool inc = true;
        for (const Point& p : target.points())
          if (!u.contains(p)) inc = false;
        c.mode_inclusion_ok = inc;
        break;
      }
    }
    return c;
  }

  int next_target_cell() const {
    for (const Point& p : target.points()) {
      int c = p.x * H + p.y;
      if (!covered.test(c) && !excluded.test(c)) return c;
    }
    return -1;
  }

  bool dfs() {
    if (aborted) return true;
    if (++explored > budget) {
      aborted = true;
      return true;
    }
    int cell = next_target_cell();
    if (cell < 0) return finish_cover();
    for (int i : at_cell[cell]) {
      const Placement& p = pls[i];
      int sc = size_class(p.size);
      if (counts[sc] == 0) continue;
      if (out_used + p.out_cells > out_budget) continue;
      if ((p.mask & (covered | excluded)).any()) continue;
      if (conflicts_with_placed(p)) continue;
      --counts[sc];
      covered |= p.mask;
      out_used += p.out_cells;
      placed.push_back(i);
      bool stop = dfs();
      placed.pop_back();
      out_used -= p.out_cells;
      covered &= ~p.mask;
      ++counts[sc];
      if (stop) return true;
    }
    if (skips_left > 0) {
      --skips_left;
      excluded.set(cell);
      bool stop = dfs();
      excluded.reset(cell);
      ++skips_left;
      if (stop) return true;
    }
    return false;
  }

  // Every target cell is covered or skipped; assign 1-diagrams to the
  // skipped cells and hand leftover tiles to the extras phase.
  bool finish_cover() {
    std::vector<int> sc;
    for (const Point& p : target.points()) {
      int c = p.x * H + p.y;
      if (excluded.test(c)) sc.push_back(c);
    }
    // Subset mode may leave cells genuinely empty; elsewhere every skipped
    // cell must receive a 1-diagram.
    if (mode == CoverMode::SubsetOfTarget) {
      if ((int)sc.size() < singles) return false;
    } else if ((int)sc.size() > singles) {
      return false;
    }
    size_t on_target =
        mode == CoverMode::SubsetOfTarget ? (size_t)singles : sc.size();
    single_cells.assign(sc.begin(), sc.begin() + on_target);
    extra_singles = singles - (int)on_target;
    Mask singles_mask;
    for (int c : single_cells) singles_mask.set(c);
    covered |= singles_mask;
    bool stop;
    if (!counts_empty()) {
      // Leftover 3/6 tiles land entirely outside the target.
      int leftover = 0;
      for (size_t i = 0; i < sizes.size(); ++i) leftover += sizes[i] * counts[i];
      if (mode == CoverMode::SupersetOfTarget &&
          out_used + leftover <= out_budget)
        stop = extras(0);
      else
        stop = false;
    } else {
      stop = emit_with_extras();
    }
    covered &= ~singles_mask;
    single_cells.clear();
    extra_singles = 0;
    return stop;
  }

  bool emit_with_extras() {
    std::vector<int> extra;
    for (int c = 0; c < W * H && (int)extra.size() < extra_singles; ++c)
      if (!covered.test(c)) extra.push_back(c);
    if ((int)extra.size() < extra_singles) return false;
    return emit_solution(extra);
  }

  // Superset mode: the target is covered; the remaining tiles go anywhere in
  // the box. Placement indices are required to increase so each tile set is
  // enumerated once.
  bool extras(int from) {
    if (aborted) return true;
    if (++explored > budget) {
      aborted = true;
      return true;
    }
    if (counts_empty()) return emit_with_extras();
    for (int i = from; i < (int)pls.size(); ++i) {
      const Placement& p = pls[i];
      int sc = size_class(p.size);
      if (counts[sc] == 0) continue;
      if (out_used + p.out_cells > out_budget) continue;
      if ((p.mask & covered).any()) continue;
      if (conflicts_with_placed(p)) continue;
      --counts[sc];
      covered |= p.mask;
      out_used += p.out_cells;
      placed.push_back(i);
      bool stop = extras(i + 1);
      placed.pop_back();
      out_used -= p.out_cells;
      covered &= ~p.mask;
      ++counts[sc];
      if (stop) return true;
    }
    return false;
  }
};

Searcher make_searcher(const TilingProblem& problem) {
  long long total = 0, total36 = 0;
  int n1 = 0;
  std::vector<int> tile_sizes;
  for (int m : problem.mults) {
    if (m < 0) throw std::invalid_argument("tiler: negative multiplicity");
    if (m == 0) continue;
    long long sz = binom2(m);
    total += sz;
    if (sz == 1) {
      ++n1;
    } else {
      tile_sizes.push_back((int)sz);
      total36 += sz;
    }
  }
  if (total == 0) throw std::invalid_argument("tiler: no tiles requested");

  const int tsz = problem.target.size();
  switch (problem.mode) {
    case CoverMode::Exact:
      if (total != tsz)
        throw std::invalid_argument("tiler: exact mode needs tile cells == target cells");
      break;
    case CoverMode::SubsetOfTarget:
      if (total > tsz)
        throw std::invalid_argument("tiler: subset mode needs tile cells <= target cells");
      break;
    case CoverMode::SupersetOfTarget:
      if (total < tsz)
        throw std::invalid_argument("tiler: superset mode needs tile cells >= target cells");
      break;
  }

  // Board coordinates: the target is shifted to the origin, plus a margin on
  // every side in superset mode. Specialty is translation-invariant, so the
  // shifted target represents the same system.
  int margin = problem.mode == CoverMode::SupersetOfTarget
                   ? problem.superset_margin
                   : 0;
  Diagram t = problem.target.translated(margin - problem.target.min_x(),
                                        margin - problem.target.min_y());
  Searcher s(t);
  s.W = t.max_x() + 1 + margin;
  s.H = t.max_y() + 1 + margin;
  if (s.W * s.H > kMaxCells)
    throw std::invalid_argument("tiler: board exceeds 256 cells");
  s.mode = problem.mode;
  s.budget = problem.budget;
  s.order_prune = problem.order_prune;
  s.orig_mults = problem.mults;
  for (const Point& p : t.points()) s.target_mask.set(p.x * s.H + p.y);

  std::map<int, int> by_size;
  for (int sz : tile_sizes) ++by_size[sz];
  for (auto& [sz, n] : by_size) {
    s.sizes.push_back(sz);
    s.counts.push_back(n);
  }
  s.singles = n1;
  s.skips_left = problem.mode == CoverMode::SubsetOfTarget
                     ? tsz - (int)total36
                     : n1;
  if (problem.mode == CoverMode::SupersetOfTarget)
    s.out_budget = (int)total36 - std::max(0, tsz - n1);
  s.build_placements();
  return s;
}

}  // namespace

SearchResult find_certified_tiling(const TilingProblem& problem,
                                   uint64_t /*seed*/) {
  Searcher s = make_searcher(problem);
  s.dfs();
  SearchResult res;
  res.certificate = s.found;
  res.explored = s.explored;
  res.exhausted = !s.aborted && !s.found.has_value();
  return res;
}

std::vector<Tiling> enumerate_exact_tilings(const Diagram& target,
                                            const std::vector<int>& mults) {
  TilingProblem p;
  p.target = target;
  p.mults = mults;
  p.mode = CoverMode::Exact;
  p.order_prune = false;
  Searcher s = make_searcher(p);
  s.collect_all = true;
  s.budget = (long long)4e18;
  s.dfs();
  return s.all;
}

namespace {

void run_case(LemmaReport& rep, const std::string& family, int k, int l, int p,
              int q, int r, CoverMode mode, uint64_t seed, long long budget) {
  TilingProblem prob;
  prob.target = Diagram::rect(k, l);
  for (int i = 0; i < p; ++i) prob.mults.push_back(1);
  for (int i = 0; i < q; ++i) prob.mults.push_back(2);
  for (int i = 0; i < r; ++i) prob.mults.push_back(3);
  prob.mode = mode;
  prob.budget = budget;
  SearchResult res = find_certified_tiling(prob, seed);
  LemmaCase c;
  c.family = family;
  c.k = k;
  c.l = l;
  c.p = p;
  c.q = q;
  c.r = r;
  c.found = res.certificate.has_value();
  c.exhausted = res.exhausted;
  c.explored = res.explored;
  if (!c.found) {
    ++rep.not_found;
    if (!c.exhausted) ++rep.failures;
  }
  rep.cases.push_back(std::move(c));
}

CoverMode mode_for(long long total, long long cells) {
  if (total == cells) return CoverMode::Exact;
  return total < cells ? CoverMode::SubsetOfTarget
                       : CoverMode::SupersetOfTarget;
}

}  // namespace

LemmaReport reconstruct_lemma_schemes(const std::string& family, uint64_t seed,
                                      long long budget) {
  LemmaReport rep;
  auto want = [&](const char* f) { return family == "all" || family == f; };

  // Rectangles k x l, 6 <= k <= l < 12, p = 0, kl-3 < 3q+6r < kl+6.
  if (want("3.4")) {
    for (int k = 6; k < 12; ++k)
      for (int l = k; l < 12; ++l)
        for (long long T = (long long)k * l - 2; T < (long long)k * l + 6; ++T) {
          if (T % 3 != 0) continue;
          for (int r = 0; 6 * r <= T; ++r) {
            int q = (int)(T - 6 * r) / 3;
            run_case(rep, "3.4", k, l, 0, q, r, mode_for(T, (long long)k * l),
                     seed, budget);
          }
        }
  }

  // Width-5 rectangles 5 x k, 7 <= k < 19.
  if (want("3.5")) {
    for (int k = 7; k < 19; ++k)
      for (long long T = 5ll * k - 2; T < 5ll * k + 6; ++T) {
        if (T % 3 != 0) continue;
        for (int r = 0; 6 * r <= T; ++r) {
          int q = (int)(T - 6 * r) / 3;
          run_case(rep, "3.5", 5, k, 0, q, r, mode_for(T, 5ll * k), seed,
                   budget);
        }
      }
  }

  // The 5x6 rectangle, every (p,q,r) in the window except the special case.
  if (want("3.6")) {
    for (int T = 28; T < 36; ++T)
      for (int r = 0; 6 * r <= T; ++r)
        for (int q = 0; 3 * q + 6 * r <= T; ++q) {
          int p = T - 3 * q - 6 * r;
          if (predicted_special({4, 5, p, q, r})) continue;
          run_case(rep, "3.6", 5, 6, p, q, r, mode_for(T, 30), seed, budget);
        }
  }

  // 4 x (e+1) endgames, e+1 in {4,5,6}, excluding conditions (3.1)-(3.4).
  if (want("3.7")) {
    for (int e = 3; e <= 5; ++e) {
      int cells = 4 * (e + 1);
      for (int T = cells - 2; T < cells + 6; ++T)
        for (int r = 0; 6 * r <= T; ++r)
          for (int q = 0; 3 * q + 6 * r <= T; ++q) {
            int p = T - 3 * q - 6 * r;
            if (predicted_special({3, e, p, q, r})) continue;
            run_case(rep, "3.7", 4, e + 1, p, q, r, mode_for(T, cells), seed,
                     budget);
          }
    }
  }

  return rep;
}

}  // namespace tilecert
