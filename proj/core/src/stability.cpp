#include "tilecert/stability.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "tilecert/interp.hpp"

namespace tilecert {

int degree_for_size(int size) {
  for (int m = 1; binom2(m) <= size; ++m)
    if (binom2(m) == size) return m;
  return -1;
}

const char* to_string(StabilityReport::Reason r) {
  switch (r) {
    case StabilityReport::Reason::Stable:
      return "stable";
    case StabilityReport::Reason::Special:
      return "special";
    case StabilityReport::Reason::SectionsNotSegments:
      return "sections-not-segments";
    case StabilityReport::Reason::RivalBeats:
      return "rival-beats";
  }
  return "?";
}

namespace {

struct Candidate {
  Point pt;
  long long w;  // ||n*pt - S||^2
};

struct RivalSearch {
  int n;
  long long sx, sy, J;
  std::vector<Candidate> cand;
  std::vector<std::vector<long long>> suffix_min_w;  // [i][k]
  std::vector<int> suffix_max_x, suffix_max_y;
  std::function<bool(const std::vector<Point>&)> visit;  // true = stop
  std::vector<Point> chosen;

  bool run(int idx, int left, long long rsx, long long rsy, long long pw) {
    if (left == 0) {
      if (rsx == 0 && rsy == 0) return visit(chosen);
      return false;
    }
    for (int i = idx; i + left <= (int)cand.size(); ++i) {
      long long npw = pw + cand[i].w;
      if (npw + suffix_min_w[i + 1][left - 1] > J) continue;
      long long nrsx = rsx - cand[i].pt.x;
      long long nrsy = rsy - cand[i].pt.y;
      if (nrsx < 0) break;  // x nondecreasing in the sorted candidate list
      if (nrsx < (long long)(left - 1) * cand[i].pt.x) continue;
      if (nrsy < 0) continue;
      if (nrsx > (long long)(left - 1) * suffix_max_x[i + 1]) continue;
      if (nrsy > (long long)(left - 1) * suffix_max_y[i + 1]) continue;
      chosen.push_back(cand[i].pt);
      bool stop = run(i + 1, left - 1, nrsx, nrsy, npw);
      chosen.pop_back();
      if (stop) return true;
    }
    return false;
  }
};

// Rivals streamed in lexicographic point-set order; the visitor returns true
// to stop early.
void visit_rivals(const Diagram& d,
                  const std::function<bool(const std::vector<Point>&)>& visit) {
  const int n = d.size();
  const long long sx = d.sum_x(), sy = d.sum_y();
  // n^2 * i(D), an exact integer
  long long J = 0;
  for (const Point& p : d.points()) {
    long long ax = (long long)n * p.x - sx;
    long long ay = (long long)n * p.y - sy;
    J += ax * ax + ay * ay;
  }

  RivalSearch rs;
  rs.n = n;
  rs.sx = sx;
  rs.sy = sy;
  rs.J = J;
  long long rad = (long long)std::sqrt((double)J) + 2;
  int x0 = (int)std::max(0ll, (sx - rad) / n - 1);
  int x1 = (int)((sx + rad) / n + 1);
  int y0 = (int)std::max(0ll, (sy - rad) / n - 1);
  int y1 = (int)((sy + rad) / n + 1);
  for (int x = x0; x <= x1; ++x)
    for (int y = y0; y <= y1; ++y) {
      long long ax = (long long)n * x - sx, ay = (long long)n * y - sy;
      long long w = ax * ax + ay * ay;
      if (w <= J) rs.cand.push_back({{x, y}, w});
    }
  std::sort(rs.cand.begin(), rs.cand.end(),
            [](const Candidate& a, const Candidate& b) { return a.pt < b.pt; });

  const int N = (int)rs.cand.size();
  rs.suffix_min_w.assign(N + 1, std::vector<long long>(n + 1, 0));
  for (int i = N - 1; i >= 0; --i) {
    std::vector<long long> ws;
    for (int j = i; j < N; ++j) ws.push_back(rs.cand[j].w);
    std::sort(ws.begin(), ws.end());
    long long acc = 0;
    for (int k = 1; k <= n; ++k) {
      if (k <= (int)ws.size()) {
        acc += ws[k - 1];
        rs.suffix_min_w[i][k] = acc;
      } else {
        rs.suffix_min_w[i][k] = (long long)4e18;
      }
    }
  }
  rs.suffix_max_x.assign(N + 1, 0);
  rs.suffix_max_y.assign(N + 1, 0);
  for (int i = N - 1; i >= 0; --i) {
    rs.suffix_max_x[i] = std::max(rs.suffix_max_x[i + 1], rs.cand[i].pt.x);
    rs.suffix_max_y[i] = std::max(rs.suffix_max_y[i + 1], rs.cand[i].pt.y);
  }

  rs.visit = visit;
  rs.run(0, n, sx, sy, 0);
}

}  // namespace

std::vector<Diagram> enumerate_rivals(const Diagram& d) {
  std::vector<Diagram> out;
  visit_rivals(d, [&](const std::vector<Point>& pts) {
    out.push_back(Diagram(pts));
    return false;
  });
  return out;
}

StabilityReport is_stable(const Diagram& d) {
  StabilityReport rep;
  int m = degree_for_size(d.size());
  if (m < 0)
    throw std::invalid_argument("is_stable: cardinality not triangular");
  rep.degree = m;

  if (diagram_degree_specialty_cached(d, m)) {
    rep.stable = false;
    rep.reason = StabilityReport::Reason::Special;
    return rep;
  }
  if (!sections_are_segments(d)) {
    rep.stable = false;
    rep.reason = StabilityReport::Reason::SectionsNotSegments;
    return rep;
  }

  const Rational i_d = inertia(d);
  const auto phi1 = boundary_distribution(d, 1);
  const auto phi2 = boundary_distribution(d, 2);
  rep.stable = true;
  visit_rivals(d, [&](const std::vector<Point>& pts) {
    Diagram rival(pts);
    if (diagram_degree_specialty_cached(rival, m)) return false;  // clause (i)
    Rational i_r = inertia(rival);
    if (i_r > i_d) return false;  // clause (ii); cannot happen inside the disc
    if (i_r == i_d && boundary_distribution(rival, 1) == phi1 &&
        boundary_distribution(rival, 2) == phi2)
      return false;  // clause (iii); covers rival == d
    rep.stable = false;
    rep.reason = StabilityReport::Reason::RivalBeats;
    rep.witness = rival;
    return true;  // first violation settles it
  });
  return rep;
}

bool is_stable_cached(const Diagram& d) {
  static std::map<std::vector<Point>, bool> cache;
  auto key = canonical_form(d).points();
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  bool v = is_stable(Diagram(key)).stable;
  cache.emplace(std::move(key), v);
  return v;
}

namespace {

// Candidates with a non-segment section can never be stable, so candidate
// generation assigns each column either nothing or a contiguous interval and
// leaves only the row condition to check afterwards. Translates are skipped
// by requiring column 0 to be occupied and min y = 0.
void section_candidates(int box_w, int box_h, int size,
                        const std::function<void(const std::vector<Point>&)>& visit) {
  std::vector<std::pair<int, int>> col;  // (start, len), len 0 = empty
  std::function<void(int, int)> rec = [&](int x, int left) {
    if (left == 0) {
      int miny = box_h;
      std::vector<Point> pts;
      for (int cx = 0; cx < (int)col.size(); ++cx)
        for (int k = 0; k < col[cx].second; ++k) {
          pts.push_back({cx, col[cx].first + k});
          miny = std::min(miny, col[cx].first);
        }
      if (miny != 0) return;
      visit(pts);
      return;
    }
    if (x >= box_w) return;
    int min_len = x == 0 ? 1 : 0;  // column 0 occupied
    for (int len = min_len; len <= left && len <= box_h; ++len) {
      if (len == 0) {
        col.push_back({0, 0});
        rec(x + 1, left);
        col.pop_back();
        continue;
      }
      for (int start = 0; start + len <= box_h; ++start) {
        col.push_back({start, len});
        rec(x + 1, left - len);
        col.pop_back();
      }
    }
  };
  rec(0, size);
}

}  // namespace

TileCatalog enumerate_stable(int size, int box_w, int box_h) {
  int m = degree_for_size(size);
  if (m < 0)
    throw std::invalid_argument("enumerate_stable: size not triangular");
  std::set<std::vector<Point>> seen;
  section_candidates(box_w, box_h, size, [&](const std::vector<Point>& pts) {
    Diagram d(pts);
    if (!sections_are_segments(d)) return;  // rows may still have gaps
    seen.insert(canonical_form(d).points());
  });

  TileCatalog cat;
  cat.size = size;
  cat.degree = m;
  for (const auto& pts : seen) {
    Diagram d(pts);
    if (is_stable(d).stable) cat.members.push_back(d);
  }
  std::sort(cat.members.begin(), cat.members.end());
  return cat;
}

const TileCatalog& catalog_for_size(int size) {
  static std::map<int, TileCatalog> cache;
  auto it = cache.find(size);
  if (it == cache.end()) {
    int box = std::max(6, size);
    it = cache.emplace(size, enumerate_stable(size, box, box)).first;
  }
  return it->second;
}

}  // namespace tilecert
