// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "tilecert/classify.hpp"
#include "tilecert/diagram.hpp"
#include "tilecert/field.hpp"
#include "tilecert/interp.hpp"
#include "tilecert/stability.hpp"
#include "tilecert/tiler.hpp"
#include "tilecert/tiling.hpp"

using namespace tilecert;
using testutil::Rng;
using testutil::random_diagram;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("%s criterion-%d: %s\n", ok ? "PASS" : "FAIL", criterion,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

// ---- criterion 1: classification sweep ----

void criterion1() {
  SweepReport rep = verify_range(6, 6, 20260826, 3);
  report(1, rep.discrepancies.empty(),
         "classification sweep max-e 6 slack 6: " +
             std::to_string(rep.cases_checked) + " cases, " +
             std::to_string(rep.discrepancies.size()) + " discrepancies");
}

// ---- criterion 2: certificate bridge on the lemma families ----

CoverMode mode_for(long long total, long long cells) {
  if (total == cells) return CoverMode::Exact;
  return total < cells ? CoverMode::SubsetOfTarget
                       : CoverMode::SupersetOfTarget;
}

void criterion2() {
  struct Case {
    int k, l, p, q, r;
  };
  std::vector<Case> cases;
  // Lemma 3.7 endgames: 4 x (e+1), e+1 in {4,5,6}, excluding predicted
  // special parameter tuples.
  for (int e = 3; e <= 5; ++e) {
    long long cells = 4ll * (e + 1);
    for (long long T = cells - 2; T < cells + 6; ++T)
      for (int r = 0; 6 * r <= T; ++r)
        for (int q = 0; 3 * q + 6 * r <= T; ++q) {
          int p = (int)(T - 3 * q - 6 * r);
          if (predicted_special({3, e, p, q, r})) continue;
          cases.push_back({4, e + 1, p, q, r});
        }
  }
  // Lemma 3.4 window on 6 x 6 ... 6 x 11.
  for (int l = 6; l <= 11; ++l)
    for (long long T = 6ll * l - 2; T < 6ll * l + 6; ++T) {
      if (T % 3 != 0) continue;
      for (int r = 0; 6 * r <= T; ++r)
        cases.push_back({6, l, 0, (int)(T - 6 * r) / 3, r});
    }

  int missing = 0, violations = 0, certs = 0;
  for (const Case& c : cases) {
    TilingProblem prob;
    prob.target = Diagram::rect(c.k, c.l);
    for (int i = 0; i < c.p; ++i) prob.mults.push_back(1);
    for (int i = 0; i < c.q; ++i) prob.mults.push_back(2);
    for (int i = 0; i < c.r; ++i) prob.mults.push_back(3);
    prob.mode = mode_for(c.p + 3ll * c.q + 6ll * c.r, (long long)c.k * c.l);
    prob.budget = 50'000'000;
    SearchResult res = find_certified_tiling(prob, 2);
    if (!res.certificate) {
      ++missing;
      continue;
    }
    ++certs;
    SpecialtyVerdict v = specialty_test({prob.target, prob.mults}, 2, 3);
    if (v.kind != VerdictKind::NonSpecialCertified) ++violations;
  }
  report(2, missing == 0 && violations == 0 && certs > 0,
         "certificate bridge: " + std::to_string(cases.size()) + " cases, " +
             std::to_string(certs) + " certificates, " +
             std::to_string(missing) + " missing, " +
             std::to_string(violations) + " specialty violations");
}

// ---- criterion 3: negative exhaustion ----

void criterion3() {
  bool ok = true;
  std::string detail;
  struct Neg {
    int w, h;
    std::vector<int> mults;
  };
  for (const Neg& n : {Neg{3, 3, {2, 2, 2}}, Neg{5, 6, {3, 3, 3, 3, 3}}}) {
    TilingProblem prob;
    prob.target = Diagram::rect(n.w, n.h);
    prob.mults = n.mults;
    SearchResult res = find_certified_tiling(prob, 3);
    bool this_ok = !res.certificate.has_value() && res.exhausted;
    ok = ok && this_ok;
    detail += std::to_string(n.w) + "x" + std::to_string(n.h) +
              (this_ok ? " exhausted" : " NOT exhausted") + " (" +
              std::to_string(res.explored) + " nodes)  ";
  }
  report(3, ok, "negative exhaustion: " + detail);
}

// ---- criterion 4: uniqueness soundness over exhaustive enumeration ----

void criterion4() {
  long long tilings = 0, sufficient = 0, overclaims = 0, disagreements = 0;
  for (int w = 1; w * w <= 12; ++w)
    for (int h = w; w * h <= 12; ++h) {
      int cells = w * h;
      for (int r = 0; 6 * r <= cells; ++r)
        for (int q = 0; 3 * q + 6 * r <= cells; ++q) {
          int p = cells - 3 * q - 6 * r;
          std::vector<int> mults;
          for (int i = 0; i < p; ++i) mults.push_back(1);
          for (int i = 0; i < q; ++i) mults.push_back(2);
          for (int i = 0; i < r; ++i) mults.push_back(3);
          for (const Tiling& t : enumerate_exact_tilings(Diagram::rect(w, h),
                                                         mults)) {
            ++tilings;
            bool suff;
            try {
              suff = uniqueness_sufficient(t);
            } catch (const std::logic_error&) {
              ++disagreements;
              continue;
            }
            if (!suff) continue;
            ++sufficient;
            if (!uniqueness_bruteforce(t)) ++overclaims;
          }
        }
    }
  report(4, overclaims == 0 && disagreements == 0 && tilings > 0,
         "uniqueness soundness: " + std::to_string(tilings) + " tilings, " +
             std::to_string(sufficient) + " sufficient, " +
             std::to_string(overclaims) + " overclaims, " +
             std::to_string(disagreements) + " order-check disagreements");
}

// ---- criterion 5: Laplace identity ----

uint32_t laplace_expansion(const SystemSpec& spec,
                           const std::vector<uint32_t>& pts, uint32_t p) {
  MatrixModP full = evaluate_matrix(spec, pts, p);
  const int n = full.cols();
  std::vector<int> sizes;
  for (int m : spec.mults) sizes.push_back((int)binom2(m));

  uint32_t acc = 0;
  std::vector<int> assign(n, -1);  // column -> point
  std::vector<int> left = sizes;
  std::function<void(int)> rec = [&](int col) {
    if (col == n) {
      std::vector<int> perm;
      for (size_t i = 0; i < sizes.size(); ++i)
        for (int c = 0; c < n; ++c)
          if (assign[c] == (int)i) perm.push_back(c);
      int inv = 0;
      for (size_t a = 0; a < perm.size(); ++a)
        for (size_t b = a + 1; b < perm.size(); ++b)
          if (perm[a] > perm[b]) ++inv;
      uint32_t term = 1;
      int row0 = 0;
      for (size_t i = 0; i < sizes.size(); ++i) {
        MatrixModP sub(sizes[i], sizes[i], p);
        int cc = 0;
        for (int c = 0; c < n; ++c) {
          if (assign[c] != (int)i) continue;
          for (int rr = 0; rr < sizes[i]; ++rr)
            sub.at(rr, cc) = full.at(row0 + rr, c);
          ++cc;
        }
        term = mul_mod(term, determinant(sub), p);
        row0 += sizes[i];
      }
      if (inv % 2) term = (p - term) % p;
      acc = add_mod(acc, term, p);
      return;
    }
    for (size_t i = 0; i < sizes.size(); ++i) {
      if (left[i] == 0) continue;
      --left[i];
      assign[col] = (int)i;
      rec(col + 1);
      assign[col] = -1;
      ++left[i];
    }
  };
  rec(0);
  return acc;
}

void criterion5() {
  Rng rng(0xacc5'0001);
  const uint32_t p = kDefaultPrime;
  int done = 0, mismatches = 0;
  while (done < 120) {
    int r = rng.in(1, 3);
    std::vector<int> mults;
    long long total = 0;
    for (int i = 0; i < r; ++i) {
      int m = rng.in(1, 3);
      if (total + binom2(m) > 9) break;
      mults.push_back(m);
      total += binom2(m);
    }
    if (mults.empty() || total > 9) continue;
    SystemSpec spec{random_diagram(rng, (int)total, 4, 4), mults};
    auto pts = seeded_points(rng.next(), (int)mults.size(), p);
    MatrixModP full = evaluate_matrix(spec, pts, p);
    if (determinant(full) != laplace_expansion(spec, pts, p)) ++mismatches;
    ++done;
  }
  report(5, mismatches == 0,
         "Laplace identity: " + std::to_string(done) + " square specs, " +
             std::to_string(mismatches) + " mismatches");
}

// ---- criterion 6: catalog regression ----

void criterion6() {
  bool ok = true;
  std::string detail;
  const TileCatalog& c3 = catalog_for_size(3);
  const TileCatalog& c6 = catalog_for_size(6);
  TileCatalog c3b = enumerate_stable(3, 6, 6);
  TileCatalog c6b = enumerate_stable(6, 6, 6);
  ok &= c3.members == c3b.members && c6.members == c6b.members;
  // Frozen member counts from the first verified run.
  ok &= c3.members.size() == 3 && c6.members.size() == 8;
  auto has = [](const TileCatalog& c, const Diagram& d) {
    Diagram cf = canonical_form(d);
    for (const Diagram& m : c.members)
      if (m == cf) return true;
    return false;
  };
  ok &= has(c3, Diagram({{0, 0}, {1, 0}, {0, 1}}));
  ok &= !has(c3, Diagram({{0, 0}, {1, 0}, {2, 0}}));
  Diagram triangular({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}});
  ok &= has(c6, triangular);
  ok &= !has(c6, Diagram::rect(2, 3));
  // Every non-triangular 6-member splits into two catalog 3-members.
  Diagram tri_cf = canonical_form(triangular);
  int unsplit = 0;
  for (const Diagram& m : c6.members) {
    if (m == tri_cf) continue;
    const auto& pts = m.points();
    bool split = false;
    for (int mask = 0; mask < (1 << 6) && !split; ++mask) {
      if (__builtin_popcount(mask) != 3) continue;
      std::vector<Point> a, b;
      for (int i = 0; i < 6; ++i) (mask >> i & 1 ? a : b).push_back(pts[i]);
      if (has(c3, Diagram(a)) && has(c3, Diagram(b))) split = true;
    }
    if (!split) ++unsplit;
  }
  // The split clause fails for exactly one regenerated member,
  // {(0,0),(1,2),(1,3),(2,1),(2,2),(3,1)}: stable (brute-force rival
  // search), yet every 3+3 split has a non-special but unstable part.
  // Reported faithfully; see the notes accompanying the catalog tests.
  ok &= unsplit == 0;
  std::string detail6 =
      "catalog regression: sizes " + std::to_string(c3.members.size()) + "/" +
      std::to_string(c6.members.size()) +
      ", unsplit non-triangular members: " + std::to_string(unsplit);
  if (unsplit > 0)
    detail6 +=
        " ({(0,0),(1,2),(1,3),(2,1),(2,2),(3,1)} is stable but every 3+3 "
        "split has a non-special yet unstable part; the division remark "
        "does not hold for it)";
  report(6, ok, detail6);
}

// ---- criterion 7: invariant suites, >= 1000 instances each ----

void criterion7() {
  long long bad = 0;
  std::string detail;

  // parallel-axis identity
  {
    Rng rng(0xacc7'0001);
    long long f = 0;
    for (int it = 0; it < 1000; ++it) {
      Diagram u = random_diagram(rng, rng.in(2, 10), 5, 5);
      int parts = rng.in(1, 3);
      std::vector<std::vector<Point>> groups(parts);
      for (const Point& p : u.points()) groups[rng.below(parts)].push_back(p);
      Rational lhs;
      for (const auto& g : groups) {
        if (g.empty()) continue;
        Diagram dj(g);
        auto [cx, cy] = center_of_mass(dj);
        lhs += Rational(dj.size()) * (cx * cx + cy * cy) + inertia(dj);
      }
      Rational rhs;
      for (const Point& p : u.points())
        rhs += Rational((long long)p.x * p.x + (long long)p.y * p.y);
      if (lhs != rhs) ++f;
    }
    bad += f;
    detail += "parallel-axis " + std::to_string(f) + ", ";
  }

  // isometry invariance: inertia
  {
    Rng rng(0xacc7'0002);
    long long f = 0;
    for (int it = 0; it < 1000; ++it) {
      Diagram d = random_diagram(rng, rng.in(1, 8), 5, 5);
      Rational i0 = inertia(d);
      if (inertia(d.translated(rng.below(4), rng.below(4))) != i0) ++f;
      for (const Diagram& img : isometry_images(d))
        if (inertia(img) != i0) ++f;
    }
    bad += f;
    detail += "inertia " + std::to_string(f) + ", ";
  }

  // isometry invariance: stability
  {
    Rng rng(0xacc7'0003);
    long long f = 0;
    for (int it = 0; it < 1000; ++it) {
      int size = rng.below(2) ? 3 : 6;
      Diagram d = random_diagram(rng, size, 4, 4);
      bool stable = is_stable_cached(d);
      for (const Diagram& img : isometry_images(d))
        if (is_stable_cached(img) != stable) ++f;
      if (is_stable_cached(d.translated(rng.below(3), rng.below(3))) != stable)
        ++f;
    }
    bad += f;
    detail += "stability " + std::to_string(f) + ", ";
  }

  // isometry invariance: degree specialty
  {
    Rng rng(0xacc7'0004);
    long long f = 0;
    for (int it = 0; it < 1000; ++it) {
      int m = rng.below(2) ? 2 : 3;
      Diagram d = random_diagram(rng, (int)binom2(m), 4, 4);
      bool special = diagram_degree_specialty_cached(d, m);
      for (const Diagram& img : isometry_images(d))
        if (diagram_degree_specialty_cached(img, m) != special) ++f;
    }
    bad += f;
    detail += "degree-specialty " + std::to_string(f) + ", ";
  }

  // translation invariance of precedes
  {
    Rng rng(0xacc7'0005);
    long long f = 0;
    for (int it = 0; it < 1000; ++it) {
      Diagram a = random_diagram(rng, rng.in(1, 5), 4, 4);
      Diagram b = random_diagram(rng, rng.in(1, 5), 4, 4);
      int dx = rng.below(4), dy = rng.below(4);
      if (precedes(a, b) != precedes(a.translated(dx, dy),
                                     b.translated(dx, dy)))
        ++f;
    }
    bad += f;
    detail += "precedes " + std::to_string(f) + ", ";
  }

  // matrix shape counts
  {
    Rng rng(0xacc7'0006);
    long long f = 0;
    for (int it = 0; it < 1000; ++it) {
      int r = rng.in(1, 4);
      std::vector<int> mults;
      long long want = 0;
      for (int i = 0; i < r; ++i) {
        int m = rng.in(0, 3);
        mults.push_back(m);
        want += binom2(m);
      }
      SystemSpec spec{random_diagram(rng, rng.in(1, 6), 4, 4), mults};
      if ((long long)build_matrix_rows(spec).size() != want) ++f;
    }
    bad += f;
    detail += "matrix-shape " + std::to_string(f) + ", ";
  }

  // monomial scaling
  {
    Rng rng(0xacc7'0007);
    long long f = 0;
    int done = 0;
    while (done < 1000) {
      int m = rng.below(2) ? 2 : 3;
      Diagram d = random_diagram(rng, (int)binom2(m), 4, 4);
      if (diagram_degree_specialty_cached(d, m)) continue;
      if (!single_point_monomial_check(d, m, rng.next())) ++f;
      ++done;
    }
    bad += f;
    detail += "monomial-scaling " + std::to_string(f);
  }

  report(7, bad == 0, "invariant suites, failures: " + detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASS"
                                    : "ACCEPTANCE FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
