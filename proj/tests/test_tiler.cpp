#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "tilecert/interp.hpp"
#include "tilecert/tiler.hpp"
#include "tilecert/tiling.hpp"

using namespace tilecert;

TEST_CASE("cover mode names round-trip") {
  for (CoverMode m : {CoverMode::Exact, CoverMode::SubsetOfTarget,
                      CoverMode::SupersetOfTarget})
    CHECK(cover_mode_from_string(to_string(m)) == m);
  CHECK(!cover_mode_from_string("bogus"));
}

TEST_CASE("exact search: 2x3 rectangle with two double points") {
  TilingProblem prob;
  prob.target = Diagram::rect(2, 3);
  prob.mults = {2, 2};
  SearchResult res = find_certified_tiling(prob, 1);
  REQUIRE(res.certificate.has_value());
  const Certificate& c = *res.certificate;
  CHECK(c.tiles_stable);
  CHECK(c.order_ok);
  CHECK(c.mode_inclusion_ok);
  CHECK(tiling_union(c.tiling) == prob.target);
  CHECK(c.tiling.tiles.size() == 2);
  // Thm 2.3 bridge on this instance
  SpecialtyVerdict v = specialty_test({prob.target, prob.mults}, 3, 2);
  CHECK(v.kind == VerdictKind::NonSpecialCertified);
}

TEST_CASE("exact search: 4x3 rectangle with two triple points") {
  TilingProblem prob;
  prob.target = Diagram::rect(4, 3);
  prob.mults = {3, 3};
  SearchResult res = find_certified_tiling(prob, 1);
  REQUIRE(res.certificate.has_value());
  CHECK(tiling_union(res.certificate->tiling) == prob.target);
}

TEST_CASE("negative exhaustion on the paper's special cases") {
  TilingProblem prob;
  prob.target = Diagram::rect(3, 3);
  prob.mults = {2, 2, 2};
  SearchResult res = find_certified_tiling(prob, 1);
  CHECK(!res.certificate.has_value());
  CHECK(res.exhausted);

  prob.target = Diagram::rect(5, 6);
  prob.mults = {3, 3, 3, 3, 3};
  res = find_certified_tiling(prob, 1);
  CHECK(!res.certificate.has_value());
  CHECK(res.exhausted);
}

TEST_CASE("determinism of the search") {
  TilingProblem prob;
  prob.target = Diagram::rect(3, 4);
  prob.mults = {2, 2, 2, 2};
  SearchResult a = find_certified_tiling(prob, 5);
  SearchResult b = find_certified_tiling(prob, 5);
  REQUIRE(a.certificate.has_value());
  REQUIRE(b.certificate.has_value());
  CHECK(canonical_order(a.certificate->tiling).tiles ==
        canonical_order(b.certificate->tiling).tiles);
  CHECK(a.explored == b.explored);
}

TEST_CASE("subset mode leaves cells uncovered inside the target") {
  TilingProblem prob;
  prob.target = Diagram::rect(3, 3);
  prob.mults = {2, 2};
  prob.mode = CoverMode::SubsetOfTarget;
  SearchResult res = find_certified_tiling(prob, 1);
  REQUIRE(res.certificate.has_value());
  Diagram u = tiling_union(res.certificate->tiling);
  CHECK(u.size() == 6);
  for (const Point& p : u.points())
    CHECK(res.certificate->target.contains(p));
}

TEST_CASE("superset mode covers the whole target") {
  TilingProblem prob;
  prob.target = Diagram::rect(2, 2);
  prob.mults = {2, 2};
  prob.mode = CoverMode::SupersetOfTarget;
  SearchResult res = find_certified_tiling(prob, 1);
  REQUIRE(res.certificate.has_value());
  Diagram u = tiling_union(res.certificate->tiling);
  for (const Point& p : res.certificate->target.points())
    CHECK(u.contains(p));
  CHECK(u.size() == 6);
}

TEST_CASE("multiplicity-1 points fill skipped cells") {
  TilingProblem prob;
  prob.target = Diagram::rect(3, 3);
  prob.mults = {2, 2, 1, 1, 1};
  SearchResult res = find_certified_tiling(prob, 1);
  REQUIRE(res.certificate.has_value());
  CHECK(tiling_union(res.certificate->tiling) == prob.target);
  int ones = 0;
  for (const Diagram& d : res.certificate->tiling.tiles)
    if (d.size() == 1) ++ones;
  CHECK(ones == 3);
}

TEST_CASE("mode preconditions are validated") {
  TilingProblem prob;
  prob.target = Diagram::rect(2, 2);
  prob.mults = {2};  // 3 cells vs 4
  CHECK_THROWS_AS(find_certified_tiling(prob, 1), std::invalid_argument);
  prob.mode = CoverMode::SupersetOfTarget;
  CHECK_THROWS_AS(find_certified_tiling(prob, 1), std::invalid_argument);
  prob.mults = {2, 2};
  prob.mode = CoverMode::SubsetOfTarget;
  CHECK_THROWS_AS(find_certified_tiling(prob, 1), std::invalid_argument);
  prob.mults = {};
  prob.mode = CoverMode::Exact;
  CHECK_THROWS_AS(find_certified_tiling(prob, 1), std::invalid_argument);
}

TEST_CASE("exhaustive enumeration agrees with NotFound and with found cases") {
  // 3x3 with three double points: no exact tiling at all
  CHECK(enumerate_exact_tilings(Diagram::rect(3, 3), {2, 2, 2}).empty());

  // 2x3 with two double points: every enumerated tiling unions to the target
  auto all = enumerate_exact_tilings(Diagram::rect(2, 3), {2, 2});
  CHECK(!all.empty());
  for (const Tiling& t : all) {
    CHECK(tiles_disjoint(t));
    CHECK(tiling_union(t) == Diagram::rect(2, 3));
    for (const Diagram& d : t.tiles) CHECK(d.size() == 3);
  }
  // enumeration is duplicate-free
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      CHECK(canonical_order(all[i]).tiles != canonical_order(all[j]).tiles);
}

TEST_CASE("budget abort is reported as not exhausted") {
  TilingProblem prob;
  prob.target = Diagram::rect(5, 6);
  prob.mults = {3, 3, 3, 3, 3};
  prob.budget = 10;
  SearchResult res = find_certified_tiling(prob, 1);
  CHECK(!res.certificate.has_value());
  CHECK(!res.exhausted);
}

TEST_CASE("lemma scheme reconstruction: 3.7 endgame family") {
  LemmaReport rep = reconstruct_lemma_schemes("3.7", 1, 5'000'000);
  CHECK(!rep.cases.empty());
  CHECK(rep.failures == 0);
  CHECK(rep.not_found == 0);
}
