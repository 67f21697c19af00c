#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tilecert/diagram.hpp"
#include "tilecert/tiling.hpp"

namespace tilecert {

enum class CoverMode { Exact, SubsetOfTarget, SupersetOfTarget };

const char* to_string(CoverMode m);
std::optional<CoverMode> cover_mode_from_string(const std::string& s);

struct TilingProblem {
  Diagram target = Diagram({{0, 0}});
  std::vector<int> mults;  // one entry per base point; zeros ignored
  CoverMode mode = CoverMode::Exact;
  long long budget = 100'000'000;
  int superset_margin = 2;   // box growth per axis for superset mode
  bool order_prune = true;   // prune placements that break antisymmetry
};

struct Certificate {
  Tiling tiling;
  // For superset mode: the translated target actually used.
  Diagram target = Diagram({{0, 0}});
  std::vector<int> mults;
  CoverMode mode = CoverMode::Exact;
  // Re-verified from scratch before the certificate is returned.
  bool tiles_stable = false;
  bool order_ok = false;
  bool mode_inclusion_ok = false;
};

struct SearchResult {
  std::optional<Certificate> certificate;
  long long explored = 0;
  bool exhausted = false;  // tree fully explored without finding a certificate
};

// Depth-first exact-cover search over translated isometry images of catalog
// tiles, branching on the least uncovered cell; deterministic.
SearchResult find_certified_tiling(const TilingProblem& problem, uint64_t seed);

// All exact tilings of the target by catalog tiles of the given
// multiplicities, without any certificate filtering. Small targets only.
std::vector<Tiling> enumerate_exact_tilings(const Diagram& target,
                                            const std::vector<int>& mults);

struct LemmaCase {
  std::string family;
  int k = 0, l = 0;  // rectangle, in cells
  int p = 0, q = 0, r = 0;
  bool found = false;
  bool exhausted = false;
  long long explored = 0;
};

struct LemmaReport {
  std::vector<LemmaCase> cases;
  int failures = 0;  // cases with neither certificate nor proven exhaustion
  int not_found = 0;
};

// Re-runs the finite rectangle families the constructive arguments reduce
// to. family: "3.4", "3.5", "3.6", "3.7" or "all".
LemmaReport reconstruct_lemma_schemes(const std::string& family, uint64_t seed,
                                      long long budget = 100'000'000);

}  // namespace tilecert
