#pragma once

#include <optional>
#include <vector>

#include "tilecert/diagram.hpp"

namespace tilecert {

// Degree m with C(m+1,2) = size, or -1 when size is not triangular.
int degree_for_size(int size);

// Every diagram D' in N^2 with #D' = #d, c(D') = c(d) and i(D') <= i(d),
// in lexicographic point-set order (d itself is among them).
std::vector<Diagram> enumerate_rivals(const Diagram& d);

struct StabilityReport {
  enum class Reason { Stable, Special, SectionsNotSegments, RivalBeats };
  bool stable = false;
  Reason reason = Reason::Stable;
  int degree = 0;
  // For RivalBeats: the lexicographically least rival that is non-special
  // and has strictly smaller inertia, or equal inertia with differing
  // boundary distributions.
  std::optional<Diagram> witness;
};

const char* to_string(StabilityReport::Reason r);

// Requires #d triangular (throws otherwise).
StabilityReport is_stable(const Diagram& d);

// Memoized on canonical form.
bool is_stable_cached(const Diagram& d);

struct TileCatalog {
  int size = 0;
  int degree = 0;
  std::vector<Diagram> members;  // canonical forms, sorted
};

// All stable diagrams of the given cardinality up to isometry, found by
// exhaustive enumeration inside the search box.
TileCatalog enumerate_stable(int size, int box_w = 6, int box_h = 6);

// Default catalog for a tile size, computed once and cached.
const TileCatalog& catalog_for_size(int size);

}  // namespace tilecert
