#pragma once

#include <vector>

#include "tilecert/diagram.hpp"

namespace tilecert {

// Pairwise-disjoint diagrams. Tile order is kept as given; canonical order
// (lexicographic by point set) is used for rendering and JSON output.
struct Tiling {
  std::vector<Diagram> tiles;
};

// pairing[i] = index of the tile of t2 paired with tiles[i] of t.
using CongruenceMap = std::vector<int>;

bool tiles_disjoint(const Tiling& t);
Diagram tiling_union(const Tiling& t);  // requires disjoint, non-empty
Tiling canonical_order(const Tiling& t);

// Congruence per the pairing: bijection, tile-wise equal cardinality and
// center of mass, equal unions.
bool is_congruent(const Tiling& t, const Tiling& t2,
                  const CongruenceMap& pairing);

// d precedes d2: some column is occupied in both and d's minimum there does
// not exceed d2's.
bool precedes(const Diagram& d, const Diagram& d2);

// Requires every tile's x-projection to be a segment (throws otherwise).
// Checks that no distinct pair is related both ways; cross-checks against a
// cycle test on the induced digraph and throws if the two disagree.
bool order_extendable(const Tiling& t);

// Sufficient condition for uniqueness: all tiles stable and the precedence
// relation extendable to a partial order.
bool uniqueness_sufficient(const Tiling& t);

// Direct check of the uniqueness definition by enumerating every congruent
// re-partition of the union; requires the union to have at most 16 cells.
// Tilings containing a special tile are not unique by definition.
bool uniqueness_bruteforce(const Tiling& t);

}  // namespace tilecert
