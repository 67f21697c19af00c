#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "tilecert/diagram.hpp"
#include "tilecert/field.hpp"

namespace testutil {

// Thin deterministic RNG for test-case generation; seeds never depend on
// wall-clock or address-space state.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() { return tilecert::splitmix64(state); }
  int below(int n) { return (int)(next() % (uint64_t)n); }
  int in(int lo, int hi) { return lo + below(hi - lo + 1); }  // inclusive
};

// `size` distinct cells drawn uniformly from the box [0,w) x [0,h).
inline tilecert::Diagram random_diagram(Rng& rng, int size, int w, int h) {
  std::vector<tilecert::Point> cells;
  cells.reserve((size_t)w * h);
  for (int x = 0; x < w; ++x)
    for (int y = 0; y < h; ++y) cells.push_back({x, y});
  for (int i = (int)cells.size() - 1; i > 0; --i)
    std::swap(cells[i], cells[rng.below(i + 1)]);
  cells.resize(size);
  return tilecert::Diagram(cells);
}

}  // namespace testutil
