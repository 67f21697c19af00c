#pragma once

#include <string>

#include "tilecert/tiling.hpp"

namespace tilecert {

// Letters A, B, ... in canonical tile order, y increasing upward, '.' for
// uncovered cells of the bounding box.
std::string render_ascii(const Tiling& t);

// Unit squares, one fill per tile from a fixed palette; deterministic.
std::string render_svg(const Tiling& t);

}  // namespace tilecert
