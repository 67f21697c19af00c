#include "tilecert/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tilecert {

std::string render_ascii(const Tiling& t) {
  Tiling ct = canonical_order(t);
  if (ct.tiles.empty()) throw std::invalid_argument("render: empty tiling");
  int maxx = 0, maxy = 0;
  for (const Diagram& d : ct.tiles) {
    maxx = std::max(maxx, d.max_x());
    maxy = std::max(maxy, d.max_y());
  }
  std::vector<std::string> rows(maxy + 1, std::string(maxx + 1, '.'));
  for (int i = 0; i < (int)ct.tiles.size(); ++i) {
    char c = i < 26 ? (char)('A' + i) : (char)('a' + (i - 26) % 26);
    for (const Point& p : ct.tiles[i].points()) rows[maxy - p.y][p.x] = c;
  }
  std::string out;
  for (const std::string& r : rows) {
    out += r;
    out += '\n';
  }
  return out;
}

std::string render_svg(const Tiling& t) {
  Tiling ct = canonical_order(t);
  if (ct.tiles.empty()) throw std::invalid_argument("render: empty tiling");
  static const char* palette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                                  "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
                                  "#9c755f", "#bab0ac"};
  constexpr int npal = 10;
  const int unit = 24;
  int maxx = 0, maxy = 0;
  for (const Diagram& d : ct.tiles) {
    maxx = std::max(maxx, d.max_x());
    maxy = std::max(maxy, d.max_y());
  }
  int w = (maxx + 1) * unit, h = (maxy + 1) * unit;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h
      << "\">\n";
  for (int i = 0; i < (int)ct.tiles.size(); ++i) {
    const char* fill = palette[i % npal];
    for (const Point& p : ct.tiles[i].points()) {
      // y increases upward; SVG y runs downward.
      int sx = p.x * unit, sy = (maxy - p.y) * unit;
      out << "  <rect x=\"" << sx << "\" y=\"" << sy << "\" width=\"" << unit
          << "\" height=\"" << unit << "\" fill=\"" << fill
          << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace tilecert
