#include <doctest.h>

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "tilecert/diagram_io.hpp"
#include "tilecert/render.hpp"
#include "tilecert/tiler.hpp"
#include "tilecert/tiling.hpp"

using namespace tilecert;
using testutil::Rng;
using testutil::random_diagram;

TEST_CASE("text format round-trips") {
  Diagram l({{0, 0}, {1, 0}, {0, 1}});
  CHECK(diagram_to_text(l) == "#.\n##\n");
  CHECK(parse_diagram_text(diagram_to_text(l)) == l);

  Rng rng(0x10'0001);
  for (int it = 0; it < 500; ++it) {
    Diagram d = random_diagram(rng, rng.in(1, 10), 5, 5);
    CHECK(parse_diagram_text(diagram_to_text(d)) == d);
  }
}

TEST_CASE("json formats round-trip") {
  Rng rng(0x10'0002);
  for (int it = 0; it < 500; ++it) {
    Diagram d = random_diagram(rng, rng.in(1, 10), 5, 5);
    CHECK(diagram_from_json(diagram_to_json(d)) == d);
  }
  Tiling t{{Diagram({{0, 0}, {1, 0}, {0, 1}}), Diagram({{1, 1}, {0, 2}, {1, 2}})}};
  Tiling back = tiling_from_json(tiling_to_json(t));
  CHECK(canonical_order(back).tiles == canonical_order(t).tiles);
}

TEST_CASE("rect shorthand and bad input") {
  CHECK(load_diagram_arg("RECT 4x6") == Diagram::rect(4, 6));
  CHECK(load_diagram_arg("RECT:2x2") == Diagram::rect(2, 2));
  CHECK_THROWS(load_diagram_arg("RECT 0x3"));
  CHECK_THROWS(load_diagram_arg("/nonexistent/path"));
  CHECK_THROWS(diagram_from_json(nlohmann::json{{"points", nlohmann::json::array()}}));
}

TEST_CASE("ascii rendering re-parses to the identical tiling") {
  TilingProblem prob;
  prob.target = Diagram::rect(3, 4);
  prob.mults = {2, 2, 2, 2};
  SearchResult res = find_certified_tiling(prob, 1);
  REQUIRE(res.certificate.has_value());
  const Tiling t = canonical_order(res.certificate->tiling);
  std::string art = render_ascii(t);

  // group cells by letter; rows are printed top (highest y) first
  std::map<char, std::vector<Point>> groups;
  int y = 0;
  std::vector<std::string> lines;
  for (size_t pos = 0; pos < art.size();) {
    size_t nl = art.find('\n', pos);
    lines.push_back(art.substr(pos, nl - pos));
    pos = nl + 1;
  }
  int maxy = (int)lines.size() - 1;
  for (const std::string& line : lines) {
    for (int x = 0; x < (int)line.size(); ++x)
      if (line[x] != '.') groups[line[x]].push_back({x, maxy - y});
    ++y;
  }
  Tiling parsed;
  for (auto& [ch, pts] : groups) parsed.tiles.push_back(Diagram(pts));
  CHECK(canonical_order(parsed).tiles == t.tiles);

  // letters follow canonical tile order
  REQUIRE(!groups.empty());
  char expect = 'A';
  for (auto& [ch, pts] : groups) {
    CHECK(ch == expect);
    ++expect;
  }

  std::string svg = render_svg(t);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("rect") != std::string::npos);
}
