#include "tilecert/diagram_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace tilecert {

Diagram parse_diagram_text(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  while (!lines.empty() && lines.back().find_first_not_of(" \t\r") ==
                               std::string::npos)
    lines.pop_back();
  std::vector<Point> pts;
  const int rows = (int)lines.size();
  for (int i = 0; i < rows; ++i) {
    int y = rows - 1 - i;  // top line = highest y
    for (int x = 0; x < (int)lines[i].size(); ++x) {
      char c = lines[i][x];
      if (c == '.' || c == ' ' || c == '\t' || c == '\r') continue;
      pts.push_back({x, y});
    }
  }
  if (pts.empty())
    throw std::invalid_argument("parse_diagram_text: no points");
  return Diagram(std::move(pts));
}

std::string diagram_to_text(const Diagram& d) {
  int w = d.max_x() + 1, h = d.max_y() + 1;
  std::vector<std::string> rows(h, std::string(w, '.'));
  for (const Point& p : d.points()) rows[h - 1 - p.y][p.x] = '#';
  std::string out;
  for (const std::string& r : rows) {
    out += r;
    out += '\n';
  }
  return out;
}

nlohmann::json diagram_to_json(const Diagram& d) {
  nlohmann::json pts = nlohmann::json::array();
  for (const Point& p : d.points()) pts.push_back({p.x, p.y});
  return {{"points", pts}};
}

Diagram diagram_from_json(const nlohmann::json& j) {
  if (!j.contains("points") || !j["points"].is_array())
    throw std::invalid_argument("diagram JSON: missing \"points\" array");
  std::vector<Point> pts;
  for (const auto& e : j["points"]) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("diagram JSON: point must be [x, y]");
    pts.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return Diagram(std::move(pts));
}

nlohmann::json tiling_to_json(const Tiling& t) {
  nlohmann::json tiles = nlohmann::json::array();
  for (const Diagram& d : canonical_order(t).tiles)
    tiles.push_back(diagram_to_json(d));
  return {{"tiles", tiles}};
}

Tiling tiling_from_json(const nlohmann::json& j) {
  if (!j.contains("tiles") || !j["tiles"].is_array() || j["tiles"].empty())
    throw std::invalid_argument("tiling JSON: missing \"tiles\" array");
  Tiling t;
  for (const auto& e : j["tiles"]) t.tiles.push_back(diagram_from_json(e));
  return t;
}

Diagram load_diagram_arg(const std::string& arg) {
  std::string spec = arg;
  if (spec.rfind("RECT", 0) == 0) {
    std::string dims = spec.substr(4);
    if (!dims.empty() && (dims[0] == ' ' || dims[0] == ':'))
      dims = dims.substr(1);
    auto xpos = dims.find('x');
    if (xpos == std::string::npos)
      throw std::invalid_argument("RECT spec must look like RECT WxH");
    int w = std::stoi(dims.substr(0, xpos));
    int h = std::stoi(dims.substr(xpos + 1));
    return Diagram::rect(w, h);
  }
  std::ifstream in(arg);
  if (!in) throw std::runtime_error("cannot open diagram file: " + arg);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return diagram_from_json(nlohmann::json::parse(text));
  return parse_diagram_text(text);
}

}  // namespace tilecert
