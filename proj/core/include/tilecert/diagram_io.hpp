#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "tilecert/diagram.hpp"
#include "tilecert/tiling.hpp"

namespace tilecert {

// Text format: one row per line, top row = highest y; '.' means absent, any
// other non-space character means present.
Diagram parse_diagram_text(const std::string& text);
std::string diagram_to_text(const Diagram& d);

// JSON forms: {"points": [[x,y],...]} and {"tiles": [{"points": ...}, ...]}.
nlohmann::json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);
nlohmann::json tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const nlohmann::json& j);

// Convenience: "RECT 4x6" / "RECT:4x6" -> the 4x6 cell rectangle; anything
// else is read as a file path holding either the text or the JSON form
// (JSON when the first non-space character is '{').
Diagram load_diagram_arg(const std::string& arg);

}  // namespace tilecert
