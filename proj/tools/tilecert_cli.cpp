// tilecert: command-line front end for the specialty / tiling toolkit.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tilecert/classify.hpp"
#include "tilecert/diagram.hpp"
#include "tilecert/diagram_io.hpp"
#include "tilecert/field.hpp"
#include "tilecert/interp.hpp"
#include "tilecert/render.hpp"
#include "tilecert/stability.hpp"
#include "tilecert/tiler.hpp"
#include "tilecert/tiling.hpp"

using json = nlohmann::json;
using namespace tilecert;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Global {
  uint32_t prime = kDefaultPrime;
  uint64_t seed = 1;
  int trials = 3;
  std::string output = "text";
  bool canonical = false;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
};

json meta(const Global& g) {
  return {{"version", kVersion},
          {"prime", g.prime},
          {"seed", g.seed},
          {"trials", g.trials}};
}

bool json_out(const Global& g) { return g.output == "json"; }

// "1,2,3" -> {1, 2, 3}; taking a single token keeps greedy vector parsing
// from swallowing the positional diagram argument.
std::vector<int> parse_mults(const std::string& s) {
  std::vector<int> out;
  std::istringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty())
      throw std::invalid_argument("--mults expects integers, got '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("--mults expects m1,m2,...");
  return out;
}

// "RECT 4x6" arrives as one or two tokens; rejoin before parsing.
Diagram load_diagram_tokens(const std::vector<std::string>& toks) {
  std::string arg;
  for (size_t i = 0; i < toks.size(); ++i) {
    if (i) arg += ' ';
    arg += toks[i];
  }
  return load_diagram_arg(arg);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json verdict_to_json(const SpecialtyVerdict& v) {
  double confidence =
      v.kind == VerdictKind::ProbablySpecial ? 1.0 - v.failure_bound : 1.0;
  return {{"kind", to_string(v.kind)}, {"rank", v.rank},
          {"rows", v.rows},           {"cols", v.cols},
          {"edim", v.edim},           {"seed", v.seed},
          {"trials", v.trials},       {"confidence", confidence}};
}

json certificate_to_json(const Certificate& c) {
  return {{"tiling", tiling_to_json(c.tiling)},
          {"target", diagram_to_json(c.target)},
          {"mults", c.mults},
          {"mode", to_string(c.mode)},
          {"tiles_stable", c.tiles_stable},
          {"order_ok", c.order_ok},
          {"mode_inclusion_ok", c.mode_inclusion_ok}};
}

int cmd_diagram_stats(const Global& g, const std::vector<std::string>& dtoks) {
  Diagram d = load_diagram_tokens(dtoks);
  if (g.canonical) d = canonical_form(d);
  auto [cx, cy] = center_of_mass(d);
  int deg = degree_for_size(d.size());
  if (json_out(g)) {
    json j = meta(g);
    j["diagram"] = diagram_to_json(d);
    j["size"] = d.size();
    j["degree"] = deg;  // -1 when the cardinality is not triangular
    j["center"] = {cx.str(), cy.str()};
    j["inertia"] = inertia(d).str();
    j["sections_are_segments"] = sections_are_segments(d);
    j["x_projection_is_segment"] = x_projection_is_segment(d);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << diagram_to_text(d);
    std::cout << "size: " << d.size() << "\n";
    if (deg > 0) std::cout << "degree: " << deg << "\n";
    std::cout << "center: (" << cx.str() << ", " << cy.str() << ")\n";
    std::cout << "inertia: " << inertia(d).str() << "\n";
    std::cout << "sections are segments: "
              << (sections_are_segments(d) ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_system_edim(const Global& g, const std::vector<std::string>& dtoks,
                    const std::vector<int>& mults) {
  SystemSpec spec{load_diagram_tokens(dtoks), mults};
  long long edim = expected_dimension(spec);
  if (json_out(g)) {
    json j = meta(g);
    j["edim"] = edim;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << edim << "\n";
  }
  return 0;
}

int cmd_system_check(const Global& g, const std::vector<std::string>& dtoks,
                     const std::vector<int>& mults) {
  SystemSpec spec{load_diagram_tokens(dtoks), mults};
  SpecialtyVerdict v = specialty_test(spec, g.seed, g.trials, g.prime);
  if (json_out(g)) {
    json j = meta(g);
    j["verdict"] = verdict_to_json(v);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "verdict: " << to_string(v.kind) << "\n"
              << "rank: " << v.rank << " (" << v.rows << "x" << v.cols
              << ")\n"
              << "edim: " << v.edim << "\n";
    if (v.kind == VerdictKind::ProbablySpecial)
      std::cout << "failure bound: " << v.failure_bound << "\n";
  }
  return v.is_special() ? 1 : 0;
}

int cmd_stable_enum(const Global& g, int size, const std::string& box) {
  int bw = 0, bh = 0;
  char x = 0;
  std::istringstream bs(box);
  if (!(bs >> bw >> x >> bh) || x != 'x' || bw < 1 || bh < 1)
    throw std::invalid_argument("--box expects WxH");
  TileCatalog cat = enumerate_stable(size, bw, bh);
  if (json_out(g)) {
    json j = meta(g);
    j["size"] = cat.size;
    j["degree"] = cat.degree;
    j["members"] = json::array();
    for (const Diagram& d : cat.members) j["members"].push_back(diagram_to_json(d));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << cat.members.size() << " stable diagrams of size " << cat.size
              << " (degree " << cat.degree << "):\n";
    for (const Diagram& d : cat.members)
      std::cout << "\n" << diagram_to_text(d);
  }
  return 0;
}

int cmd_stable_check(const Global& g, const std::vector<std::string>& dtoks) {
  Diagram d = load_diagram_tokens(dtoks);
  StabilityReport rep = is_stable(d);
  if (json_out(g)) {
    json j = meta(g);
    j["stable"] = rep.stable;
    j["reason"] = to_string(rep.reason);
    j["degree"] = rep.degree;
    if (rep.witness) j["witness"] = diagram_to_json(*rep.witness);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (rep.stable ? "stable" : "not stable") << " (degree "
              << rep.degree << ")\n";
    if (!rep.stable) std::cout << "reason: " << to_string(rep.reason) << "\n";
    if (rep.witness)
      std::cout << "witness rival:\n" << diagram_to_text(*rep.witness);
  }
  return rep.stable ? 0 : 1;
}

int cmd_tiling_verify(const Global& g, const std::string& file, bool oracle) {
  Tiling t = tiling_from_json(json::parse(read_file(file)));
  bool disjoint = tiles_disjoint(t);
  bool unique = disjoint && uniqueness_sufficient(t);
  json j = meta(g);
  j["disjoint"] = disjoint;
  j["unique"] = unique;
  if (oracle) {
    try {
      j["oracle_unique"] = uniqueness_bruteforce(t);
    } catch (const std::invalid_argument& e) {
      j["oracle_unique"] = nullptr;
      j["oracle_error"] = e.what();
    }
  }
  if (json_out(g)) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "disjoint: " << (disjoint ? "true" : "false") << "\n"
              << "unique: " << (unique ? "true" : "false") << "\n";
    if (j.contains("oracle_unique"))
      std::cout << "oracle: " << j["oracle_unique"].dump() << "\n";
  }
  return unique ? 0 : 1;
}

int cmd_tiling_find(const Global& g, const std::vector<std::string>& ttoks,
                    const std::vector<int>& mults, const std::string& mode,
                    long long budget) {
  TilingProblem prob;
  prob.target = load_diagram_tokens(ttoks);
  prob.mults = mults;
  auto m = cover_mode_from_string(mode);
  if (!m) throw std::invalid_argument("--mode expects exact|subset|superset");
  prob.mode = *m;
  prob.budget = budget;
  SearchResult res = find_certified_tiling(prob, g.seed);
  json j = meta(g);
  j["found"] = res.certificate.has_value();
  j["explored"] = res.explored;
  j["exhausted"] = res.exhausted;
  if (res.certificate) j["certificate"] = certificate_to_json(*res.certificate);
  if (json_out(g)) {
    std::cout << j.dump(2) << "\n";
  } else if (res.certificate) {
    std::cout << render_ascii(res.certificate->tiling);
    std::cout << "explored: " << res.explored << "\n";
  } else {
    std::cout << "not found (" << (res.exhausted ? "exhausted" : "budget")
              << ", explored " << res.explored << ")\n";
  }
  return res.certificate ? 0 : 1;
}

int cmd_classify_verify(const Global& g, int max_e, int slack) {
  SweepReport rep = verify_range(max_e, slack, g.seed, g.trials, g.prime);
  json j = meta(g);
  j["cases_checked"] = rep.cases_checked;
  j["discrepancies"] = json::array();
  for (const Discrepancy& d : rep.discrepancies)
    j["discrepancies"].push_back({{"d", d.c.d},
                                  {"e", d.c.e},
                                  {"p", d.c.p},
                                  {"q", d.c.q},
                                  {"r", d.c.r},
                                  {"predicted_special", d.predicted},
                                  {"verdict", verdict_to_json(d.verdict)}});
  if (json_out(g)) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "cases checked: " << rep.cases_checked << "\n"
              << "discrepancies: " << rep.discrepancies.size() << "\n";
    for (const Discrepancy& d : rep.discrepancies)
      std::cout << "  (d,e,p,q,r) = (" << d.c.d << "," << d.c.e << ","
                << d.c.p << "," << d.c.q << "," << d.c.r << ") predicted "
                << (d.predicted ? "special" : "non-special") << ", verdict "
                << to_string(d.verdict.kind) << "\n";
  }
  return rep.discrepancies.empty() ? 0 : 1;
}

int cmd_render(const std::string& file, const std::string& format,
               const std::string& out_path) {
  Tiling t = tiling_from_json(json::parse(read_file(file)));
  std::string out;
  if (format == "ascii")
    out = render_ascii(t);
  else if (format == "svg")
    out = render_svg(t);
  else
    throw std::invalid_argument("--format expects ascii|svg");
  if (out_path.empty()) {
    std::cout << out;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot write " + out_path);
    f << out;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"specialty certificates for linear systems on P1xP1"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Global g;
  app.add_option("--prime", g.prime, "evaluation prime")
      ->default_val(kDefaultPrime);
  app.add_option("--seed", g.seed, "master seed; all randomness derives from it")
      ->default_val(1);
  app.add_option("--trials", g.trials, "rank evaluation trials")->default_val(3);
  app.add_option("--output", g.output, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
  app.add_flag("--canonical", g.canonical,
               "canonicalize diagrams / force deterministic search order");
  app.add_option("--workers", g.workers, "worker count (search is sequential)")
      ->default_val(g.workers);

  std::vector<std::string> dtoks, ttoks;
  std::string mults_str;
  auto add_diagram_opt = [&](CLI::App* cmd) {
    return cmd->add_option("diagram", dtoks, "diagram file, or RECT WxH")
        ->expected(1, 2)
        ->required();
  };

  auto* diagram = app.add_subcommand("diagram", "diagram utilities");
  auto* stats = diagram->add_subcommand("stats", "invariants of one diagram");
  add_diagram_opt(stats);

  auto* system = app.add_subcommand("system", "linear system queries");
  auto* edim = system->add_subcommand("edim", "expected dimension, Eq. (1)");
  add_diagram_opt(edim);
  edim->add_option("--mults", mults_str, "multiplicities m1,m2,...")
      ->required();
  auto* check = system->add_subcommand("check", "randomized specialty verdict");
  add_diagram_opt(check);
  check->add_option("--mults", mults_str, "multiplicities m1,m2,...")
      ->required();

  auto* stable = app.add_subcommand("stable", "stable diagram catalog");
  auto* senum = stable->add_subcommand("enum", "enumerate stable diagrams");
  int size = 3;
  std::string box = "6x6";
  senum->add_option("--size", size, "diagram cardinality (triangular)")
      ->required();
  senum->add_option("--box", box, "search box WxH")->default_val("6x6");
  auto* scheck = stable->add_subcommand("check", "stability of one diagram");
  add_diagram_opt(scheck);

  auto* tiling = app.add_subcommand("tiling", "tiling certificates");
  auto* tverify = tiling->add_subcommand("verify", "check a tiling file");
  std::string tiling_file;
  bool oracle = false;
  tverify->add_option("file", tiling_file, "tiling JSON file")->required();
  tverify->add_flag("--oracle", oracle,
                    "also run the brute-force uniqueness check (<= 16 cells)");
  auto* tfind = tiling->add_subcommand("find", "search for a certified tiling");
  std::string mode = "exact";
  long long budget = 100'000'000;
  tfind->add_option("--target", ttoks, "target diagram file, or RECT WxH")
      ->expected(1, 2)
      ->required();
  tfind->add_option("--mults", mults_str, "multiplicities m1,m2,...")
      ->required();
  tfind->add_option("--mode", mode, "exact|subset|superset")
      ->default_val("exact");
  tfind->add_option("--budget", budget, "node budget")->default_val(budget);

  auto* classify = app.add_subcommand("classify", "classification sweep");
  auto* cverify =
      classify->add_subcommand("verify", "predicate vs. rank verdicts");
  int max_e = 2, slack = 6;
  cverify->add_option("--max-e", max_e, "largest bidegree coordinate")
      ->required();
  cverify->add_option("--slack", slack, "overshoot allowed past (d+1)(e+1)")
      ->default_val(6);

  auto* render = app.add_subcommand("render", "draw a tiling");
  std::string render_file, format = "ascii", out_path;
  render->add_option("file", render_file, "tiling JSON file")->required();
  render->add_option("--format", format, "ascii|svg")->default_val("ascii");
  render->add_option("-o,--out", out_path, "output file (default stdout)");

  // let global flags appear after the subcommand as well
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (CLI::App* sc : a->get_subcommands([](const CLI::App*) { return true; })) {
      sc->fallthrough();
      enable_fallthrough(sc);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help / error text
    return code == 0 ? 0 : 2;
  }

  try {
    if (stats->parsed()) return cmd_diagram_stats(g, dtoks);
    if (edim->parsed()) return cmd_system_edim(g, dtoks, parse_mults(mults_str));
    if (check->parsed())
      return cmd_system_check(g, dtoks, parse_mults(mults_str));
    if (senum->parsed()) return cmd_stable_enum(g, size, box);
    if (scheck->parsed()) return cmd_stable_check(g, dtoks);
    if (tverify->parsed()) return cmd_tiling_verify(g, tiling_file, oracle);
    if (tfind->parsed())
      return cmd_tiling_find(g, ttoks, parse_mults(mults_str), mode, budget);
    if (cverify->parsed()) return cmd_classify_verify(g, max_e, slack);
    if (render->parsed()) return cmd_render(render_file, format, out_path);
    std::cerr << "missing subcommand; see --help\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
