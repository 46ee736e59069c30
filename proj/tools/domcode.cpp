// domcode: verify, solve and construct location-domination codes from the
// command line.
//
// Exit codes: 0 ok, 1 failed verdict / infeasible, 2 usage or parameter
// error, 3 search stopped by a resource limit.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "domcode/domcode.hpp"

using json = nlohmann::json;
using namespace domcode;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIncomplete = 3;

json label_json(const Label& l) { return json(l); }

json labels_json(const Graph& g, const Code& c) {
  json out = json::array();
  for (const auto& l : c.labels(g)) out.push_back(label_json(l));
  return out;
}

std::string labels_text(const Graph& g, const Code& c) {
  std::string s;
  for (const auto& l : c.labels(g)) s += (s.empty() ? "" : " ") + label_string(l);
  return s;
}

json point_json(const Point& p) { return json::array({p.x, p.y}); }

json points_json(const std::vector<Point>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(point_json(p));
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

std::string utc_timestamp() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

// ---- verify -----------------------------------------------------------

struct VerifyArgs {
  std::string graph, code, cls;
  bool json = false;
};

int run_verify(const VerifyArgs& a) {
  const Graph g = parse_graph_spec(a.graph);
  const Code c = to_code(g, read_code_file(a.code));
  const CodeClass cls = parse_code_class(a.cls);
  const Verdict v = verify(g, c, cls);
  if (a.json) {
    json j = {{"command", "verify"}, {"graph", g.name()}, {"class", to_string(cls)}, {"size", c.size()},
              {"ok", v.ok}, {"witness", nullptr}, {"detail", v.detail}};
    if (v.witness) {
      json w = {{"kind", to_string(v.witness->kind)}, {"u", nullptr}, {"v", nullptr}};
      if (v.witness->u) w["u"] = label_json(g.label(*v.witness->u));
      if (v.witness->v) w["v"] = label_json(g.label(*v.witness->v));
      j["witness"] = w;
    }
    emit(j);
  } else {
    std::cout << (v.ok ? "ok" : "fail: " + v.detail) << '\n';
  }
  return v.ok ? kExitOk : kExitFailed;
}

// ---- solve ------------------------------------------------------------

struct SolveArgs {
  std::string graph, cls, config, manifest;
  int k = -1;
  double time_limit = 0;
  std::uint64_t node_limit = 0;
  bool parallel = false;
  bool json = false;
};

SolverConfig load_config(const SolveArgs& a, const CLI::App& sub) {
  SolverConfig cfg;
  if (!a.config.empty()) {
    std::ifstream in(a.config);
    if (!in) throw InvalidParameter("cannot open config '" + a.config + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw InvalidParameter("config '" + a.config + "': " + e.what());
    }
    if (j.contains("time_limit")) cfg.time_limit = j.at("time_limit").get<double>();
    if (j.contains("node_limit")) cfg.node_limit = j.at("node_limit").get<std::uint64_t>();
    if (j.contains("parallel")) cfg.parallel = j.at("parallel").get<bool>();
    if (j.contains("threads")) cfg.threads = j.at("threads").get<unsigned>();
    if (j.contains("lower_bound_hint")) cfg.lower_bound_hint = j.at("lower_bound_hint").get<int>();
    if (j.contains("upper_bound_hint")) cfg.upper_bound_hint = j.at("upper_bound_hint").get<int>();
  }
  if (sub.count("--time-limit")) cfg.time_limit = a.time_limit;
  if (sub.count("--node-limit")) cfg.node_limit = a.node_limit;
  if (a.parallel) cfg.parallel = true;
  if (const char* env = std::getenv("DOMCODE_THREADS")) {
    try {
      cfg.threads = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw InvalidParameter(std::string("DOMCODE_THREADS must be a positive integer, got '") + env + "'");
    }
  }
  if (cfg.time_limit < 0) throw InvalidParameter("time limit must be nonnegative");
  return cfg;
}

std::string result_digest(const Graph& g, const SolveResult& r) {
  std::string s = std::string(to_string(r.cls)) + "|" + std::string(to_string(r.status)) + "|" +
                  std::to_string(r.gamma) + "|" + std::to_string(r.lower_bound) + "|";
  if (r.witness) s += labels_text(g, *r.witness);
  return hex64(fnv1a(s));
}

json solve_json(const Graph& g, const SolveResult& r) {
  json j = {{"command", "solve"},
            {"graph", g.name()},
            {"class", to_string(r.cls)},
            {"status", to_string(r.status)},
            {"gamma", nullptr},
            {"witness", nullptr},
            {"lower_bound", r.lower_bound},
            {"upper_bound", r.upper_bound},
            {"nodes", r.stats.nodes},
            {"ms", r.stats.ms},
            {"complete", r.complete()}};
  if (r.status == SolveStatus::Optimal) j["gamma"] = r.gamma;
  if (r.witness) j["witness"] = labels_json(g, *r.witness);
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

int solve_exit(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return kExitOk;
    case SolveStatus::Infeasible:
    case SolveStatus::InconsistentHint: return kExitFailed;
    case SolveStatus::Incomplete: return kExitIncomplete;
  }
  return kExitFailed;
}

int run_decision(const Graph& g, CodeClass cls, int k, const SolverConfig& cfg, bool as_json) {
  const DecisionResult d = solve_decision(g, cls, k, cfg);
  const char* status = d.status == Feasibility::Feasible     ? "feasible"
                       : d.status == Feasibility::Infeasible ? "infeasible"
                                                             : "unknown";
  if (as_json) {
    json j = {{"command", "solve"}, {"graph", g.name()}, {"class", to_string(cls)}, {"k", k},
              {"status", status}, {"witness", nullptr}, {"nodes", d.stats.nodes}, {"ms", d.stats.ms},
              {"complete", d.status != Feasibility::Unknown}};
    if (d.witness) j["witness"] = labels_json(g, *d.witness);
    emit(j);
  } else {
    std::cout << status << " (size <= " << k << ")\n";
    if (d.witness) std::cout << "witness: " << labels_text(g, *d.witness) << '\n';
  }
  if (d.status == Feasibility::Feasible) return kExitOk;
  return d.status == Feasibility::Infeasible ? kExitFailed : kExitIncomplete;
}

int run_solve(const SolveArgs& a, const CLI::App& sub, const std::string& command_line) {
  const Graph g = parse_graph_spec(a.graph);
  const CodeClass cls = parse_code_class(a.cls);
  const SolverConfig cfg = load_config(a, sub);
  if (a.k >= 0) return run_decision(g, cls, a.k, cfg, a.json);

  const SolveResult r = solve(g, cls, cfg);
  if (a.json) {
    emit(solve_json(g, r));
  } else {
    if (r.status == SolveStatus::Optimal)
      std::cout << "gamma = " << r.gamma << '\n';
    else
      std::cout << to_string(r.status) << ": " << r.lower_bound << " <= gamma <= " << r.upper_bound << '\n';
    if (r.witness) std::cout << "witness: " << labels_text(g, *r.witness) << '\n';
    std::cout << "nodes: " << r.stats.nodes << ", ms: " << r.stats.ms << '\n';
  }
  if (!a.manifest.empty()) {
    json m = {{"command_line", command_line},
              {"graph", a.graph},
              {"class", to_string(cls)},
              {"limits", {{"time_limit", cfg.time_limit}, {"node_limit", cfg.node_limit}}},
              {"parallel", cfg.parallel},
              {"result_digest", result_digest(g, r)},
              {"timestamp", utc_timestamp()}};
    std::ofstream out(a.manifest);
    if (!out) throw InvalidParameter("cannot write manifest '" + a.manifest + "'");
    out << m.dump(2) << '\n';
  }
  return solve_exit(r.status);
}

// ---- replay -----------------------------------------------------------

int run_replay(const std::string& path, bool as_json) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open manifest '" + path + "'");
  json m;
  try {
    in >> m;
  } catch (const json::exception& e) {
    throw InvalidParameter("manifest '" + path + "': " + e.what());
  }
  const Graph g = parse_graph_spec(m.at("graph").get<std::string>());
  const CodeClass cls = parse_code_class(m.at("class").get<std::string>());
  SolverConfig cfg;
  cfg.time_limit = m.at("limits").value("time_limit", 0.0);
  cfg.node_limit = m.at("limits").value("node_limit", std::uint64_t{0});
  const SolveResult r = solve(g, cls, cfg);
  const std::string expected = m.at("result_digest").get<std::string>();
  const std::string got = result_digest(g, r);
  const bool same = expected == got;
  if (as_json)
    emit({{"command", "replay"}, {"expected", expected}, {"got", got}, {"match", same}});
  else
    std::cout << (same ? "match " : "mismatch ") << got << (same ? "" : " (expected " + expected + ")") << '\n';
  return same ? kExitOk : kExitFailed;
}

// ---- construct --------------------------------------------------------

struct ConstructArgs {
  std::string family, out;
  int n = 0, m = 0;
  bool json = false;
};

int run_construct(const ConstructArgs& a) {
  const Construction c = construct(a.family, a.n, a.m);
  const Verdict v = verify(c.graph, c.code, c.cls);
  if (!a.out.empty()) {
    std::ofstream out(a.out);
    if (!out) throw InvalidParameter("cannot write '" + a.out + "'");
    write_code(out, c.graph, c.code);
  }
  if (a.json) {
    emit({{"command", "construct"}, {"family", c.family}, {"n", a.n}, {"m", a.m}, {"graph", c.graph.name()},
          {"class", to_string(c.cls)}, {"size", c.code.size()}, {"verified", v.ok},
          {"code", labels_json(c.graph, c.code)}});
  } else {
    std::cout << c.graph.name() << ' ' << to_string(c.cls) << " size " << c.code.size()
              << (v.ok ? " (verified)" : " (FAILS verification)") << '\n'
              << labels_text(c.graph, c.code) << '\n';
  }
  return v.ok ? kExitOk : kExitFailed;
}

// ---- gamma / table ----------------------------------------------------

struct GammaArgs {
  std::string family;
  int n = 0, m = 0, q = 0;
  bool json = false;
};

int run_gamma(const GammaArgs& a) {
  const GammaFamily f = parse_gamma_family(a.family);
  const int value = gamma_closed_form({f, a.n, a.m, a.q});
  if (a.json) {
    json j = {{"command", "gamma"}, {"family", to_string(f)}, {"gamma", value}};
    if (f == GammaFamily::CubeDLD)
      j["q"] = a.q;
    else
      j["n"] = a.n, j["m"] = a.m;
    emit(j);
  } else {
    std::cout << value << '\n';
  }
  return kExitOk;
}

struct TableArgs {
  std::string family;
  int max = 8;
  bool json = false;
};

int run_table(const TableArgs& a) {
  const GammaFamily f = parse_gamma_family(a.family);
  if (a.max < 2 || a.max > 64) throw InvalidParameter("--max must be in [2, 64]");
  json rows = json::array();
  if (f == GammaFamily::CubeDLD) {
    for (int q = 2; q <= a.max; ++q) rows.push_back({{"q", q}, {"gamma", gamma_cube_dld(q)}});
    if (a.json) {
      emit({{"command", "table"}, {"family", to_string(f)}, {"max", a.max}, {"rows", rows}});
    } else {
      std::cout << std::setw(4) << "q" << std::setw(6) << "gamma" << '\n';
      for (int q = 2; q <= a.max; ++q) std::cout << std::setw(4) << q << std::setw(6) << gamma_cube_dld(q) << '\n';
    }
    return kExitOk;
  }
  for (int n = 2; n <= a.max; ++n) {
    json vals = json::array();
    for (int m = 2; m <= a.max; ++m) vals.push_back(m < n ? json(nullptr) : json(gamma_closed_form({f, n, m})));
    rows.push_back({{"n", n}, {"values", vals}});
  }
  if (a.json) {
    emit({{"command", "table"}, {"family", to_string(f)}, {"max", a.max}, {"rows", rows}});
    return kExitOk;
  }
  std::cout << to_string(f) << " (rows n, columns m)\n" << std::setw(4) << "n\\m";
  for (int m = 2; m <= a.max; ++m) std::cout << std::setw(4) << m;
  std::cout << '\n';
  for (int n = 2; n <= a.max; ++n) {
    std::cout << std::setw(4) << n;
    for (int m = 2; m <= a.max; ++m) {
      if (m < n)
        std::cout << std::setw(4) << '.';
      else
        std::cout << std::setw(4) << gamma_closed_form({f, n, m});
    }
    std::cout << '\n';
  }
  return kExitOk;
}

// ---- grid -------------------------------------------------------------

struct GridArgs {
  std::string code, pred, lattice = "king", check;
  long n = 0;
  bool json = false;
};

json grid_verdict_json(const GridVerdict& v) {
  json j = {{"ok", v.ok}, {"witness", nullptr}, {"detail", v.detail}};
  if (!v.ok) {
    json w = {{"kind", v.kind ? std::string(to_string(*v.kind)) : "unknown"}};
    if (v.u) w["u"] = point_json(*v.u);
    if (v.v) w["v"] = point_json(*v.v);
    if (!v.iset.empty()) w["iset"] = points_json(v.iset);
    if (!v.intersection.empty()) w["intersection"] = points_json(v.intersection);
    if (v.kind == GridWitnessKind::EmptyPattern) w["rotation"] = v.rotation;
    j["witness"] = w;
  }
  return j;
}

int run_grid(const GridArgs& a) {
  if (a.code.empty() == a.pred.empty()) throw InvalidParameter("give exactly one of --code or --pred");
  Lattice lattice;
  if (a.lattice == "king")
    lattice = Lattice::King;
  else if (a.lattice == "tri" || a.lattice == "triangular")
    lattice = Lattice::Triangular;
  else
    throw InvalidParameter("--lattice must be king or tri");
  const GridCode code = a.code.empty() ? parse_congruence(a.pred, lattice) : builtin_code(a.code);
  json j = {{"command", "grid"}, {"code", code.name}, {"lattice", to_string(code.lattice)}, {"check", a.check},
            {"n", a.n}};
  int rc = kExitOk;
  std::string text;

  if (a.check == "SLD" || a.check == "DLD" || a.check == "T") {
    const GridVerdict v = a.check == "T" ? scan_T_pattern(code, a.n)
                                         : verify_window(code, parse_code_class(a.check), a.n);
    j.update(grid_verdict_json(v));
    text = v.ok ? "ok" : "fail: " + v.detail;
    rc = v.ok ? kExitOk : kExitFailed;
  } else if (a.check == "density") {
    const DensityReport d = density(code, a.n);
    j.update({{"count", d.count}, {"total", d.total}, {"ratio", std::to_string(d.num) + "/" + std::to_string(d.den)}});
    text = "ratio " + std::to_string(d.num) + "/" + std::to_string(d.den) + " (" + std::to_string(d.count) + " of " +
           std::to_string(d.total) + ")";
  } else if (a.check == "strip") {
    const StripReport s = strip_count(code, a.n);
    const bool ok = s.min_count >= a.n - 3;
    j.update({{"min_count", s.min_count}, {"bound", a.n - 3}, {"ok", ok}, {"corner", point_json(s.corner)},
              {"vertical", s.vertical}, {"placements", s.placements}});
    text = "min " + std::to_string(s.min_count) + " codewords per strip (bound " + std::to_string(a.n - 3) + ")";
    rc = ok ? kExitOk : kExitFailed;
  } else {
    throw InvalidParameter("--check must be SLD, DLD, T, strip or density");
  }
  if (a.json)
    emit(j);
  else
    std::cout << text << '\n';
  return rc;
}

// ---- reproduce --------------------------------------------------------

struct ReproArgs {
  std::string target;
  int max = 5, max_q = 3;
  long grid_n = 20;
  double time_limit = 0;
  bool json = false;
};

int run_reproduce(const ReproArgs& a) {
  ReproOptions opt;
  opt.max_size = a.max;
  opt.max_q = a.max_q;
  opt.grid_n = a.grid_n;
  opt.solver.time_limit = a.time_limit;
  if (a.max < 2 || a.max_q < 2) throw InvalidParameter("--max and --max-q must be at least 2");

  std::vector<std::string> targets;
  if (a.target == "all")
    targets = reproduce_targets();
  else
    targets = {a.target};

  json reports = json::array();
  std::size_t pass = 0, fail = 0, unknown = 0;
  for (const auto& t : targets) {
    const ReproReport rep = reproduce(t, opt);
    pass += rep.count(CellState::Pass);
    fail += rep.count(CellState::Fail);
    unknown += rep.count(CellState::Unknown);
    if (a.json) {
      json cells = json::array();
      for (const auto& c : rep.cells)
        cells.push_back({{"label", c.label}, {"expected", c.expected}, {"got", c.got},
                         {"state", to_string(c.state)}, {"note", c.note}});
      reports.push_back({{"target", rep.target}, {"cells", cells}});
    } else {
      std::cout << rep.target << '\n';
      for (const auto& c : rep.cells) {
        std::cout << "  " << std::left << std::setw(28) << c.label << std::right << " expected " << std::setw(3)
                  << c.expected << "  got " << std::setw(3) << c.got << "  " << to_string(c.state);
        if (c.state != CellState::Pass && !c.note.empty()) std::cout << "  (" << c.note << ')';
        std::cout << '\n';
      }
    }
  }
  if (a.json)
    emit({{"command", "reproduce"}, {"reports", reports}, {"pass", pass}, {"fail", fail}, {"unknown", unknown}});
  else
    std::cout << pass << " pass, " << fail << " fail, " << unknown << " unknown\n";
  if (fail) return kExitFailed;
  return unknown ? kExitIncomplete : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::string command_line;
  for (int i = 0; i < argc; ++i) command_line += (i ? " " : "") + std::string(argv[i]);

  CLI::App app{"Location-domination codes: verify, solve, construct, closed forms and grid checks"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Check a code file against a class");
  verify_cmd->add_option("--graph", va.graph, "Graph spec, e.g. direct(K(3),K(3))")->required();
  verify_cmd->add_option("--code", va.code, "Code file")->required();
  verify_cmd->add_option("--class", va.cls, "DOM, LD, SLD, DLD or ID")->required();
  verify_cmd->add_flag("--json", va.json);

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "Exact minimum code size");
  solve_cmd->add_option("--graph", sa.graph, "Graph spec")->required();
  solve_cmd->add_option("--class", sa.cls, "DOM, LD, SLD, DLD or ID")->required();
  solve_cmd->add_option("--k", sa.k, "Decide whether a code of size <= k exists")->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--time-limit", sa.time_limit, "Seconds, 0 = none");
  solve_cmd->add_option("--node-limit", sa.node_limit, "Search nodes, 0 = none");
  solve_cmd->add_flag("--parallel", sa.parallel, "Split the top-level branches over threads (DOMCODE_THREADS)");
  solve_cmd->add_option("--config", sa.config, "JSON file with solver limits");
  solve_cmd->add_option("--manifest", sa.manifest, "Write a run manifest to this file");
  solve_cmd->add_flag("--json", sa.json);

  std::string replay_path;
  bool replay_json = false;
  auto* replay_cmd = app.add_subcommand("replay", "Re-run a solve manifest sequentially and compare digests");
  replay_cmd->add_option("manifest", replay_path)->required();
  replay_cmd->add_flag("--json", replay_json);

  ConstructArgs ca;
  auto* construct_cmd = app.add_subcommand("construct", "Build an explicit code");
  construct_cmd->add_option("--family", ca.family)
      ->required()
      ->check(CLI::IsMember(construction_families()));
  construct_cmd->add_option("--n", ca.n)->required();
  construct_cmd->add_option("--m", ca.m)->required();
  construct_cmd->add_option("--out", ca.out, "Write the code file here");
  construct_cmd->add_flag("--json", ca.json);

  GammaArgs ga;
  auto* gamma_cmd = app.add_subcommand("gamma", "Closed-form optimal size");
  gamma_cmd->add_option("--family", ga.family)->required();
  gamma_cmd->add_option("--n", ga.n);
  gamma_cmd->add_option("--m", ga.m);
  gamma_cmd->add_option("--q", ga.q);
  gamma_cmd->add_flag("--json", ga.json);

  TableArgs ta;
  auto* table_cmd = app.add_subcommand("table", "Closed-form values for 2 <= n <= m <= max");
  table_cmd->add_option("--family", ta.family)->required();
  table_cmd->add_option("--max", ta.max);
  table_cmd->add_flag("--json", ta.json);

  GridArgs gra;
  auto* grid_cmd = app.add_subcommand("grid", "Window checks on the king and triangular grids");
  grid_cmd->add_option("--code", gra.code, "tri_sld, king_dld or king_sld");
  grid_cmd->add_option("--pred", gra.pred, "Congruence, e.g. \"x-y % 3 in {0}\"");
  grid_cmd->add_option("--lattice", gra.lattice, "Lattice for --pred: king or tri");
  grid_cmd->add_option("--check", gra.check, "SLD, DLD, T, strip or density")->required();
  grid_cmd->add_option("--n", gra.n, "Window radius (strip height for strip)")->required();
  grid_cmd->add_flag("--json", gra.json);

  ReproArgs ra;
  auto* repro_cmd = app.add_subcommand("reproduce", "Solver-versus-formula matrices");
  std::vector<std::string> target_names = reproduce_targets();
  target_names.push_back("all");
  repro_cmd->add_option("target", ra.target)->required()->check(CLI::IsMember(target_names));
  repro_cmd->add_option("--max", ra.max, "Largest n, m for product targets");
  repro_cmd->add_option("--max-q", ra.max_q, "Largest q for cube_dld");
  repro_cmd->add_option("--grid-n", ra.grid_n, "Window radius for grids");
  repro_cmd->add_option("--time-limit", ra.time_limit, "Seconds per solver cell");
  repro_cmd->add_flag("--json", ra.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify_cmd) return run_verify(va);
    if (*solve_cmd) return run_solve(sa, *solve_cmd, command_line);
    if (*replay_cmd) return run_replay(replay_path, replay_json);
    if (*construct_cmd) return run_construct(ca);
    if (*gamma_cmd) return run_gamma(ga);
    if (*table_cmd) return run_table(ta);
    if (*grid_cmd) return run_grid(gra);
    if (*repro_cmd) return run_reproduce(ra);
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kExitFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
