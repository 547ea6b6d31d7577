// Command-line front end: every subcommand is a thin adapter over the library.
// Exit codes: 0 pass, 1 verification failure, 2 usage or input error.

#include <chrono>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "tilint/countermodel.hpp"
#include "tilint/grid.hpp"
#include "tilint/io.hpp"
#include "tilint/parser.hpp"
#include "tilint/reduction.hpp"
#include "tilint/report.hpp"
#include "tilint/tiles.hpp"
#include "tilint/turing.hpp"

namespace {

using namespace tilint;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

int emit(Report& r, const Timer& timer, bool json_mode) {
  r.seconds = timer.seconds();
  std::cout << emit_report(r, json_mode);
  return r.status == Report::Status::Fail ? kExitVerificationFailure : kExitPass;
}

// Tiling of the rectangle needed to interpret individuals 0..n. With
// pin_origin the distinguished tile t_0 is forced at (0,0).
TileGrid window_for(const TileSet& ts, std::uint64_t n, bool pin_origin) {
  const GridExtent extent = required_extent(n);
  FixedCells fixed;
  if (pin_origin) fixed[{0, 0}] = 0;
  auto solved = solve_window(ts, extent.width, extent.height, fixed);
  if (!solved)
    throw std::runtime_error("no valid " + std::to_string(extent.width) + "x" +
                             std::to_string(extent.height) + " tiling exists for this tile set" +
                             (pin_origin ? " with t_0 at the origin" : ""));
  return *solved;
}

int cmd_grid(std::uint64_t upto, bool json_mode) {
  if (json_mode) {
    json rows = json::array();
    for (std::uint64_t k = 0; k <= upto; ++k) {
      const grid::Point p = grid::pair(k);
      rows.push_back({{"k", k}, {"i", p.i}, {"j", p.j}, {"right", grid::right(k)},
                      {"above", grid::above(k)}, {"wall", grid::wall(k)}, {"floor", grid::floor(k)}});
    }
    std::cout << json{{"rows", rows}}.dump(2) << "\n";
    return kExitPass;
  }
  std::cout << "k,i,j,right,above,wall,floor\n";
  for (std::uint64_t k = 0; k <= upto; ++k) {
    const grid::Point p = grid::pair(k);
    std::cout << k << ',' << p.i << ',' << p.j << ',' << grid::right(k) << ',' << grid::above(k) << ','
              << grid::wall(k) << ',' << grid::floor(k) << "\n";
  }
  return kExitPass;
}

int cmd_reduce(const std::string& tiles_path, bool psi, bool positive, const std::string& conjunct) {
  const TileSet ts = load_tileset(tiles_path);
  Formula f;
  if (conjunct.empty()) {
    f = psi ? build_psi(ts) : build_phi(ts);
  } else {
    bool found = false;
    for (const auto& c : named_conjuncts(ts, psi))
      if (c.name == conjunct) {
        f = c.formula;
        found = true;
        break;
      }
    if (!found) throw std::runtime_error("no conjunct named '" + conjunct + "'");
  }
  if (positive) f = to_positive(f);
  std::cout << print_formula(f) << "\n";
  return kExitPass;
}

int cmd_tile_solve(const std::string& tiles_path, int width, int height,
                   const std::vector<std::string>& fixes, bool json_mode) {
  const TileSet ts = load_tileset(tiles_path);
  FixedCells fixed;
  for (const auto& fx : fixes) {
    int i, j, t;
    if (std::sscanf(fx.c_str(), "%d,%d=%d", &i, &j, &t) != 3)
      throw std::runtime_error("--fix expects i,j=tile (got '" + fx + "')");
    fixed[{i, j}] = t;
  }
  const auto solved = solve_window(ts, width, height, fixed);
  if (!solved) {
    if (json_mode)
      std::cout << json{{"solvable", false}}.dump(2) << "\n";
    else
      std::cout << "no tiling\n";
    return kExitVerificationFailure;
  }
  if (json_mode) {
    json j = grid_to_json(*solved);
    j["solvable"] = true;
    std::cout << j.dump(2) << "\n";
  } else {
    for (int j = solved->height - 1; j >= 0; --j) {  // top row last printed first
      for (int i = 0; i < solved->width; ++i) std::cout << (i ? " " : "") << solved->at(i, j);
      std::cout << "\n";
    }
  }
  return kExitPass;
}

int cmd_tm_run(const std::string& machine_path, std::uint64_t steps, bool json_mode) {
  const TuringMachine m = load_machine(machine_path);
  const auto issues = validate_tm(m);
  if (!issues.empty()) {
    for (const auto& i : issues)
      std::cerr << "invalid machine: " << i.message << " (" << i.state << "," << i.symbol << ")\n";
    return kExitUsage;
  }
  const auto run = run_blank(m, steps);
  if (json_mode) {
    json rows = json::array();
    for (std::size_t k = 0; k < run.size(); ++k)
      rows.push_back({{"step", k}, {"state", run[k].state}, {"head", run[k].head}, {"tape", run[k].tape}});
    std::cout << json{{"run", rows}}.dump(2) << "\n";
    return kExitPass;
  }
  for (std::size_t k = 0; k < run.size(); ++k) {
    std::cout << k << "  " << run[k].state << " @" << run[k].head << "  ";
    for (std::size_t i = 0; i < run[k].tape.size(); ++i)
      std::cout << (i == run[k].head ? "[" + run[k].tape[i] + "]" : run[k].tape[i]);
    if (run[k].head >= run[k].tape.size()) std::cout << "...[" << m.blank << "]";
    std::cout << "\n";
  }
  return kExitPass;
}

int cmd_tm_tiles(const std::string& machine_path) {
  const TuringMachine m = load_machine(machine_path);
  const auto issues = validate_tm(m);
  if (!issues.empty()) {
    for (const auto& i : issues)
      std::cerr << "invalid machine: " << i.message << " (" << i.state << "," << i.symbol << ")\n";
    return kExitUsage;
  }
  const TmTiles tm = tm_to_tiles(m);
  std::cout << tileset_to_json(tm.tiles, &tm.labels).dump(2) << "\n";
  return kExitPass;
}

int cmd_verify_tm(const std::string& machine_path, int rows, bool json_mode) {
  Timer timer;
  const TuringMachine m = load_machine(machine_path);
  Report r;
  r.command = "verify-tm";
  for (const auto& i : validate_tm(m)) {
    r.add_finding({{"kind", "machine"}, {"message", i.message}, {"state", i.state}, {"symbol", i.symbol}});
    r.worsen(Report::Status::Fail);
  }
  if (r.status == Report::Status::Fail) return emit(r, timer, json_mode);

  const bool replay = rows_equal_configs(m, rows);
  if (!replay) {
    r.add_finding({{"kind", "replay"}, {"message", "row words do not spell the configurations"}});
    r.worsen(Report::Status::Fail);
  }
  const TileGrid g = blank_tape_tiling(m, rows);
  const auto run = run_blank(m, static_cast<std::size_t>(rows) - 1);
  const auto halt = halting_step(m, run);
  if (halt) {
    const int jstar = static_cast<int>(*halt) + 1;
    r.add_finding({{"kind", "halting"}, {"step", *halt}, {"jstar", jstar}});
    if (jstar < rows && !check_boundary(g, tm_to_tiles(m).tiles, jstar)) {
      r.add_finding({{"kind", "boundary"}, {"message", "column 0 does not settle on t_1"}});
      r.worsen(Report::Status::Fail);
    }
  } else {
    bool t1_seen = false;
    for (int j = 0; j < rows; ++j) t1_seen |= g.at(0, j) == 1;
    r.add_finding({{"kind", "halting"}, {"step", nullptr}, {"t1_on_column_0", t1_seen}});
    if (t1_seen) {
      r.add_finding({{"kind", "boundary"}, {"message", "t_1 appeared although the machine never halts"}});
      r.worsen(Report::Status::Fail);
    }
  }
  return emit(r, timer, json_mode);
}

int cmd_model_build(const std::string& tiles_path, std::uint64_t n, bool pin_origin) {
  const TileSet ts = load_tileset(tiles_path);
  const TileGrid g = window_for(ts, n, pin_origin);
  const auto model = build_countermodel(ts, g, n);
  std::cout << model_to_json(model.model, true).dump(2) << "\n";
  return kExitPass;
}

int cmd_model_check(const std::string& model_path, const std::string& formula_text, int world,
                    bool json_mode) {
  Timer timer;
  const KripkeModel m = load_model(model_path);
  Report r;
  r.command = "model-check";
  for (const auto& issue : validate_model(m)) {
    r.add_finding({{"kind", to_string(issue.kind)}, {"message", issue.detail}});
    r.worsen(Report::Status::Fail);
  }
  if (r.status != Report::Status::Fail && !formula_text.empty()) {
    const Formula f = parse_formula(formula_text);
    if (world >= 0) {
      const bool res = forces(m, world, f);
      r.add_finding({{"kind", "forces"}, {"world", world}, {"holds", res}});
      if (!res) r.worsen(Report::Status::Fail);
    } else {
      const bool res = holds_everywhere(m, f);
      r.add_finding({{"kind", "holds-everywhere"}, {"holds", res}});
      if (!res) r.worsen(Report::Status::Fail);
    }
  }
  return emit(r, timer, json_mode);
}

json witness_json(const Witness& w) {
  json values = json::object();
  for (const auto& [var, val] : w.values) values[var] = val;
  return json{{"world", w.world}, {"values", values}};
}

int cmd_verify_lemma1(const std::string& tiles_path, std::uint64_t n, std::uint64_t margin, bool psi,
                      bool json_mode) {
  Timer timer;
  const TileSet ts = load_tileset(tiles_path);
  const TileGrid g = window_for(ts, n, psi);
  const auto model = build_countermodel(ts, g, n);

  Report r;
  r.command = psi ? "verify-lemma1 --psi" : "verify-lemma1";
  for (const auto& issue : validate_model(model.model))
    r.add_finding({{"kind", "model"}, {"message", issue.detail}});
  if (!r.findings.empty()) {
    r.worsen(Report::Status::Fail);
    return emit(r, timer, json_mode);
  }

  const ConjunctReport report = conjunct_report(model, psi, margin);
  for (const auto& f : report.findings) {
    json entry{{"conjunct", f.name}, {"holds", f.holds}};
    const bool wanted_false = f.name == "Refute" || f.name == "Refute_Q";
    if (wanted_false) {
      entry["expected"] = "refuted at world 0";
      if (f.holds) r.worsen(Report::Status::Fail);
    } else if (!f.holds) {
      if (f.witness) entry["witness"] = witness_json(*f.witness);
      entry["classification"] = f.boundary ? "boundary" : "interior";
      if (f.name == "T_4")
        entry["classification"] = "informational";  // not forced under the exact forcing clauses
      else
        r.worsen(f.boundary ? Report::Status::Partial : Report::Status::Fail);
    }
    r.add_finding(std::move(entry));
  }
  if (psi) {
    const bool prec = preceq_matches_leq(model);
    r.add_finding({{"conjunct", "preceq-vs-leq"}, {"holds", prec}});
    if (!prec) r.worsen(Report::Status::Fail);
  }
  return emit(r, timer, json_mode);
}

int cmd_verify_sublemma(const std::string& tiles_path, std::uint64_t kmax, std::uint64_t size,
                        bool json_mode) {
  Timer timer;
  const TileSet ts = load_tileset(tiles_path);
  const std::uint64_t n = size > 0 ? size : grid::above(grid::above(kmax)) + 3;
  const TileGrid g = window_for(ts, n, false);
  const auto model = build_countermodel(ts, g, n);

  bool all_equal = true;
  json rows = json::array();
  std::string csv = "k,right,right_prime,above,above_prime\n";
  for (std::uint64_t k = 0; k <= kmax; ++k) {
    const std::uint64_t r = grid::right(k), rp = right_prime(model, k);
    const std::uint64_t a = grid::above(k), ap = above_prime(model, k);
    all_equal &= r == rp && a == ap;
    rows.push_back({{"k", k}, {"right", r}, {"right_prime", rp}, {"above", a}, {"above_prime", ap}});
    csv += std::to_string(k) + "," + std::to_string(r) + "," + std::to_string(rp) + "," +
           std::to_string(a) + "," + std::to_string(ap) + "\n";
  }
  if (json_mode) {
    Report r;
    r.command = "verify-sublemma";
    r.status = all_equal ? Report::Status::Pass : Report::Status::Fail;
    r.findings = rows;
    return emit(r, timer, true);
  }
  std::cout << csv;
  std::cout << (all_equal ? "PASS" : "FAIL") << " (N=" << n << ")\n";
  return all_equal ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tile-set to two-variable intuitionistic formula compiler and finite model checker"};
  app.require_subcommand(1);
  std::function<int()> run;

  bool json_mode = false;
  std::string tiles_path, machine_path, model_path, conjunct, formula_text;
  std::vector<std::string> fixes;
  std::uint64_t upto = 21, steps = 10, n = 25, margin = 3, kmax = 12, size = 0;
  int rows = 10, width = 4, height = 4, world = -1;
  bool psi = false, positive = false, pin_origin = false;

  auto* grid_cmd = app.add_subcommand("grid", "print the enumeration table as CSV");
  grid_cmd->add_option("--upto", upto, "largest index");
  grid_cmd->add_flag("--json", json_mode);
  grid_cmd->callback([&] { run = [&] { return cmd_grid(upto, json_mode); }; });

  auto* reduce = app.add_subcommand("reduce", "compile a tile set into a formula");
  reduce->add_option("--tiles", tiles_path, "tile set file")->required();
  reduce->add_flag("--psi", psi, "the boundary-condition variant");
  reduce->add_flag("--phi", "the plain variant (default)");
  reduce->add_flag("--positive", positive, "replace bot by forall x. Q'(x)");
  reduce->add_option("--conjunct", conjunct, "print one named conjunct");
  reduce->callback([&] { run = [&] { return cmd_reduce(tiles_path, psi, positive, conjunct); }; });

  auto* solve = app.add_subcommand("tile-solve", "search a finite window tiling");
  solve->add_option("--tiles", tiles_path)->required();
  solve->add_option("--width", width);
  solve->add_option("--height", height);
  solve->add_option("--fix", fixes, "pin a cell, i,j=tile");
  solve->add_flag("--json", json_mode);
  solve->callback([&] { run = [&] { return cmd_tile_solve(tiles_path, width, height, fixes, json_mode); }; });

  auto* tmrun = app.add_subcommand("tm-run", "run a machine on the blank tape");
  tmrun->add_option("machine", machine_path)->required();
  tmrun->add_option("--steps", steps);
  tmrun->add_flag("--json", json_mode);
  tmrun->callback([&] { run = [&] { return cmd_tm_run(machine_path, steps, json_mode); }; });

  auto* tmtiles = app.add_subcommand("tm-tiles", "compile a machine into a tile set");
  tmtiles->add_option("machine", machine_path)->required();
  tmtiles->callback([&] { run = [&] { return cmd_tm_tiles(machine_path); }; });

  auto* vtm = app.add_subcommand("verify-tm", "check that row words replay the computation");
  vtm->add_option("machine", machine_path)->required();
  vtm->add_option("--rows", rows);
  vtm->add_flag("--json", json_mode);
  vtm->callback([&] { run = [&] { return cmd_verify_tm(machine_path, rows, json_mode); }; });

  auto* mbuild = app.add_subcommand("model-build", "emit the truncated countermodel as a model file");
  mbuild->add_option("--tiles", tiles_path)->required();
  mbuild->add_option("--size", n, "truncation size N")->required();
  mbuild->add_flag("--pin-origin", pin_origin, "force t_0 at cell (0,0)");
  mbuild->callback([&] { run = [&] { return cmd_model_build(tiles_path, n, pin_origin); }; });

  auto* mcheck = app.add_subcommand("model-check", "validate a model file and evaluate a formula");
  mcheck->add_option("model", model_path)->required();
  mcheck->add_option("formula", formula_text, "formula text (optional)");
  mcheck->add_option("--world", world, "evaluate at one world instead of everywhere");
  mcheck->add_flag("--json", json_mode);
  mcheck->callback([&] { run = [&] { return cmd_model_check(model_path, formula_text, world, json_mode); }; });

  auto* vl1 = app.add_subcommand("verify-lemma1", "evaluate every named conjunct on the countermodel");
  vl1->add_option("--tiles", tiles_path)->required();
  vl1->add_option("--size", n, "truncation size N");
  vl1->add_option("--margin", margin, "boundary classification margin");
  vl1->add_flag("--psi", psi, "include the boundary-condition conjuncts");
  vl1->add_flag("--json", json_mode);
  vl1->callback([&] { run = [&] { return cmd_verify_lemma1(tiles_path, n, margin, psi, json_mode); }; });

  auto* vsub = app.add_subcommand("verify-sublemma", "compare reconstructed and arithmetic neighbours");
  vsub->add_option("--tiles", tiles_path)->required();
  vsub->add_option("--kmax", kmax, "largest index to compare");
  vsub->add_option("--size", size, "override the truncation size");
  vsub->add_flag("--json", json_mode);
  vsub->callback([&] { run = [&] { return cmd_verify_sublemma(tiles_path, kmax, size, json_mode); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  try {
    return run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
