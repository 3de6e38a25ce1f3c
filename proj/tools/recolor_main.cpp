// Command-line front end; talks to the core exclusively through the C API in
// recolor.h.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "recolor.h"

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(2);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Owned {
  char* ptr = nullptr;
  ~Owned() { rc_string_free(ptr); }
};

struct InstanceHandle {
  rc_instance* inst = nullptr;
  ~InstanceHandle() { rc_instance_free(inst); }
};

struct SequenceHandle {
  rc_sequence* seq = nullptr;
  ~SequenceHandle() { rc_sequence_free(seq); }
};

int load_instance(const std::string& path, InstanceHandle& handle) {
  std::string text = read_input(path);
  Owned err;
  rc_status st = rc_instance_parse(text.c_str(), &handle.inst, &err.ptr);
  if (st != RC_OK) {
    std::cerr << "error: " << (err.ptr ? err.ptr : "parse failure") << "\n";
    return st;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"list-recoloring sequence synthesis for sparse graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", rc_version());

  // solve
  auto* solve = app.add_subcommand("solve", "synthesize a bounded recoloring sequence");
  std::string solve_theorem = "1";
  std::string solve_input;
  solve->add_option("--theorem", solve_theorem, "1, 2, 3 or baseline")->required();
  solve->add_option("instance", solve_input, "instance file (default stdin)");

  // verify
  auto* verify = app.add_subcommand("verify", "replay and validate a sequence");
  int verify_bound = 0;
  std::string verify_instance, verify_sequence;
  verify->add_option("--bound", verify_bound, "per-vertex recoloring cap")->required();
  verify->add_option("instance", verify_instance, "instance file")->required();
  verify->add_option("sequence", verify_sequence, "sequence file (default stdin)");

  // mad
  auto* mad = app.add_subcommand("mad", "exact maximum average degree");
  bool mad_enumerate = false;
  std::string mad_input;
  mad->add_flag("--enumerate", mad_enumerate, "use the brute-force oracle (<= 20 vertices)");
  mad->add_option("instance", mad_input, "instance file (default stdin)");

  // girth
  auto* girth_cmd = app.add_subcommand("girth", "shortest cycle length");
  std::string girth_input;
  girth_cmd->add_option("instance", girth_input, "instance file (default stdin)");

  // mad-lemma
  auto* madlem = app.add_subcommand("mad-lemma", "check mad < 2g/(g-2) on an embedded instance");
  std::string madlem_input;
  madlem->add_option("instance", madlem_input, "instance file (default stdin)");

  // find-config
  auto* findcfg = app.add_subcommand("find-config", "locate a reducible configuration");
  int findcfg_theorem = 1;
  std::string findcfg_input;
  findcfg->add_option("--theorem", findcfg_theorem, "1, 2 or 3")->required();
  findcfg->add_option("instance", findcfg_input, "instance file (default stdin)");

  // discharge
  auto* discharge = app.add_subcommand("discharge", "run a discharging audit");
  std::string discharge_lemma, discharge_input;
  discharge->add_option("--lemma", discharge_lemma, "girth4, mad175 or mad229")->required();
  discharge->add_option("instance", discharge_input, "instance file (default stdin)");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "brute-force recoloring-graph queries");
  std::string oracle_mode, oracle_input;
  int64_t oracle_cap = 0;
  oracle->add_option("mode", oracle_mode, "space, distance or diameter")->required();
  oracle->add_option("instance", oracle_input, "instance file (default stdin)");
  oracle->add_option("--state-cap", oracle_cap, "state count ceiling (default 2e6)");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a deterministic instance");
  std::string gen_model, gen_base = "", gen_lists = "shared", gen_colors = "greedy";
  std::string gen_mad = "22/9";
  int gen_n = 0, gen_rows = 0, gen_cols = 0, gen_t = 1, gen_k = 4, gen_edges = 0,
      gen_maxdeg = 0;
  uint64_t gen_seed = 1;
  gen->add_option("--model", gen_model,
                  "path|cycle|grid|hex-patch|k4|cube|petersen|dodecahedron|subdivided|"
                  "random-sparse|random")
      ->required();
  gen->add_option("--n", gen_n, "vertex count (path, cycle, random models)");
  gen->add_option("--rows", gen_rows, "grid/hex rows");
  gen->add_option("--cols", gen_cols, "grid/hex cols");
  gen->add_option("--t", gen_t, "subdivisions per edge");
  gen->add_option("--base", gen_base, "subdivision base: k4|cube|petersen|dodecahedron|cubic:<n>");
  gen->add_option("--edges", gen_edges, "random model edge count");
  gen->add_option("--maxdeg", gen_maxdeg, "random model degree cap");
  gen->add_option("--mad", gen_mad, "random-sparse density ceiling p/q");
  gen->add_option("--k", gen_k, "list size");
  gen->add_option("--lists", gen_lists, "shared|random");
  gen->add_option("--colors", gen_colors, "greedy|disjoint|random");
  gen->add_option("--seed", gen_seed, "64-bit seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (solve->parsed()) {
    InstanceHandle inst;
    if (int st = load_instance(solve_input, inst)) return st;
    int theorem;
    if (solve_theorem == "baseline") theorem = 0;
    else if (solve_theorem == "1" || solve_theorem == "2" || solve_theorem == "3")
      theorem = std::stoi(solve_theorem);
    else {
      std::cerr << "error: --theorem must be 1, 2, 3 or baseline\n";
      return 2;
    }
    SequenceHandle seq;
    Owned err;
    rc_status st = rc_solve(inst.inst, theorem, &seq.seq, &err.ptr);
    if (st != RC_OK) {
      std::cerr << "error: " << (err.ptr ? err.ptr : "solve failed") << "\n";
      return st;
    }
    Owned text{rc_sequence_emit(seq.seq)};
    std::cout << text.ptr;
    return 0;
  }

  if (verify->parsed()) {
    InstanceHandle inst;
    if (int st = load_instance(verify_instance, inst)) return st;
    std::string seq_text = read_input(verify_sequence);
    SequenceHandle seq;
    Owned err;
    rc_status st = rc_sequence_parse(inst.inst, seq_text.c_str(), &seq.seq, &err.ptr);
    if (st != RC_OK) {
      std::cerr << "error: " << (err.ptr ? err.ptr : "sequence parse failure") << "\n";
      return st;
    }
    Owned report;
    st = rc_verify(inst.inst, seq.seq, verify_bound, &report.ptr);
    std::cout << (report.ptr ? report.ptr : "") << "\n";
    return st;
  }

  auto run_measure = [&](const std::string& input, auto&& fn) -> int {
    InstanceHandle inst;
    if (int st = load_instance(input, inst)) return st;
    Owned result, err;
    rc_status st = fn(inst.inst, result, err);
    if (result.ptr) std::cout << result.ptr << (result.ptr[strlen(result.ptr) - 1] == '\n' ? "" : "\n");
    if (st != RC_OK && err.ptr) std::cerr << "error: " << err.ptr << "\n";
    return st;
  };

  if (mad->parsed())
    return run_measure(mad_input, [&](rc_instance* i, Owned& r, Owned& e) {
      return rc_mad(i, mad_enumerate ? 1 : 0, &r.ptr, &e.ptr);
    });

  if (girth_cmd->parsed())
    return run_measure(girth_input, [&](rc_instance* i, Owned& r, Owned& e) {
      return rc_girth(i, &r.ptr, &e.ptr);
    });

  if (madlem->parsed())
    return run_measure(madlem_input, [&](rc_instance* i, Owned& r, Owned& e) {
      return rc_mad_lemma(i, &r.ptr, &e.ptr);
    });

  if (findcfg->parsed())
    return run_measure(findcfg_input, [&](rc_instance* i, Owned& r, Owned& e) {
      return rc_find_config(i, findcfg_theorem, &r.ptr, &e.ptr);
    });

  if (discharge->parsed()) {
    InstanceHandle inst;
    if (int st = load_instance(discharge_input, inst)) return st;
    Owned ledger, report, err;
    rc_status st =
        rc_discharge(inst.inst, discharge_lemma.c_str(), &ledger.ptr, &report.ptr, &err.ptr);
    if (ledger.ptr) std::cout << ledger.ptr;
    if (report.ptr) std::cout << report.ptr;
    if (st != RC_OK && err.ptr) std::cerr << "error: " << err.ptr << "\n";
    return st;
  }

  if (oracle->parsed()) {
    InstanceHandle inst;
    if (int st = load_instance(oracle_input, inst)) return st;
    Owned result, err;
    rc_status st = rc_oracle(inst.inst, oracle_mode.c_str(), oracle_cap, &result.ptr, &err.ptr);
    if (result.ptr) std::cout << result.ptr;
    if (st != RC_OK && err.ptr) std::cerr << "error: " << err.ptr << "\n";
    return st;
  }

  if (gen->parsed()) {
    std::ostringstream spec;
    spec << "model=" << gen_model;
    if (gen_n) spec << " n=" << gen_n;
    if (gen_rows) spec << " rows=" << gen_rows;
    if (gen_cols) spec << " cols=" << gen_cols;
    spec << " t=" << gen_t;
    if (!gen_base.empty()) spec << " base=" << gen_base;
    if (gen_edges) spec << " edges=" << gen_edges;
    if (gen_maxdeg) spec << " maxdeg=" << gen_maxdeg;
    spec << " mad=" << gen_mad << " k=" << gen_k << " lists=" << gen_lists
         << " colors=" << gen_colors;
    Owned text, err;
    rc_status st = rc_generate(spec.str().c_str(), gen_seed, &text.ptr, &err.ptr);
    if (st != RC_OK) {
      std::cerr << "error: " << (err.ptr ? err.ptr : "generation failed") << "\n";
      return st;
    }
    std::cout << text.ptr;
    return 0;
  }

  return 2;
}
