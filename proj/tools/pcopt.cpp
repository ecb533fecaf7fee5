// Command line front end: check, exact, construct, feasible, bounds, tables,
// gen and verify-sweep over edge-list / graph6 inputs.

#include "pcopt/check.hpp"
#include "pcopt/construct.hpp"
#include "pcopt/error.hpp"
#include "pcopt/generators.hpp"
#include "pcopt/io.hpp"
#include "pcopt/properties.hpp"
#include "pcopt/search.hpp"
#include "pcopt/serialize.hpp"
#include "pcopt/sweep.hpp"
#include "pcopt/tables.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace pcopt;

struct InputOptions {
  std::string path;
  std::string generator;
  std::string format = "auto";
  std::optional<std::uint64_t> seed;
};

struct Options {
  InputOptions input;
  std::string output_format = "json";
  std::string table_format = "csv";
  bool prime = false;
  bool at_most = false;
  int budget = -1;
  std::uint64_t max_candidates = 0;
  double time_limit = 0;
  std::size_t tree_budget = 100000;
  int jobs = 1;
  std::string coloring_path;
  std::string certificate_path;
  std::string emit_coloring;
  bool with_paths = false;
  std::string construct_class = "auto";
  int p = 0;
  int q = 0;
  std::string graph_format = "edgelist";
  std::string output_path;
  std::string suite;
  int max_n = 0;
};

void add_input(CLI::App *cmd, InputOptions &in) {
  cmd->add_option("-i,--input", in.path, "graph file (edge list or graph6)");
  cmd->add_option("--gen", in.generator, "generator spec, e.g. \"complete_bipartite 2 3\"");
  cmd->add_option("--input-format", in.format, "auto, edgelist or graph6")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
  cmd->add_option("--seed", in.seed, "seed for random generators");
}

Graph load_input(const InputOptions &in) {
  const bool has_file = !in.path.empty();
  const bool has_gen = !in.generator.empty();
  if (has_file == has_gen)
    throw ParseError("give exactly one input source: --input <file> or --gen <spec>");
  if (has_gen)
    return generate_from_spec(in.generator, in.seed);
  return load_graph(in.path, parse_graph_format(in.format));
}

SearchBudget budget_of(const Options &o) {
  SearchBudget b;
  b.max_total_cost = o.budget;
  if (o.max_candidates > 0)
    b.max_candidates = o.max_candidates;
  if (o.time_limit > 0)
    b.time_limit_seconds = o.time_limit;
  return b;
}

void emit(const Json &j) { std::cout << j.dump() << '\n'; }

void maybe_write_coloring(const Options &o, const Graph &g, const Certificate &cert) {
  if (o.emit_coloring.empty())
    return;
  std::ofstream out(o.emit_coloring);
  if (!out)
    throw ParseError("cannot write '" + o.emit_coloring + "'");
  const Recoloring empty;
  out << format_coloring(g, apply_recoloring(g, cert.witness ? *cert.witness : empty));
}

int run_check(const Options &o) {
  if (!o.certificate_path.empty()) {
    const auto [g, cert] = certificate_from_json(Json::parse(read_file(o.certificate_path), nullptr, false));
    const auto failure = certificate_failure(g, cert);
    const Recoloring empty;
    const auto report = is_properly_connected(g, apply_recoloring(g, cert.witness ? *cert.witness : empty), o.with_paths);
    Json j = report_to_json(report);
    j["certificate_valid"] = !failure.has_value();
    if (failure)
      j["certificate_failure"] = *failure;
    emit(j);
    return failure ? 1 : 0;
  }
  const Graph g = load_input(o.input);
  const EdgeColoring c = o.coloring_path.empty() ? EdgeColoring::monochromatic(g) : load_coloring(g, o.coloring_path);
  const auto report = is_properly_connected(g, c, o.with_paths);
  emit(report_to_json(report));
  return report.properly_connected ? 0 : 1;
}

int run_exact(const Options &o) {
  const Graph g = load_input(o.input);
  const Certificate cert = o.prime ? pc_opt_prime_exact(g, budget_of(o)) : pc_opt_exact(g, budget_of(o));
  maybe_write_coloring(o, g, cert);
  emit(certificate_to_json(g, cert));
  return 0;
}

int run_construct(const Options &o) {
  const Graph g = load_input(o.input);
  const Construction built = construct(g, parse_construct_class(o.construct_class),
                                       o.prime ? Variant::prime : Variant::opt, budget_of(o));
  maybe_write_coloring(o, g, built.certificate);
  Json j = certificate_to_json(g, built.certificate);
  j["method"] = built.method;
  emit(j);
  return 0;
}

int run_feasible(const Options &o) {
  const Graph g = load_input(o.input);
  const auto witness = feasible(g, o.p, o.q, o.at_most ? Semantics::at_most : Semantics::exact, budget_of(o));
  if (o.output_format == "text") {
    if (witness) {
      for (const auto &a : witness->assignments())
        std::cout << a.edge.u << ' ' << a.edge.v << ' ' << a.color << '\n';
    } else {
      std::cout << "infeasible\n";
    }
  } else {
    Json j;
    j["p"] = o.p;
    j["q"] = o.q;
    j["semantics"] = o.at_most ? "at_most" : "exact";
    j["feasible"] = witness.has_value();
    if (witness)
      j["assignments"] = recoloring_to_json(*witness);
    else
      j["result"] = "infeasible";
    emit(j);
  }
  return witness ? 0 : 1;
}

int run_bounds(const Options &o) {
  const Graph g = load_input(o.input);
  emit(bounds_to_json(bounds(g, o.tree_budget)));
  return 0;
}

int run_tables(const Options &o) {
  const auto rows = known_value_rows();
  if (o.table_format == "text") {
    std::cout << rows_to_text(rows);
  } else if (o.table_format == "json") {
    for (const auto &r : rows)
      emit({{"family", r.family}, {"params", r.params}, {"objective", r.objective}, {"method", r.method},
            {"constructive", r.constructive}, {"exact", r.exact}, {"expected", r.expected}, {"match", r.match}});
  } else {
    std::cout << rows_to_csv(rows);
  }
  int status = 0;
  for (const auto &r : rows)
    if (!r.match) {
      std::cerr << "mismatch: " << r.family << ' ' << r.params << ' ' << r.objective << " constructive="
                << r.constructive << " exact=" << r.exact << " expected=" << r.expected << '\n';
      status = 1;
    }
  return status;
}

int run_gen(const Options &o) {
  const Graph g = load_input(o.input);
  const std::string text = o.graph_format == "graph6" ? format_graph6(g) + "\n" : format_edge_list(g);
  if (o.output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output_path);
    if (!out)
      throw ParseError("cannot write '" + o.output_path + "'");
    out << text;
  }
  return 0;
}

int run_sweep_cmd(const Options &o) {
  const SweepResult result = run_sweep(o.suite, o.max_n, o.input.seed.value_or(1));
  Json j;
  j["suite"] = result.suite;
  j["checked"] = result.checked;
  j["passed"] = result.checked - result.failed;
  j["failed"] = result.failed;
  j["first_failure"] = result.first_failure ? Json(*result.first_failure) : Json(nullptr);
  emit(j);
  return result.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Optimal proper connection of monochromatic graphs"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App *cmd) {
    cmd->add_option("--format", o.output_format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--jobs", o.jobs, "worker cap (engines run sequentially)")->check(CLI::PositiveNumber);
  };
  auto search_opts = [&](CLI::App *cmd) {
    cmd->add_option("--budget", o.budget, "largest total cost (prime: edge count) to try; default 2n");
    cmd->add_option("--max-candidates", o.max_candidates, "cap on checked recolorings");
    cmd->add_option("--time-limit", o.time_limit, "wall-clock limit in seconds");
  };

  auto *check = app.add_subcommand("check", "report whether a colored graph is properly connected");
  add_input(check, o.input);
  common(check);
  check->add_option("--coloring", o.coloring_path, "coloring file with lines 'u v c'");
  check->add_option("--certificate", o.certificate_path, "re-validate a certificate JSON file");
  check->add_flag("--paths", o.with_paths, "include a witness path for every pair");

  auto *exact = app.add_subcommand("exact", "exhaustive optimum with certificate");
  add_input(exact, o.input);
  common(exact);
  search_opts(exact);
  exact->add_flag("--prime", o.prime, "minimise recolored edges only");
  exact->add_option("--emit-coloring", o.emit_coloring, "also write the witness as a coloring file");

  auto *build = app.add_subcommand("construct", "polynomial-time constructive recoloring");
  add_input(build, o.input);
  common(build);
  search_opts(build);
  build->add_flag("--prime", o.prime, "minimise recolored edges only");
  build->add_option("--class", o.construct_class, "auto|tree|complete-bipartite|alpha2|good-edge|bipartite-spanning");
  build->add_option("--emit-coloring", o.emit_coloring, "also write the witness as a coloring file");

  auto *feas = app.add_subcommand("feasible", "search for a (p,q) recoloring");
  add_input(feas, o.input);
  common(feas);
  search_opts(feas);
  feas->add_option("-p", o.p, "recolored edges")->required();
  feas->add_option("-q", o.q, "new colors")->required();
  feas->add_flag("--at-most", o.at_most, "accept p' <= p and q' <= q");

  auto *bnd = app.add_subcommand("bounds", "diameter lower bound and spanning-tree upper bound");
  add_input(bnd, o.input);
  common(bnd);
  bnd->add_option("--tree-budget", o.tree_budget, "maximum spanning trees examined");

  auto *tables = app.add_subcommand("tables", "reproduce known values for small families");
  tables->add_option("--format", o.table_format, "csv, text or json")->check(CLI::IsMember({"json", "csv", "text"}));
  tables->add_option("--jobs", o.jobs, "worker cap (engines run sequentially)")->check(CLI::PositiveNumber);

  auto *gen = app.add_subcommand("gen", "write a generated family graph");
  add_input(gen, o.input);
  gen->add_option("--graph-format", o.graph_format, "edgelist or graph6")->check(CLI::IsMember({"edgelist", "graph6"}));
  gen->add_option("-o,--output", o.output_path, "output file (default stdout)");

  auto *sweep = app.add_subcommand("verify-sweep", "run a named cross-validation suite");
  std::vector<std::string> suites;
  for (auto name : sweep_names())
    suites.emplace_back(name);
  sweep->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(suites));
  sweep->add_option("--max-n", o.max_n, "largest vertex count");
  sweep->add_option("--seed", o.input.seed, "seed for random suites");
  common(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return exit_code(ErrorKind::parse);
  }

  const bool read_certificate = check->parsed() && !o.certificate_path.empty();
  if (read_certificate && (!o.input.path.empty() || !o.input.generator.empty())) {
    std::cerr << "check: --certificate already names the graph; drop --input/--gen\n";
    return exit_code(ErrorKind::parse);
  }

  try {
    if (check->parsed())
      return run_check(o);
    if (exact->parsed())
      return run_exact(o);
    if (build->parsed())
      return run_construct(o);
    if (feas->parsed())
      return run_feasible(o);
    if (bnd->parsed())
      return run_bounds(o);
    if (tables->parsed())
      return run_tables(o);
    if (gen->parsed())
      return run_gen(o);
    if (sweep->parsed())
      return run_sweep_cmd(o);
  } catch (const BudgetError &e) {
    Json j{{"error", e.what()}, {"kind", "budget"}};
    if (e.upper_bound)
      j["upper_bound"] = *e.upper_bound;
    if (e.partial_count)
      j["partial_count"] = *e.partial_count;
    std::cerr << j.dump() << '\n';
    return exit_code(ErrorKind::budget);
  } catch (const Error &e) {
    std::cerr << Json{{"error", e.what()}, {"kind", static_cast<int>(e.kind())}}.dump() << '\n';
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception &e) {
    std::cerr << Json{{"error", e.what()}, {"kind", "parse"}}.dump() << '\n';
    return exit_code(ErrorKind::parse);
  }
  return 0;
}
