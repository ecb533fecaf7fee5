#include "pcopt/generators.hpp"
#include "pcopt/io.hpp"
#include "pcopt/serialize.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

using namespace pcopt;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string &args) {
  const std::string cmd = std::string(PCOPT_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string scratch(const std::string &name) {
  const auto dir = std::filesystem::path("cli_scratch");
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

void write(const std::string &path, const std::string &text) { std::ofstream(path) << text; }

} // namespace

TEST_CASE("exact on an edge list file") {
  const std::string path = scratch("k23.txt");
  write(path, format_edge_list(complete_bipartite_graph(2, 3)));
  const Run r = run("exact -i " + path);
  CHECK(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["value"] == 3);
  CHECK(j["exact"] == true);
}

TEST_CASE("construct, feasible, bounds") {
  const Run tree = run("construct --class tree --gen \"star 4\"");
  CHECK(tree.status == 0);
  CHECK(Json::parse(tree.out)["value"] == 6);

  CHECK(run("feasible -p 1 -q 1 --gen \"complete_bipartite 2 3\"").status == 1);
  const Run yes = run("feasible -p 2 -q 1 --gen \"complete_bipartite 2 3\"");
  CHECK(yes.status == 0);
  CHECK(Json::parse(yes.out)["feasible"] == true);
  CHECK(run("feasible -p 1 -q 1 --format text --gen \"complete_bipartite 2 3\"").out == "infeasible\n");

  const Json b = Json::parse(run("bounds --gen \"cycle 8\"").out);
  CHECK(b["lower"] == 3);
  CHECK(b["upper"] == 4);
}

TEST_CASE("tables exit zero") {
  const Run r = run("tables");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("family,", 0) == 0);
}

TEST_CASE("gen round trips") {
  for (const std::string spec : {"complete_bipartite 3 4", "random_connected 9 30", "clique_cycle_blowup 1 2 1 2 1"}) {
    const Graph expected = generate_from_spec(spec, 5);
    const std::string el = scratch("gen.txt");
    const std::string g6 = scratch("gen.g6");
    CHECK(run("gen --seed 5 --gen \"" + spec + "\" -o " + el).status == 0);
    CHECK(run("gen --seed 5 --graph-format graph6 --gen \"" + spec + "\" -o " + g6).status == 0);
    CHECK(load_graph(el, GraphFormat::edge_list) == expected);
    CHECK(load_graph(g6, GraphFormat::graph6) == expected);
    CHECK(load_graph(g6) == expected);
  }
}

TEST_CASE("printed certificates re-validate through check") {
  for (const std::string cmd : {"exact --gen \"path 6\"", "exact --prime --gen \"cycle 5\"",
                                "construct --gen \"complete_bipartite 2 7\"",
                                "construct --gen \"clique_cycle_blowup 2 2 2 2 2\"", "construct --gen \"complete 4\""}) {
    const std::string cert = scratch("cert.json");
    const std::string coloring = scratch("cert.col");
    const Run made = run(cmd + " --emit-coloring " + coloring);
    REQUIRE(made.status == 0);
    write(cert, made.out);
    const Run checked = run("check --certificate " + cert);
    CHECK(checked.status == 0);
    CHECK(Json::parse(checked.out)["certificate_valid"] == true);

    const std::string graph = scratch("cert.txt");
    write(graph, format_edge_list(certificate_from_json(Json::parse(made.out)).first));
    CHECK(run("check -i " + graph + " --coloring " + coloring).status == 0);
  }
}

TEST_CASE("tampered certificate fails check") {
  const std::string cert = scratch("bad.json");
  Json j = Json::parse(run("exact --gen \"path 5\"").out);
  j["assignments"] = Json::array();
  j["value"] = 0;
  write(cert, j.dump());
  CHECK(run("check --certificate " + cert).status == 1);
}

TEST_CASE("exit codes") {
  CHECK(run("check --gen \"path 3\"").status == 1);
  CHECK(run("check --gen \"complete 4\"").status == 0);
  CHECK(run("exact -i /nonexistent/file").status == 2);
  const std::string junk = scratch("junk.txt");
  write(junk, "3 1\n0 7\n");
  CHECK(run("exact -i " + junk).status == 2);
  CHECK(run("exact").status == 2);
  CHECK(run("exact -i " + junk + " --gen \"path 3\"").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("exact --max-candidates 1 --gen \"complete_bipartite 3 3\"").status == 3);
  CHECK(run("construct --class tree --gen \"cycle 5\"").status == 4);
  const std::string split = scratch("split.txt");
  write(split, "4 2\n0 1\n2 3\n");
  CHECK(run("exact -i " + split).status == 4);
}

TEST_CASE("verify-sweep") {
  const Run r = run("verify-sweep complete-zero --max-n 5");
  CHECK(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["failed"] == 0);
  CHECK(j["checked"].get<int>() > 0);
  CHECK(run("verify-sweep nonsense").status == 2);
}
