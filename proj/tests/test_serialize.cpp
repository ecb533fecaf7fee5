#include "pcopt/error.hpp"
#include "pcopt/generators.hpp"
#include "pcopt/search.hpp"
#include "pcopt/serialize.hpp"

#include <doctest.h>

using namespace pcopt;

TEST_CASE("certificate json round trip") {
  const Graph g = complete_bipartite_graph(2, 3);
  const Certificate cert = pc_opt_exact(g);
  const Json j = certificate_to_json(g, cert);
  CHECK(j["value"] == 3);
  CHECK(j["evidence"] == "exhaustive");
  CHECK(j["lower_bound_proof"] == "exhausted-below");
  CHECK(j["p"].get<int>() + j["q"].get<int>() == 3);
  const auto [g2, cert2] = certificate_from_json(Json::parse(j.dump()));
  CHECK(g2 == g);
  CHECK(cert2.value == cert.value);
  CHECK(cert2.witness == cert.witness);
  CHECK(cert2.objective == cert.objective);
  CHECK_FALSE(certificate_failure(g2, cert2).has_value());
}

TEST_CASE("certificate json rejects malformed input") {
  CHECK_THROWS_AS(certificate_from_json(Json::parse("{}")), ParseError);
  CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"n":3,"edges":[[0,5]],"objective":"total","value":0,
    "assignments":[],"evidence":"exhaustive","lower_bound_proof":"exhausted-below"})")),
                  ParseError);
  CHECK_THROWS_AS(certificate_from_json(Json::parse("[1,2]")), ParseError);
}

TEST_CASE("report json uses the documented keys") {
  const Graph p3 = path_graph(3);
  const Json j = report_to_json(is_properly_connected(p3, EdgeColoring::monochromatic(p3)));
  CHECK(j["properly_connected"] == false);
  CHECK(j["violating_pair"] == Json::array({0, 2}));
  CHECK(j.contains("checked_pairs"));
}
