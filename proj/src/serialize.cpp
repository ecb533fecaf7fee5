#include "pcopt/serialize.hpp"

#include "pcopt/error.hpp"

namespace pcopt {

Json recoloring_to_json(const Recoloring &r) {
  Json out = Json::array();
  for (const auto &a : r.assignments())
    out.push_back({a.edge.u, a.edge.v, a.color});
  return out;
}

Json certificate_to_json(const Graph &g, const Certificate &cert) {
  Json edges = Json::array();
  for (const Edge &e : g.edges())
    edges.push_back({e.u, e.v});
  const Recoloring empty;
  const Recoloring &r = cert.witness ? *cert.witness : empty;
  Json j;
  j["n"] = g.order();
  j["edges"] = std::move(edges);
  j["objective"] = std::string(to_string(cert.objective));
  j["value"] = cert.value;
  j["p"] = r.p();
  j["q"] = r.q();
  j["assignments"] = recoloring_to_json(r);
  j["evidence"] = cert.evidence;
  j["lower_bound_proof"] = std::string(to_string(cert.lower_bound_proof));
  j["exact"] = cert.exact();
  return j;
}

std::pair<Graph, Certificate> certificate_from_json(const Json &j) {
  try {
    std::vector<Edge> edges;
    for (const auto &e : j.at("edges"))
      edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    Graph g(j.at("n").get<int>(), edges);

    Certificate cert;
    cert.value = j.at("value").get<int>();
    cert.evidence = j.value("evidence", std::string("exhaustive"));
    cert.lower_bound_proof = parse_lower_bound_proof(j.value("lower_bound_proof", std::string("none")));
    const auto objective = j.value("objective", std::string("total"));
    if (objective != "total" && objective != "prime")
      throw ParseError("certificate: unknown objective '" + objective + "'");
    cert.objective = objective == "total" ? Objective::total : Objective::prime;

    std::vector<Assignment> assignments;
    for (const auto &a : j.at("assignments"))
      assignments.push_back({make_edge(a.at(0).get<int>(), a.at(1).get<int>()), a.at(2).get<int>()});
    if (!assignments.empty())
      cert.witness = Recoloring(std::move(assignments));
    return {std::move(g), std::move(cert)};
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("certificate: ") + e.what());
  } catch (const PreconditionError &e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
}

Json report_to_json(const ConnectivityReport &report) {
  Json j;
  j["properly_connected"] = report.properly_connected;
  if (report.violating_pair)
    j["violating_pair"] = {report.violating_pair->first, report.violating_pair->second};
  else
    j["violating_pair"] = nullptr;
  j["checked_pairs"] = report.checked_pairs;
  if (report.witness_paths) {
    Json paths = Json::array();
    for (const auto &[pair, path] : *report.witness_paths)
      paths.push_back({{"pair", {pair.first, pair.second}}, {"path", path}});
    j["witness_paths"] = std::move(paths);
  }
  return j;
}

Json bounds_to_json(const Bounds &b) {
  Json j;
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  j["complete"] = b.complete;
  j["exhaustive"] = b.exhaustive;
  j["trees_examined"] = b.trees_examined;
  return j;
}

Json stats_to_json(const GraphStats &s) {
  Json j;
  j["max_degree"] = s.max_degree;
  if (s.diameter)
    j["diameter"] = *s.diameter;
  else
    j["diameter"] = "inf";
  j["is_connected"] = s.is_connected;
  j["is_complete"] = s.is_complete;
  j["vertex_connectivity"] = s.vertex_connectivity;
  j["component_count"] = s.component_count;
  return j;
}

} // namespace pcopt
