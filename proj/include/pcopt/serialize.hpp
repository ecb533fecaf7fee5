#pragma once

#include "pcopt/check.hpp"
#include "pcopt/construct.hpp"
#include "pcopt/properties.hpp"
#include "pcopt/search.hpp"

#include <json.hpp>

#include <utility>

namespace pcopt {

using Json = nlohmann::ordered_json;

// {n, edges, value, p, q, assignments:[[u,v,c]...], evidence, lower_bound_proof, ...}
Json certificate_to_json(const Graph &g, const Certificate &cert);
// Inverse of certificate_to_json; throws ParseError on malformed input.
std::pair<Graph, Certificate> certificate_from_json(const Json &j);

// {properly_connected, violating_pair, checked_pairs}
Json report_to_json(const ConnectivityReport &report);
Json bounds_to_json(const Bounds &b);
Json stats_to_json(const GraphStats &s);
Json recoloring_to_json(const Recoloring &r);

} // namespace pcopt
