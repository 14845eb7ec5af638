#pragma once

#include <nlohmann/json.hpp>

#include "indcomplex/fold.hpp"
#include "indcomplex/graph.hpp"
#include "indcomplex/homology.hpp"
#include "indcomplex/verify.hpp"
#include "indcomplex/wedge.hpp"

namespace indcomplex {

using nlohmann::json;

/// {"n", "k", "family", "vertices": [[x, y], ...], "edges": [[i, j], ...]}
/// with 0-based indices into "vertices". "family" is omitted for graphs
/// without provenance.
json graph_to_json(const Graph& g);

/// Accepts vertices in any order (they are sorted and the edges remapped).
/// Missing "n"/"k" default to the largest coordinates. Throws
/// std::invalid_argument on malformed input.
Graph graph_from_json(const json& j);

json move_to_json(const Move& move);
json trace_to_json(const ReductionTrace& trace);

/// {"dim": multiplicity, ...}
json wedge_to_json(const WedgeOfSpheres& wedge);
json betti_to_json(const std::map<int, std::uint64_t>& betti);
json profile_to_json(const BettiProfile& profile);

json report_to_json(const VerificationReport& report);

}  // namespace indcomplex
