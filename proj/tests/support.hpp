#pragma once

#include <indcomplex/graph.hpp>

#include "oracles.hpp"

namespace support {

inline oracle::SimpleGraph to_simple(const indcomplex::Graph& g) {
    oracle::SimpleGraph out(static_cast<int>(g.size()));
    for (const auto& [a, b] : g.edges()) out.connect(a, b);
    return out;
}

// Path 0-1-...-(n-1).
inline indcomplex::Graph path(int n) {
    std::vector<indcomplex::Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return indcomplex::make_abstract_graph(n, edges);
}

inline indcomplex::Graph edgeless(int n) { return indcomplex::make_abstract_graph(n, {}); }

inline indcomplex::Graph k2() { return indcomplex::make_abstract_graph(2, {{0, 1}}); }

}  // namespace support
