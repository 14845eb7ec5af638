#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "indcomplex/graph.hpp"
#include "indcomplex/wedge.hpp"

namespace indcomplex {

enum class MoveKind { Fold, Cone, StripK2 };

std::string_view to_string(MoveKind kind);

/// One homotopy-preserving reduction step. Vertices are recorded by
/// coordinate so they stay meaningful after later deletions.
///   Fold:    `second` (w) removed because N(first) is contained in N(second).
///   Cone:    `first` is isolated, so the complex is a cone.
///   StripK2: {first, second} is a K2 component, removed for one suspension.
struct Move {
    MoveKind kind = MoveKind::Fold;
    Vertex first;
    Vertex second;

    static Move fold(Vertex v, Vertex w) { return {MoveKind::Fold, v, w}; }
    static Move cone(Vertex v) { return {MoveKind::Cone, v, v}; }
    static Move strip_k2(Vertex a, Vertex b) { return {MoveKind::StripK2, a, b}; }

    friend bool operator==(const Move&, const Move&) = default;
};

struct ReductionTrace {
    std::vector<Move> moves;
    int suspensions = 0;
    bool contractible = false;
    Graph residual;

    friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

/// Least (w, v) index pair with v != w and N(v) contained in N(w). When
/// N(v) == N(w) only the pair removing the larger index qualifies. Returns
/// (v, w).
std::optional<std::pair<int, int>> find_fold(const Graph& g);

/// Applies Cone, then StripK2, then Fold moves (first applicable, lowest
/// indices first) until the complex is seen to be a cone or no move applies.
/// I(g) is homotopy equivalent to the `suspensions`-fold suspension of
/// I(residual), or contractible.
ReductionTrace reduce(const Graph& g);

/// Point for contractible traces, S^(suspensions - 1) when the residual is
/// empty, nothing otherwise.
std::optional<WedgeOfSpheres> homotopy_type_if_closed(const ReductionTrace& trace);

}  // namespace indcomplex
