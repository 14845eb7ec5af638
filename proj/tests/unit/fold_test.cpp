#include <doctest.h>

#include <algorithm>
#include <random>

#include <indcomplex/fold.hpp>
#include <indcomplex/homology.hpp>

#include "../support.hpp"

using namespace indcomplex;

namespace {

// Least (w, v) fold pair from the brute-force pair list, twins resolved
// towards removing the larger index.
std::optional<std::pair<int, int>> expected_fold(const Graph& g) {
    const auto pairs = oracle::fold_pairs(support::to_simple(g));
    std::optional<std::pair<int, int>> best;
    for (const auto& [v, w] : pairs) {
        const bool twin = std::find(pairs.begin(), pairs.end(), std::pair{w, v}) != pairs.end();
        if (twin && w < v) continue;
        if (!best || std::pair{w, v} < std::pair{best->second, best->first}) best = std::pair{v, w};
    }
    return best;
}

Graph random_subgraph(std::mt19937_64& rng, int n, int k, double keep) {
    const Graph g = build_gamma(n, k);
    std::vector<Vertex> drop;
    std::bernoulli_distribution coin(keep);
    for (const Vertex& v : g.vertices())
        if (!coin(rng)) drop.push_back(v);
    return delete_coordinates(g, drop);
}

}  // namespace

TEST_CASE("find_fold examples") {
    // N(1) = N(3) = {2}: twins, the larger one goes.
    CHECK(find_fold(support::path(3)) == std::pair{0, 2});
    CHECK_FALSE(find_fold(support::k2()).has_value());
    CHECK(find_fold(support::edgeless(2)) == std::pair{0, 1});
}

TEST_CASE("find_fold agrees with brute force over all ordered pairs") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const Graph g = random_subgraph(rng, n, 4, 0.7);
        CHECK(find_fold(g) == expected_fold(g));
    }
}

TEST_CASE("reduce examples") {
    const ReductionTrace x1 = reduce(build_family(Family::x(1)));
    CHECK(x1.contractible);
    REQUIRE(x1.moves.size() == 1);
    CHECK(x1.moves[0] == Move::cone({1, 2}));

    const ReductionTrace y1 = reduce(build_family(Family::y(1)));
    CHECK_FALSE(y1.contractible);
    CHECK(y1.suspensions == 2);
    CHECK(y1.residual.empty());
    CHECK(homotopy_type_if_closed(y1) == WedgeOfSpheres::sphere(1));

    const ReductionTrace x2 = reduce(build_family(Family::x(2)));
    CHECK_FALSE(x2.contractible);
    const BettiProfile via = betti_over_field(x2.residual, 2).shifted(x2.suspensions);
    CHECK(via.reduced_betti == std::map<int, std::uint64_t>{{2, 1}});
}

TEST_CASE("homotopy_type_if_closed") {
    ReductionTrace t;
    t.contractible = true;
    CHECK(homotopy_type_if_closed(t) == WedgeOfSpheres::point());

    t = {};
    t.suspensions = 2;
    CHECK(homotopy_type_if_closed(t) == WedgeOfSpheres::sphere(1));

    t = {};
    CHECK(homotopy_type_if_closed(t) == WedgeOfSpheres::sphere(-1));

    t = {};
    t.residual = build_gamma(2, 2);
    CHECK_FALSE(homotopy_type_if_closed(t).has_value());
}

TEST_CASE("reduce: termination bound, determinism and residual invariants") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const Graph g = random_subgraph(rng, n, 6, 0.75);
        const ReductionTrace t = reduce(g);
        CHECK(t.moves.size() <= g.size());
        CHECK(reduce(g) == t);
        const auto strips = std::count_if(t.moves.begin(), t.moves.end(),
                                          [](const Move& m) { return m.kind == MoveKind::StripK2; });
        CHECK(strips == t.suspensions);
        if (t.contractible) {
            CHECK(t.moves.back().kind == MoveKind::Cone);
            continue;
        }
        CHECK_FALSE(find_fold(t.residual).has_value());
        for (int v = 0; v < static_cast<int>(t.residual.size()); ++v) {
            CHECK(t.residual.degree(v) > 0);
            if (t.residual.degree(v) == 1) CHECK(t.residual.degree(t.residual.neighbors(v)[0]) > 1);
        }
    }
}

TEST_CASE("fold moves are recorded with their precondition") {
    // Replay: each fold's N(v) must be inside N(w) in the state it was applied to.
    const Graph g = build_gamma(4, 6);
    const ReductionTrace t = reduce(g);
    Graph state = g;
    for (const Move& m : t.moves) {
        if (m.kind == MoveKind::Fold) {
            const int v = state.require_index(m.first);
            const int w = state.require_index(m.second);
            const auto nv = neighborhood(state, v, false);
            const auto nw = neighborhood(state, w, false);
            CHECK(std::includes(nw.begin(), nw.end(), nv.begin(), nv.end()));
            const Vertex removed[] = {m.second};
            state = delete_coordinates(state, removed);
        } else if (m.kind == MoveKind::StripK2) {
            const int a = state.require_index(m.first);
            const int b = state.require_index(m.second);
            CHECK(state.adjacent(a, b));
            CHECK(state.degree(a) == 1);
            CHECK(state.degree(b) == 1);
            const Vertex removed[] = {m.first, m.second};
            state = delete_coordinates(state, removed);
        }
    }
    CHECK(state == t.residual);
}

TEST_CASE("X(n): odd n reduce to a cone") {
    for (int n = 1; n <= 15; n += 2) CHECK(reduce(build_family(Family::x(n))).contractible);
}
