#include <doctest.h>

#include <indcomplex/json_io.hpp>

#include "../support.hpp"

using namespace indcomplex;

TEST_CASE("graph JSON round trip") {
    for (const Family& f : {Family::gamma(3), Family::a(2), Family::b(3)}) {
        const Graph g = build_family(f);
        const json j = graph_to_json(g);
        CHECK(j.at("n") == f.n);
        CHECK(j.at("k") == 6);
        CHECK(j.contains("family"));
        CHECK(graph_from_json(j) == g);
    }
    CHECK_FALSE(graph_to_json(support::path(3)).contains("family"));
}

TEST_CASE("graph JSON accepts unsorted vertices") {
    const json j = json::parse(R"({"vertices": [[1,2],[1,1],[2,1]], "edges": [[0,1],[1,2]]})");
    const Graph g = graph_from_json(j);
    CHECK(g.bound_n() == 2);
    CHECK(g.bound_k() == 2);
    CHECK(g.vertex(0) == Vertex{1, 1});
    CHECK(g.adjacent(g.require_index({1, 1}), g.require_index({1, 2})));
    CHECK(g.adjacent(g.require_index({1, 1}), g.require_index({2, 1})));
    CHECK_FALSE(g.adjacent(g.require_index({1, 2}), g.require_index({2, 1})));
}

TEST_CASE("graph JSON rejects malformed input") {
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"edges": []})")), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": [[1,1],[1,1]], "edges": []})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": [[1,1]], "edges": [[0,3]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": [[1]], "edges": []})")), std::invalid_argument);
}

TEST_CASE("trace JSON") {
    const json j = trace_to_json(reduce(build_family(Family::x(1))));
    CHECK(j.at("contractible") == true);
    CHECK(j.at("suspensions") == 0);
    REQUIRE(j.at("moves").size() == 1);
    CHECK(j.at("moves")[0].at("kind") == "cone");
    CHECK(j.at("moves")[0].at("v") == json::array({1, 2}));
    CHECK(j.contains("residual"));
}

TEST_CASE("profile and wedge JSON") {
    CHECK(wedge_to_json(WedgeOfSpheres::sphere(5, 3)) == json::parse(R"({"5": 3})"));
    CHECK(wedge_to_json(WedgeOfSpheres::point()) == json::object());
    const json p = profile_to_json(integral_homology(build_gamma(2, 6)));
    CHECK(p.at("reduced_betti") == json::parse(R"({"2": 1})"));
    CHECK(p.at("torsion") == json::array());
    CHECK(p.at("coefficients") == "int");
}

TEST_CASE("report JSON") {
    VerificationReport r;
    r.suite = "demo";
    r.add("b", "x", "1", "1", true);
    r.add("a", "y", "1", "2", false);
    r.skip("c", "z", "budget");
    r.finalize();
    const json j = report_to_json(r);
    CHECK(j.at("suite") == "demo");
    CHECK(j.at("passed") == false);
    CHECK(j.at("failures") == 1);
    CHECK(j.at("cases")[0].at("key") == "a");
    CHECK(j.at("budget_skips").size() == 1);
    CHECK(j.contains("runtime_seconds"));
}
