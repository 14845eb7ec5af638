#include "indcomplex/json_io.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace indcomplex {

namespace {

json vertex_json(const Vertex& v) { return json::array({v.x, v.y}); }

int require_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw std::invalid_argument(std::string(what) + " must be an integer");
    return j.get<int>();
}

}  // namespace

json graph_to_json(const Graph& g) {
    json out;
    out["n"] = g.bound_n();
    out["k"] = g.bound_k();
    if (g.origin()) out["family"] = std::string(to_string(*g.origin()));
    json vertices = json::array();
    for (const Vertex& v : g.vertices()) vertices.push_back(vertex_json(v));
    json edges = json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back(json::array({a, b}));
    out["vertices"] = std::move(vertices);
    out["edges"] = std::move(edges);
    return out;
}

Graph graph_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("graph must be a JSON object");
    if (!j.contains("vertices") || !j["vertices"].is_array()) {
        throw std::invalid_argument("graph requires a \"vertices\" array");
    }
    std::vector<Vertex> vertices;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2) throw std::invalid_argument("vertex must be [x, y]");
        vertices.push_back({require_int(v[0], "vertex x"), require_int(v[1], "vertex y")});
    }
    int n = 0;
    int k = 0;
    for (const Vertex& v : vertices) {
        n = std::max(n, v.x);
        k = std::max(k, v.y);
    }
    if (j.contains("n")) n = require_int(j["n"], "n");
    if (j.contains("k")) k = require_int(j["k"], "k");

    std::optional<FamilyKind> origin;
    if (j.contains("family") && !j["family"].is_null()) {
        if (!j["family"].is_string()) throw std::invalid_argument("family must be a string");
        origin = parse_family_kind(j["family"].get<std::string>());
        if (!origin) throw std::invalid_argument("unknown family \"" + j["family"].get<std::string>() + "\"");
    }

    // Canonical vertex order, with edges remapped to it.
    std::vector<int> order(vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return vertices[a] < vertices[b]; });
    std::vector<int> position(vertices.size());
    std::vector<Vertex> sorted;
    sorted.reserve(vertices.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        position[order[i]] = static_cast<int>(i);
        sorted.push_back(vertices[order[i]]);
    }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("duplicate vertex");
    }

    std::vector<Edge> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw std::invalid_argument("\"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be [i, j]");
            const int a = require_int(e[0], "edge endpoint");
            const int b = require_int(e[1], "edge endpoint");
            if (a < 0 || b < 0 || a >= static_cast<int>(vertices.size()) || b >= static_cast<int>(vertices.size())) {
                throw std::invalid_argument("edge endpoint out of range");
            }
            edges.emplace_back(position[a], position[b]);
        }
    }
    return Graph(n, k, std::move(sorted), std::move(edges), origin);
}

json move_to_json(const Move& move) {
    json out;
    out["kind"] = std::string(to_string(move.kind));
    switch (move.kind) {
        case MoveKind::Fold:
            out["v"] = vertex_json(move.first);
            out["w"] = vertex_json(move.second);
            break;
        case MoveKind::Cone:
            out["v"] = vertex_json(move.first);
            break;
        case MoveKind::StripK2:
            out["a"] = vertex_json(move.first);
            out["b"] = vertex_json(move.second);
            break;
    }
    return out;
}

json trace_to_json(const ReductionTrace& trace) {
    json moves = json::array();
    for (const Move& m : trace.moves) moves.push_back(move_to_json(m));
    return {{"moves", std::move(moves)},
            {"suspensions", trace.suspensions},
            {"contractible", trace.contractible},
            {"residual", graph_to_json(trace.residual)}};
}

json wedge_to_json(const WedgeOfSpheres& wedge) {
    json out = json::object();
    for (const auto& [dim, count] : wedge.multiplicities()) out[std::to_string(dim)] = count;
    return out;
}

json betti_to_json(const std::map<int, std::uint64_t>& betti) {
    json out = json::object();
    for (const auto& [dim, count] : betti) out[std::to_string(dim)] = count;
    return out;
}

json profile_to_json(const BettiProfile& profile) {
    json torsion = json::array();
    for (const auto& t : profile.torsion) {
        torsion.push_back({{"dim", t.dimension}, {"factor", t.factor.str()}});
    }
    return {{"reduced_betti", betti_to_json(profile.reduced_betti)},
            {"torsion", std::move(torsion)},
            {"coefficients", profile.coefficients.name()},
            {"suspensions_applied", profile.suspensions_applied}};
}

json report_to_json(const VerificationReport& report) {
    json cases = json::array();
    for (const auto& c : report.cases) {
        cases.push_back({{"key", c.key},
                         {"input", c.input},
                         {"expected", c.expected},
                         {"actual", c.actual},
                         {"pass", c.pass}});
    }
    json skips = json::array();
    for (const auto& s : report.budget_skips) {
        skips.push_back({{"key", s.key}, {"input", s.input}, {"reason", s.reason}});
    }
    return {{"suite", report.suite},
            {"passed", report.passed()},
            {"failures", report.failures()},
            {"cases", std::move(cases)},
            {"budget_skips", std::move(skips)},
            {"runtime_seconds", report.runtime_seconds}};
}

}  // namespace indcomplex
