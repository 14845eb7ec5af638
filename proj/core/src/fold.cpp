#include "indcomplex/fold.hpp"

#include <algorithm>

namespace indcomplex {

std::string_view to_string(MoveKind kind) {
    switch (kind) {
        case MoveKind::Fold: return "fold";
        case MoveKind::Cone: return "cone";
        case MoveKind::StripK2: return "strip_k2";
    }
    return "fold";
}

namespace {

// Live view of g with some vertices deleted. Index order is that of g, which
// is also the index order of the induced subgraph on the live vertices.
class LiveGraph {
public:
    explicit LiveGraph(const Graph& g) : g_(g), alive_(g.size(), true) {}

    int size() const { return static_cast<int>(alive_.size()); }
    bool alive(int v) const { return alive_[v]; }
    void remove(int v) { alive_[v] = false; }

    int degree(int v) const {
        int d = 0;
        for (int u : g_.neighbors(v)) d += alive_[u] ? 1 : 0;
        return d;
    }

    int first_neighbor(int v) const {
        for (int u : g_.neighbors(v))
            if (alive_[u]) return u;
        return -1;
    }

    bool adjacent(int a, int b) const {
        auto nb = g_.neighbors(a);
        return std::binary_search(nb.begin(), nb.end(), b);
    }

    // N(v) contained in N(w), both restricted to live vertices.
    bool contained(int v, int w) const {
        for (int u : g_.neighbors(v)) {
            if (alive_[u] && !adjacent(w, u)) return false;
        }
        return true;
    }

    std::optional<std::pair<int, int>> find_fold() const {
        std::vector<int> isolated;
        for (int v = 0; v < size() && isolated.size() < 2; ++v)
            if (alive_[v] && degree(v) == 0) isolated.push_back(v);

        std::vector<int> candidates;
        for (int w = 0; w < size(); ++w) {
            if (!alive_[w]) continue;
            // A vertex v with N(v) inside N(w) is isolated or sits at distance
            // two from w.
            candidates.clear();
            for (int v : isolated) {
                if (v != w) {
                    candidates.push_back(v);
                    break;
                }
            }
            for (int u : g_.neighbors(w)) {
                if (!alive_[u]) continue;
                for (int v : g_.neighbors(u))
                    if (v != w && alive_[v]) candidates.push_back(v);
            }
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
            for (int v : candidates) {
                if (!contained(v, w)) continue;
                // Twins: keep only the pair that removes the larger index.
                if (w < v && contained(w, v)) continue;
                return std::pair{v, w};
            }
        }
        return std::nullopt;
    }

    Graph materialize() const {
        std::vector<int> removed;
        for (int v = 0; v < size(); ++v)
            if (!alive_[v]) removed.push_back(v);
        return delete_vertices(g_, removed);
    }

private:
    const Graph& g_;
    std::vector<bool> alive_;
};

}  // namespace

std::optional<std::pair<int, int>> find_fold(const Graph& g) { return LiveGraph(g).find_fold(); }

ReductionTrace reduce(const Graph& g) {
    ReductionTrace trace;
    LiveGraph live(g);
    const auto coord = [&](int i) { return g.vertices()[i]; };

    for (;;) {
        int cone = -1;
        int k2 = -1;
        for (int v = 0; v < live.size() && cone < 0; ++v) {
            if (!live.alive(v)) continue;
            const int d = live.degree(v);
            if (d == 0) {
                cone = v;
            } else if (d == 1 && k2 < 0 && live.degree(live.first_neighbor(v)) == 1) {
                k2 = v;
            }
        }
        if (cone >= 0) {
            trace.moves.push_back(Move::cone(coord(cone)));
            trace.contractible = true;
            break;
        }
        if (k2 >= 0) {
            const int partner = live.first_neighbor(k2);
            trace.moves.push_back(Move::strip_k2(coord(k2), coord(partner)));
            live.remove(k2);
            live.remove(partner);
            ++trace.suspensions;
            continue;
        }
        if (auto fold = live.find_fold()) {
            const auto [v, w] = *fold;
            trace.moves.push_back(Move::fold(coord(v), coord(w)));
            live.remove(w);
            continue;
        }
        break;
    }
    trace.residual = live.materialize();
    return trace;
}

std::optional<WedgeOfSpheres> homotopy_type_if_closed(const ReductionTrace& trace) {
    if (trace.contractible) return WedgeOfSpheres::point();
    if (trace.residual.empty()) return WedgeOfSpheres::sphere(trace.suspensions - 1);
    return std::nullopt;
}

}  // namespace indcomplex
