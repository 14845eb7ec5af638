#include "indcomplex/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace indcomplex {

std::string_view to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Gamma: return "gamma";
        case FamilyKind::X: return "x";
        case FamilyKind::Y: return "y";
        case FamilyKind::A: return "a";
        case FamilyKind::B: return "b";
    }
    return "gamma";
}

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
    if (name == "gamma") return FamilyKind::Gamma;
    if (name == "x") return FamilyKind::X;
    if (name == "y") return FamilyKind::Y;
    if (name == "a") return FamilyKind::A;
    if (name == "b") return FamilyKind::B;
    return std::nullopt;
}

void Family::validate() const {
    if (n < 1) throw std::invalid_argument("family requires n >= 1");
    if (kind == FamilyKind::Gamma) {
        if (k < 1) throw std::invalid_argument("gamma family requires k >= 1");
    } else if (k != 6) {
        throw std::invalid_argument("families x, y, a, b are defined only for k = 6");
    }
}

std::string Family::label() const {
    std::string out(to_string(kind));
    out += "(" + std::to_string(n);
    if (kind == FamilyKind::Gamma) out += "," + std::to_string(k);
    out += ")";
    return out;
}

Graph::Graph(int n, int k, std::vector<Vertex> vertices, std::vector<Edge> edges,
             std::optional<FamilyKind> origin)
    : n_(n), k_(k), origin_(origin), vertices_(std::move(vertices)), edges_(std::move(edges)) {
    if (n_ < 0 || k_ < 0) throw std::invalid_argument("graph bounds must be nonnegative");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const Vertex& v = vertices_[i];
        if (v.x < 1 || v.x > n_ || v.y < 1 || v.y > k_) {
            throw std::invalid_argument("vertex (" + std::to_string(v.x) + "," + std::to_string(v.y) +
                                        ") outside the grid bounds");
        }
        if (i > 0 && !(vertices_[i - 1] < v)) {
            throw std::invalid_argument("vertices must be strictly sorted in column-major order");
        }
    }
    const int count = static_cast<int>(vertices_.size());
    for (auto& [a, b] : edges_) {
        if (a < 0 || b < 0 || a >= count || b >= count) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (a == b) throw std::invalid_argument("loops are not allowed");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw std::invalid_argument("duplicate edge");
    }

    adjacency_.assign(vertices_.size(), {});
    for (const auto& [a, b] : edges_) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());

    if (count <= kMaskBits) {
        masks_.assign(vertices_.size(), Mask{0});
        for (const auto& [a, b] : edges_) {
            masks_[a] |= bit(b);
            masks_[b] |= bit(a);
        }
    }
}

void Graph::check_index(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= vertices_.size()) {
        throw std::out_of_range("vertex index " + std::to_string(i) + " out of range");
    }
}

const Vertex& Graph::vertex(int i) const {
    check_index(i);
    return vertices_[i];
}

std::optional<int> Graph::index_of(Vertex v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return std::nullopt;
    return static_cast<int>(it - vertices_.begin());
}

int Graph::require_index(Vertex v) const {
    auto idx = index_of(v);
    if (!idx) {
        throw std::out_of_range("vertex (" + std::to_string(v.x) + "," + std::to_string(v.y) +
                                ") not in graph");
    }
    return *idx;
}

std::span<const int> Graph::neighbors(int i) const {
    check_index(i);
    return adjacency_[i];
}

bool Graph::adjacent(int i, int j) const {
    check_index(i);
    check_index(j);
    return std::binary_search(adjacency_[i].begin(), adjacency_[i].end(), j);
}

Mask Graph::neighbor_mask(int i) const {
    check_index(i);
    if (masks_.empty()) throw std::logic_error("neighbor masks require at most 128 vertices");
    return masks_[i];
}

Mask Graph::all_mask() const {
    if (vertices_.size() > static_cast<std::size_t>(kMaskBits)) {
        throw std::logic_error("vertex masks require at most 128 vertices");
    }
    return vertices_.size() == static_cast<std::size_t>(kMaskBits) ? ~Mask{0}
                                                                    : bit(static_cast<int>(vertices_.size())) - 1;
}

Graph build_gamma(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("grid dimensions must be positive");
    std::vector<Vertex> vertices;
    vertices.reserve(static_cast<std::size_t>(n) * k);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= k; ++y) vertices.push_back({x, y});

    auto index = [k](int x, int y) { return (x - 1) * k + (y - 1); };
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(k) * (n - 1) + static_cast<std::size_t>(n) * (k - 1));
    for (int x = 1; x <= n; ++x) {
        for (int y = 1; y <= k; ++y) {
            if (y < k) edges.emplace_back(index(x, y), index(x, y + 1));
            if (x < n) edges.emplace_back(index(x, y), index(x + 1, y));
        }
    }
    return Graph(n, k, std::move(vertices), std::move(edges), FamilyKind::Gamma);
}

std::vector<Vertex> family_deleted_vertices(const Family& family) {
    family.validate();
    const int n = family.n;
    switch (family.kind) {
        case FamilyKind::Gamma: return {};
        case FamilyKind::X: return {{n, 1}, {n, 3}, {n, 5}};
        case FamilyKind::Y: return {{n, 3}, {n, 4}};
        case FamilyKind::A: return {{n, 1}, {n, 5}};
        case FamilyKind::B: return {{n, 4}};
    }
    return {};
}

namespace {

Graph induced(const Graph& g, const std::vector<bool>& removed) {
    std::vector<int> remap(g.size(), -1);
    std::vector<Vertex> vertices;
    vertices.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (removed[i]) continue;
        remap[i] = static_cast<int>(vertices.size());
        vertices.push_back(g.vertices()[i]);
    }
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.edges()) {
        if (remap[a] >= 0 && remap[b] >= 0) edges.emplace_back(remap[a], remap[b]);
    }
    return Graph(g.bound_n(), g.bound_k(), std::move(vertices), std::move(edges), g.origin());
}

}  // namespace

Graph build_family(const Family& family) {
    family.validate();
    Graph grid = build_gamma(family.n, family.k);
    if (family.kind == FamilyKind::Gamma) return grid;
    const auto removed = family_deleted_vertices(family);
    Graph g = delete_coordinates(grid, removed);
    return Graph(g.bound_n(), g.bound_k(), {g.vertices().begin(), g.vertices().end()},
                 {g.edges().begin(), g.edges().end()}, family.kind);
}

Graph delete_vertices(const Graph& g, std::span<const int> indices) {
    std::vector<bool> removed(g.size(), false);
    for (int i : indices) {
        if (i < 0 || static_cast<std::size_t>(i) >= g.size()) {
            throw std::out_of_range("vertex index " + std::to_string(i) + " out of range");
        }
        removed[i] = true;
    }
    return induced(g, removed);
}

Graph delete_vertices(const Graph& g, Mask indices) {
    if (g.size() < static_cast<std::size_t>(kMaskBits) && (indices >> g.size()) != 0) {
        throw std::out_of_range("vertex mask references missing vertices");
    }
    std::vector<bool> removed(g.size(), false);
    for_each_bit(indices, [&](int i) { removed[i] = true; });
    return induced(g, removed);
}

Graph delete_coordinates(const Graph& g, std::span<const Vertex> coords) {
    std::vector<int> indices;
    indices.reserve(coords.size());
    for (const Vertex& v : coords) indices.push_back(g.require_index(v));
    return delete_vertices(g, indices);
}

std::vector<int> neighborhood(const Graph& g, int v, bool closed) {
    auto open = g.neighbors(v);
    std::vector<int> out(open.begin(), open.end());
    if (closed) out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return out;
}

Graph make_abstract_graph(int vertex_count, std::vector<Edge> edges) {
    if (vertex_count < 0) throw std::invalid_argument("vertex count must be nonnegative");
    std::vector<Vertex> vertices;
    vertices.reserve(vertex_count);
    for (int i = 0; i < vertex_count; ++i) vertices.push_back({i + 1, 1});
    return Graph(vertex_count, vertex_count == 0 ? 0 : 1, std::move(vertices), std::move(edges));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> label(g.size(), -1);
    std::vector<std::vector<int>> components;
    for (std::size_t start = 0; start < g.size(); ++start) {
        if (label[start] >= 0) continue;
        const int id = static_cast<int>(components.size());
        std::vector<int> members{static_cast<int>(start)};
        label[start] = id;
        for (std::size_t head = 0; head < members.size(); ++head) {
            for (int w : g.neighbors(members[head])) {
                if (label[w] < 0) {
                    label[w] = id;
                    members.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        components.push_back(std::move(members));
    }
    return components;
}

}  // namespace indcomplex
