#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "indcomplex/bits.hpp"

namespace indcomplex {

/// Grid coordinate: x is the 1-based column, y the 1-based row.
struct Vertex {
    int x = 0;
    int y = 0;

    // Column-major lexicographic order.
    friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

enum class FamilyKind { Gamma, X, Y, A, B };

std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> parse_family_kind(std::string_view name);

/// A named subgraph of the grid. X, Y, A and B are the column-n deletions of
/// the n x 6 grid; Gamma is the full n x k grid.
struct Family {
    FamilyKind kind = FamilyKind::Gamma;
    int n = 1;
    int k = 6;

    static Family gamma(int n, int k = 6) { return {FamilyKind::Gamma, n, k}; }
    static Family x(int n) { return {FamilyKind::X, n, 6}; }
    static Family y(int n) { return {FamilyKind::Y, n, 6}; }
    static Family a(int n) { return {FamilyKind::A, n, 6}; }
    static Family b(int n) { return {FamilyKind::B, n, 6}; }

    /// Throws std::invalid_argument unless n >= 1, k >= 1 and k == 6 for X/Y/A/B.
    void validate() const;

    std::string label() const;

    friend bool operator==(const Family&, const Family&) = default;
};

/// Distinguished last-column vertices v_n = (n, 3) and w_n = (n, 4).
constexpr Vertex pivot_v(int n) { return {n, 3}; }
constexpr Vertex pivot_w(int n) { return {n, 4}; }

using Edge = std::pair<int, int>;

/// Immutable finite simple graph whose vertices carry grid coordinates.
///
/// Vertices are kept strictly sorted in column-major order so that vertex
/// indices, and everything derived from them, are reproducible. Edges are
/// normalized to (i, j) with i < j and stored sorted. Graphs with at most 128
/// vertices additionally carry per-vertex neighbor bitmasks.
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument if coordinates fall outside [1,n]x[1,k],
    /// vertices are not strictly sorted, or an edge is a loop, a duplicate or
    /// references a missing vertex.
    Graph(int n, int k, std::vector<Vertex> vertices, std::vector<Edge> edges,
          std::optional<FamilyKind> origin = std::nullopt);

    int bound_n() const noexcept { return n_; }
    int bound_k() const noexcept { return k_; }
    std::optional<FamilyKind> origin() const noexcept { return origin_; }

    std::size_t size() const noexcept { return vertices_.size(); }
    bool empty() const noexcept { return vertices_.empty(); }
    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    const Vertex& vertex(int i) const;

    std::optional<int> index_of(Vertex v) const;
    /// Like index_of but throws std::out_of_range when v is absent.
    int require_index(Vertex v) const;

    std::span<const int> neighbors(int i) const;
    int degree(int i) const { return static_cast<int>(neighbors(i).size()); }
    bool adjacent(int i, int j) const;

    bool has_masks() const noexcept { return !masks_.empty() || vertices_.empty(); }
    /// Open neighborhood of i as a bitmask. Requires has_masks().
    Mask neighbor_mask(int i) const;
    Mask all_mask() const;

    /// Structural equality: bounds, vertices and edges. Provenance is ignored.
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    void check_index(int i) const;

    int n_ = 0;
    int k_ = 0;
    std::optional<FamilyKind> origin_;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<Mask> masks_;
};

/// The n x k grid graph: edges join vertices at L1-distance 1.
Graph build_gamma(int n, int k);

/// Gamma(n, k) or one of the column-n deletions of Gamma(n, 6):
///   X = minus {(n,1),(n,3),(n,5)}, Y = minus {(n,3),(n,4)},
///   A = minus {(n,1),(n,5)},       B = minus {(n,4)}.
Graph build_family(const Family& family);

/// Vertices removed from the last column of Gamma(n, 6) to obtain the family.
std::vector<Vertex> family_deleted_vertices(const Family& family);

/// Induced subgraph on V - S. Throws std::out_of_range on invalid indices.
Graph delete_vertices(const Graph& g, std::span<const int> indices);
Graph delete_vertices(const Graph& g, Mask indices);
/// Same as delete_vertices, addressed by coordinates.
Graph delete_coordinates(const Graph& g, std::span<const Vertex> coords);

/// Sorted N(v), or N[v] when closed is true.
std::vector<int> neighborhood(const Graph& g, int v, bool closed);

/// Graph on arbitrary labels: vertex i becomes (i + 1, 1) on an m x 1 grid.
/// Convenient for small abstract graphs (paths, K2, edgeless sets).
Graph make_abstract_graph(int vertex_count, std::vector<Edge> edges);

/// Connected components as vertex index lists, each sorted, ordered by
/// smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace indcomplex
