#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "indcomplex/graph.hpp"

namespace indcomplex {

inline constexpr std::uint64_t kDefaultFaceCeiling = 20'000'000;
// Components larger than this are not counted exactly and are rejected.
inline constexpr int kMaxCountableComponent = 30;

class FaceBudgetExceeded : public std::runtime_error {
public:
    FaceBudgetExceeded(const std::string& what, std::uint64_t ceiling)
        : std::runtime_error(what), ceiling_(ceiling) {}
    std::uint64_t ceiling() const noexcept { return ceiling_; }

private:
    std::uint64_t ceiling_;
};

/// Upper limit on the number of faces (the empty face included) any single
/// enumeration may produce.
struct FaceBudget {
    std::uint64_t ceiling = kDefaultFaceCeiling;

    /// Default ceiling, overridden by INDCOMPLEX_FACE_BUDGET when it holds a
    /// positive integer.
    static FaceBudget from_environment();
};

/// An independent set, as sorted vertex indices. The empty face is allowed.
struct Face {
    std::vector<int> members;

    std::size_t size() const noexcept { return members.size(); }
    friend auto operator<=>(const Face&, const Face&) = default;
};

/// counts[i] is the number of independent (i+1)-sets. The empty face is
/// tracked separately and is always 1.
struct FVector {
    std::vector<std::uint64_t> counts;
    std::uint64_t empty_faces = 1;

    friend bool operator==(const FVector&, const FVector&) = default;
};

/// Exact number of independent sets (empty set included) of the subgraph
/// induced on `within`, or limit + 1 once the count exceeds `limit`.
std::uint64_t count_independent_sets(const Graph& g, Mask within, std::uint64_t limit);

/// Product of exact per-component face counts, saturating at ceiling + 1.
/// Throws FaceBudgetExceeded if the graph has more than 128 vertices or a
/// component larger than kMaxCountableComponent.
std::uint64_t estimate_face_count(const Graph& g, const FaceBudget& budget = FaceBudget::from_environment());

/// Throws FaceBudgetExceeded unless enumeration of I(g) fits the budget.
void require_enumerable(const Graph& g, const FaceBudget& budget);

/// Visits every independent set as a bitmask, in lexicographic order of the
/// sorted member lists, starting with the empty face.
void for_each_face_mask(const Graph& g, const std::function<void(Mask)>& visit,
                        const FaceBudget& budget = FaceBudget::from_environment());

void for_each_face(const Graph& g, const std::function<void(const Face&)>& visit,
                   const FaceBudget& budget = FaceBudget::from_environment());

std::vector<Face> enumerate_faces(const Graph& g, const FaceBudget& budget = FaceBudget::from_environment());

FVector f_vector(const Graph& g, const FaceBudget& budget = FaceBudget::from_environment());

/// Unreduced Euler characteristic: alternating sum over nonempty faces.
std::int64_t euler_from_fvector(const FVector& fv);

/// G - N[v]; its independence complex is the link of v in I(G).
Graph link_graph(const Graph& g, int v);
/// G - v; its independence complex is I(G) with v deleted.
Graph deletion_graph(const Graph& g, int v);

}  // namespace indcomplex
