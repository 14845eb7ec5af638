#include "indcomplex/complex.hpp"

#include <cstdlib>
#include <string>

namespace indcomplex {

FaceBudget FaceBudget::from_environment() {
    FaceBudget budget;
    if (const char* raw = std::getenv("INDCOMPLEX_FACE_BUDGET")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(raw, &end, 10);
        if (end != raw && *end == '\0' && value > 0) budget.ceiling = value;
    }
    return budget;
}

namespace {

struct IndependentSetCounter {
    const Graph& g;
    std::uint64_t limit;

    std::uint64_t run(Mask within) {
        if (within == 0) return 1;
        // Branch on the vertex of largest degree inside `within`.
        int best = -1;
        int best_degree = -1;
        Mask isolated = 0;
        for_each_bit(within, [&](int v) {
            const int d = popcount(g.neighbor_mask(v) & within);
            if (d == 0) isolated |= bit(v);
            if (d > best_degree) {
                best_degree = d;
                best = v;
            }
        });
        if (isolated != 0) {
            const int free = popcount(isolated);
            std::uint64_t rest = run(within & ~isolated);
            for (int i = 0; i < free; ++i) {
                if (rest > limit / 2) return limit + 1;
                rest *= 2;
            }
            return rest > limit ? limit + 1 : rest;
        }
        const std::uint64_t without = run(within & ~bit(best));
        if (without > limit) return limit + 1;
        const std::uint64_t with = run(within & ~bit(best) & ~g.neighbor_mask(best));
        if (with > limit - without) return limit + 1;
        return without + with;
    }
};

}  // namespace

std::uint64_t count_independent_sets(const Graph& g, Mask within, std::uint64_t limit) {
    if (!g.has_masks()) throw std::logic_error("independent set counting requires at most 128 vertices");
    return IndependentSetCounter{g, limit}.run(within);
}

std::uint64_t estimate_face_count(const Graph& g, const FaceBudget& budget) {
    if (g.size() > static_cast<std::size_t>(kMaskBits)) {
        throw FaceBudgetExceeded("enumeration requires at most 128 vertices, graph has " +
                                     std::to_string(g.size()),
                                 budget.ceiling);
    }
    const std::uint64_t limit = budget.ceiling;
    std::uint64_t total = 1;
    for (const auto& component : connected_components(g)) {
        if (component.size() > static_cast<std::size_t>(kMaxCountableComponent)) {
            throw FaceBudgetExceeded("connected component with " + std::to_string(component.size()) +
                                         " vertices exceeds the countable size " +
                                         std::to_string(kMaxCountableComponent),
                                     budget.ceiling);
        }
        Mask members = 0;
        for (int v : component) members |= bit(v);
        const std::uint64_t count = count_independent_sets(g, members, limit);
        if (count > limit || total > limit / count) return limit + 1;
        total *= count;
    }
    return total;
}

void require_enumerable(const Graph& g, const FaceBudget& budget) {
    const std::uint64_t estimate = estimate_face_count(g, budget);
    if (estimate > budget.ceiling) {
        throw FaceBudgetExceeded("independence complex has more than " + std::to_string(budget.ceiling) +
                                     " faces",
                                 budget.ceiling);
    }
}

namespace {

struct LexEnumerator {
    const Graph& g;
    const std::function<void(Mask)>& visit;
    std::uint64_t ceiling;
    std::uint64_t produced = 0;

    void emit(Mask face) {
        if (++produced > ceiling) {
            throw FaceBudgetExceeded("face enumeration exceeded " + std::to_string(ceiling) + " faces",
                                     ceiling);
        }
        visit(face);
    }

    // Preorder over extensions by strictly larger vertices yields
    // lexicographic order of the sorted member lists.
    void extend(Mask face, Mask candidates) {
        while (candidates != 0) {
            const int v = lowest(candidates);
            candidates &= candidates - 1;
            const Mask next = face | bit(v);
            emit(next);
            extend(next, candidates & ~g.neighbor_mask(v));
        }
    }
};

}  // namespace

void for_each_face_mask(const Graph& g, const std::function<void(Mask)>& visit, const FaceBudget& budget) {
    require_enumerable(g, budget);
    LexEnumerator walker{g, visit, budget.ceiling};
    walker.emit(Mask{0});
    walker.extend(Mask{0}, g.all_mask());
}

void for_each_face(const Graph& g, const std::function<void(const Face&)>& visit, const FaceBudget& budget) {
    Face face;
    for_each_face_mask(
        g,
        [&](Mask m) {
            face.members.clear();
            for_each_bit(m, [&](int i) { face.members.push_back(i); });
            visit(face);
        },
        budget);
}

std::vector<Face> enumerate_faces(const Graph& g, const FaceBudget& budget) {
    std::vector<Face> faces;
    for_each_face(g, [&](const Face& f) { faces.push_back(f); }, budget);
    return faces;
}

FVector f_vector(const Graph& g, const FaceBudget& budget) {
    FVector fv;
    for_each_face_mask(
        g,
        [&](Mask m) {
            const int size = popcount(m);
            if (size == 0) return;
            if (fv.counts.size() < static_cast<std::size_t>(size)) fv.counts.resize(size, 0);
            ++fv.counts[size - 1];
        },
        budget);
    return fv;
}

std::int64_t euler_from_fvector(const FVector& fv) {
    std::int64_t chi = 0;
    for (std::size_t i = 0; i < fv.counts.size(); ++i) {
        const auto c = static_cast<std::int64_t>(fv.counts[i]);
        chi += (i % 2 == 0) ? c : -c;
    }
    return chi;
}

Graph link_graph(const Graph& g, int v) {
    const auto closed = neighborhood(g, v, true);
    return delete_vertices(g, closed);
}

Graph deletion_graph(const Graph& g, int v) {
    const int single[] = {v};
    return delete_vertices(g, single);
}

}  // namespace indcomplex
