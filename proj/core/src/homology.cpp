#include "indcomplex/homology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "indcomplex/fold.hpp"

namespace indcomplex {

Coefficients Coefficients::gf(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("GF(p) requires p prime, got " + std::to_string(p));
    return {Kind::PrimeField, p};
}

std::optional<Coefficients> Coefficients::parse(std::string_view name) {
    if (name == "int" || name == "z" || name == "integers") return integers();
    if (name.size() > 2 && name.substr(0, 2) == "gf") {
        std::uint32_t p = 0;
        for (char c : name.substr(2)) {
            if (c < '0' || c > '9' || p > 100'000'000) return std::nullopt;
            p = p * 10 + static_cast<std::uint32_t>(c - '0');
        }
        if (!is_prime(p)) return std::nullopt;
        return gf(p);
    }
    return std::nullopt;
}

std::string Coefficients::name() const {
    return is_field() ? "gf" + std::to_string(prime) : std::string("int");
}

std::uint64_t BettiProfile::betti(int dim) const {
    auto it = reduced_betti.find(dim);
    return it == reduced_betti.end() ? 0 : it->second;
}

std::int64_t BettiProfile::reduced_euler() const {
    std::int64_t chi = 0;
    for (const auto& [dim, b] : reduced_betti) {
        const auto v = static_cast<std::int64_t>(b);
        chi += ((dim % 2) + 2) % 2 == 0 ? v : -v;
    }
    return chi;
}

BettiProfile BettiProfile::shifted(int s) const {
    BettiProfile out;
    out.coefficients = coefficients;
    out.suspensions_applied = suspensions_applied;
    for (const auto& [dim, b] : reduced_betti) out.reduced_betti[dim + s] = b;
    for (const auto& t : torsion) out.torsion.push_back({t.dimension + s, t.factor});
    return out;
}

namespace {

std::vector<TorsionSummand> sorted_torsion(std::vector<TorsionSummand> t) {
    std::sort(t.begin(), t.end(), [](const TorsionSummand& a, const TorsionSummand& b) {
        return a.dimension != b.dimension ? a.dimension < b.dimension : a.factor < b.factor;
    });
    return t;
}

}  // namespace

bool BettiProfile::same_groups(const BettiProfile& other) const {
    return reduced_betti == other.reduced_betti && sorted_torsion(torsion) == sorted_torsion(other.torsion);
}

std::string BettiProfile::to_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [dim, b] : reduced_betti) {
        os << (first ? "" : ", ") << "b" << dim << "=" << b;
        first = false;
    }
    os << "}";
    if (!torsion.empty()) {
        os << " torsion{";
        first = true;
        for (const auto& t : sorted_torsion(torsion)) {
            os << (first ? "" : ", ") << "H" << t.dimension << ":Z/" << t.factor;
            first = false;
        }
        os << "}";
    }
    return os.str();
}

BettiProfile betti_of_wedge(const WedgeOfSpheres& wedge) {
    BettiProfile out;
    for (const auto& [dim, count] : wedge.multiplicities()) out.reduced_betti[dim] = count;
    return out;
}

BettiProfile add_profiles(const BettiProfile& a, const BettiProfile& b, int shift_b, std::uint64_t copies_b) {
    BettiProfile out = a;
    for (const auto& [dim, count] : b.reduced_betti) out.reduced_betti[dim + shift_b] += count * copies_b;
    for (std::uint64_t c = 0; c < copies_b; ++c)
        for (const auto& t : b.torsion) out.torsion.push_back({t.dimension + shift_b, t.factor});
    return out;
}

ChainComplex::ChainComplex(const Graph& g, const FaceBudget& budget) {
    for_each_face_mask(
        g,
        [&](Mask face) {
            const auto slot = static_cast<std::size_t>(popcount(face));
            if (faces_.size() <= slot) faces_.resize(slot + 1);
            faces_[slot].push_back(face);
            ++total_;
        },
        budget);
    index_.resize(faces_.size());
    for (std::size_t slot = 0; slot + 1 < faces_.size(); ++slot) {
        auto& map = index_[slot];
        map.reserve(faces_[slot].size());
        for (std::size_t i = 0; i < faces_[slot].size(); ++i) map.emplace(faces_[slot][i], static_cast<int>(i));
    }
}

std::size_t ChainComplex::face_count(int dim) const {
    const int slot = dim + 1;
    if (slot < 0 || slot >= static_cast<int>(faces_.size())) return 0;
    return faces_[slot].size();
}

std::span<const Mask> ChainComplex::faces(int dim) const {
    const int slot = dim + 1;
    if (slot < 0 || slot >= static_cast<int>(faces_.size())) return {};
    return faces_[slot];
}

SparseMatrix ChainComplex::boundary(int dim) const {
    if (dim < 0) throw std::invalid_argument("boundary dimension must be >= 0");
    SparseMatrix m;
    m.rows = static_cast<int>(face_count(dim - 1));
    m.cols = static_cast<int>(face_count(dim));
    m.columns.resize(m.cols);
    if (m.cols == 0) return m;
    const auto& lookup = index_[dim];
    const auto cells = faces(dim);
    for (int c = 0; c < m.cols; ++c) {
        auto& column = m.columns[c];
        int position = 0;
        for_each_bit(cells[c], [&](int v) {
            const Mask facet = cells[c] & ~bit(v);
            column.push_back({lookup.at(facet), position % 2 == 0 ? 1 : -1});
            ++position;
        });
        std::sort(column.begin(), column.end(),
                  [](const SparseEntry& a, const SparseEntry& b) { return a.row < b.row; });
    }
    return m;
}

SparseMatrix boundary_matrix(const Graph& g, int dim, const FaceBudget& budget) {
    return ChainComplex(g, budget).boundary(dim);
}

namespace {

BettiProfile assemble(const ChainComplex& cx, const std::vector<std::size_t>& rank_by_dim, Coefficients coeff) {
    // rank_by_dim[d] is the rank of the boundary out of dimension d, d = 0..top + 1.
    BettiProfile out;
    out.coefficients = coeff;
    const int top = cx.top_dimension();
    for (int d = -1; d <= top; ++d) {
        const std::size_t in = d >= 0 ? rank_by_dim[d] : 0;
        const std::size_t out_rank = rank_by_dim[d + 1];
        const std::size_t betti = cx.face_count(d) - in - out_rank;
        if (betti != 0) out.reduced_betti[d] = betti;
    }
    return out;
}

}  // namespace

BettiProfile betti_over_field(const Graph& g, std::uint32_t p, const FaceBudget& budget) {
    const auto coeff = Coefficients::gf(p);
    const ChainComplex cx(g, budget);
    const int top = cx.top_dimension();
    std::vector<std::size_t> rank(static_cast<std::size_t>(top + 2), 0);
    // Top-down with clearing: a face that is the pivot row of a reduced
    // boundary column is itself a boundary, so its own column reduces to zero.
    std::vector<bool> cleared;
    for (int d = top; d >= 0; --d) {
        const SparseMatrix m = cx.boundary(d);
        if (cleared.size() != static_cast<std::size_t>(m.cols)) cleared.assign(m.cols, false);
        const FieldReduction red = reduce_mod_p(m, p, &cleared);
        rank[d] = red.rank;
        cleared.assign(m.rows, false);
        for (int row : red.pivot_rows) cleared[row] = true;
    }
    return assemble(cx, rank, coeff);
}

BettiProfile integral_homology(const Graph& g, const FaceBudget& budget, std::uint64_t face_limit) {
    const std::uint64_t faces = estimate_face_count(g, budget);
    if (faces > face_limit) {
        throw FaceBudgetExceeded("integral homology is limited to complexes with at most " +
                                     std::to_string(face_limit) + " faces",
                                 face_limit);
    }
    const ChainComplex cx(g, budget);
    const int top = cx.top_dimension();
    std::vector<std::size_t> rank(static_cast<std::size_t>(top + 2), 0);
    std::vector<TorsionSummand> torsion;
    for (int d = 0; d <= top; ++d) {
        SmithInvariants snf = smith_invariants(cx.boundary(d));
        rank[d] = snf.rank;
        for (auto& factor : snf.torsion) torsion.push_back({d - 1, std::move(factor)});
    }
    BettiProfile out = assemble(cx, rank, Coefficients::integers());
    out.torsion = std::move(torsion);
    return out;
}

BettiProfile homology(const Graph& g, const Coefficients& coeff, const FaceBudget& budget) {
    return coeff.is_field() ? betti_over_field(g, coeff.prime, budget) : integral_homology(g, budget);
}

BettiProfile reduced_homology(const Graph& g, const Coefficients& coeff, const FaceBudget& budget) {
    const ReductionTrace trace = reduce(g);
    BettiProfile out;
    if (trace.contractible) {
        out.coefficients = coeff;
    } else {
        out = homology(trace.residual, coeff, budget).shifted(trace.suspensions);
    }
    out.suspensions_applied = trace.suspensions;
    return out;
}

BettiProfile betti_of_family(const Family& family, const Coefficients& coeff, const FaceBudget& budget) {
    return reduced_homology(build_family(family), coeff, budget);
}

}  // namespace indcomplex
