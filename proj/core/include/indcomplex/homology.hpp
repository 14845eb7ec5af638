#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "indcomplex/complex.hpp"
#include "indcomplex/graph.hpp"
#include "indcomplex/snf.hpp"
#include "indcomplex/wedge.hpp"

namespace indcomplex {

// Integral Smith normal form is only attempted on complexes this small.
inline constexpr std::uint64_t kDefaultIntegralFaceLimit = 100'000;

struct Coefficients {
    enum class Kind { PrimeField, Integers };

    Kind kind = Kind::PrimeField;
    std::uint32_t prime = 2;

    static Coefficients gf(std::uint32_t p);
    static Coefficients integers() { return {Kind::Integers, 0}; }
    /// Accepts "gf2", "gf3", "gf<p>" and "int".
    static std::optional<Coefficients> parse(std::string_view name);

    bool is_field() const noexcept { return kind == Kind::PrimeField; }
    std::string name() const;

    friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

struct TorsionSummand {
    int dimension = 0;
    Integer factor;

    friend bool operator==(const TorsionSummand&, const TorsionSummand&) = default;
};

/// Reduced homology of an independence complex: nonzero reduced Betti
/// numbers by dimension (dimension -1 only for the empty complex) and, for
/// integer coefficients, torsion invariant factors.
struct BettiProfile {
    std::map<int, std::uint64_t> reduced_betti;
    std::vector<TorsionSummand> torsion;
    Coefficients coefficients;
    int suspensions_applied = 0;

    std::uint64_t betti(int dim) const;
    /// Sum of (-1)^i times the i-th reduced Betti number.
    std::int64_t reduced_euler() const;
    bool torsion_free() const noexcept { return torsion.empty(); }
    /// Reduced homology of the s-fold suspension.
    BettiProfile shifted(int s) const;
    /// Same groups: Betti numbers and torsion, ignoring coefficient labels.
    bool same_groups(const BettiProfile& other) const;
    std::string to_string() const;
};

/// Betti numbers a wedge of spheres must have; a point has none.
BettiProfile betti_of_wedge(const WedgeOfSpheres& wedge);

/// Homology of a wedge A v (copies_b)*Sigma^(shift_b) B, given those of A and B.
BettiProfile add_profiles(const BettiProfile& a, const BettiProfile& b, int shift_b = 0, std::uint64_t copies_b = 1);

/// Augmented simplicial chain complex of I(g). Dimension d holds the faces
/// with d + 1 vertices in lexicographic order; dimension -1 is the empty face.
class ChainComplex {
public:
    explicit ChainComplex(const Graph& g, const FaceBudget& budget = FaceBudget::from_environment());

    int top_dimension() const noexcept { return static_cast<int>(faces_.size()) - 2; }
    std::size_t face_count(int dim) const;
    std::size_t total_faces() const noexcept { return total_; }
    std::span<const Mask> faces(int dim) const;

    /// Boundary from dimension dim to dim - 1 (dim >= 0). Omitting the j-th
    /// smallest vertex carries sign (-1)^j. Zero columns/rows outside the
    /// complex's range give an empty matrix.
    SparseMatrix boundary(int dim) const;

private:
    struct MaskHash {
        std::size_t operator()(Mask m) const noexcept {
            const auto lo = static_cast<std::uint64_t>(m);
            const auto hi = static_cast<std::uint64_t>(m >> 64);
            return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9E3779B97F4A7C15ULL));
        }
    };

    std::vector<std::vector<Mask>> faces_;  // faces_[d + 1]
    std::vector<std::unordered_map<Mask, int, MaskHash>> index_;
    std::size_t total_ = 0;
};

SparseMatrix boundary_matrix(const Graph& g, int dim, const FaceBudget& budget = FaceBudget::from_environment());

/// Reduced Betti numbers of I(g) over GF(p), computed directly from the
/// enumerated complex.
BettiProfile betti_over_field(const Graph& g, std::uint32_t p, const FaceBudget& budget = FaceBudget::from_environment());

/// Reduced integral homology of I(g) via Smith normal form. Throws
/// FaceBudgetExceeded when the complex has more than `face_limit` faces.
BettiProfile integral_homology(const Graph& g, const FaceBudget& budget = FaceBudget::from_environment(),
                               std::uint64_t face_limit = kDefaultIntegralFaceLimit);

/// Direct homology with the given coefficients, no reduction.
BettiProfile homology(const Graph& g, const Coefficients& coeff,
                      const FaceBudget& budget = FaceBudget::from_environment());

/// Fold-reduces g, computes homology of the residual and shifts it by the
/// number of stripped K2 components. Contractible traces give the zero
/// profile.
BettiProfile reduced_homology(const Graph& g, const Coefficients& coeff,
                              const FaceBudget& budget = FaceBudget::from_environment());

BettiProfile betti_of_family(const Family& family, const Coefficients& coeff,
                             const FaceBudget& budget = FaceBudget::from_environment());

}  // namespace indcomplex
