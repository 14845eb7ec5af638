#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "indcomplex/graph.hpp"
#include "indcomplex/wedge.hpp"

namespace indcomplex {

/// n = 14m + 2k + 1 with 0 <= k <= 6; n_prime = 21m + 3k + 1.
struct OddDecomposition {
    int m = 0;
    int k = 0;
    int n_prime = 0;
    friend bool operator==(const OddDecomposition&, const OddDecomposition&) = default;
};

/// n = 14m + 2k with 0 <= k <= 6; n_prime = 21m + 3k - 1.
struct EvenDecomposition {
    int m = 0;
    int k = 0;
    int n_prime = 0;
    friend bool operator==(const EvenDecomposition&, const EvenDecomposition&) = default;
};

OddDecomposition decompose_odd(int n);
EvenDecomposition decompose_even(int n);

/// Residue-indexed coefficients of the closed forms. mu is defined for
/// k <= 3 and b for k >= 2 only.
struct CoefficientTables {
    static constexpr std::array<int, 7> nu{0, 0, 0, 2, 2, 4, 4};
    static constexpr std::array<int, 4> mu{2, 2, 4, 4};
    static constexpr std::array<int, 7> a{0, 1, 1, 2, 2, 3, 3};
    static constexpr std::array<int, 5> b{0, 0, 0, 1, 1};  // k = 2..6

    static int nu_at(int k);
    static std::optional<int> mu_at(int k);
    static int a_at(int k);
    static std::optional<int> b_at(int k);
};

/// Homotopy type of I(family graph) from the closed forms. B(n) for n >= 5
/// is expanded through the recursion B(n) = Y(n) v Sigma^6 A(n - 4).
WedgeOfSpheres predict_family(const Family& family);

/// Homotopy type of I(grid(n, 6)).
WedgeOfSpheres predict_gamma(int n);

/// Unreduced Euler characteristic of a wedge; the point has chi = 1.
std::int64_t chi_of_wedge(const WedgeOfSpheres& wedge);

/// Tabulated Euler characteristics of I(grid(n, 6)) for n = 1..28.
inline constexpr std::array<int, 28> kF6Table{0,  2, 2, -2, 0, 4, 0, -4, 2,  6, -2, -4, 4, 4,
                                              -4, -2, 6, 2, -4, 0, 4, 0, -2, 2, 2,  0, 0, 0};

/// Table value at ((n - 1) mod 28) + 1.
int expected_f6(int n);

}  // namespace indcomplex
