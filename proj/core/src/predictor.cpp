#include "indcomplex/predictor.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace indcomplex {

OddDecomposition decompose_odd(int n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("odd decomposition requires odd n >= 1");
    const int m = (n - 1) / 14;
    const int k = ((n - 1) % 14) / 2;
    return {m, k, 21 * m + 3 * k + 1};
}

EvenDecomposition decompose_even(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("even decomposition requires even n >= 2");
    const int m = n / 14;
    const int k = (n % 14) / 2;
    return {m, k, 21 * m + 3 * k - 1};
}

int CoefficientTables::nu_at(int k) { return nu.at(static_cast<std::size_t>(k)); }

std::optional<int> CoefficientTables::mu_at(int k) {
    if (k < 0 || k > 6) throw std::out_of_range("residue out of range");
    if (k >= 4) return std::nullopt;
    return mu[static_cast<std::size_t>(k)];
}

int CoefficientTables::a_at(int k) { return a.at(static_cast<std::size_t>(k)); }

std::optional<int> CoefficientTables::b_at(int k) {
    if (k < 0 || k > 6) throw std::out_of_range("residue out of range");
    if (k <= 1) return std::nullopt;
    return b[static_cast<std::size_t>(k - 2)];
}

namespace {

// Adds `count` spheres in every dimension lo..hi; empty when lo > hi.
void add_range(WedgeOfSpheres& w, int lo, int hi, std::uint64_t count) {
    for (int i = lo; i <= hi; ++i) w.add(i, count);
}

WedgeOfSpheres predict_x(int n) {
    if (n % 2 == 1) return WedgeOfSpheres::point();
    return WedgeOfSpheres::sphere(3 * (n / 2) - 1);
}

WedgeOfSpheres predict_y(int n) {
    const int k = n / 2;
    return WedgeOfSpheres::sphere(n % 2 == 1 ? 3 * k + 1 : 3 * k - 1);
}

WedgeOfSpheres predict_a(int n) {
    WedgeOfSpheres w;
    if (n % 2 == 1) {
        const auto [m, k, n_prime] = decompose_odd(n);
        add_range(w, 20 * m + 3 * k + 1, 21 * m + 3 * k, 3);
        w.add(20 * m + 3 * k, static_cast<std::uint64_t>(CoefficientTables::a_at(k)));
        return w;
    }
    if (n == 2) return WedgeOfSpheres::sphere(2);
    const auto [m, k, n_prime] = decompose_even(n);
    w.add(21 * m + 3 * k - 1, 2);
    if (k <= 1) {
        add_range(w, 20 * m + 3 * k, 21 * m + 3 * k - 2, 3);
        w.add(20 * m + 3 * k - 1, 2);
    } else {
        add_range(w, 20 * m + 3 * k - 1, 21 * m + 3 * k - 2, 3);
        w.add(20 * m + 3 * k - 2, static_cast<std::uint64_t>(*CoefficientTables::b_at(k)));
    }
    return w;
}

WedgeOfSpheres predict_b(int n) {
    switch (n) {
        case 1: return WedgeOfSpheres::sphere(1);
        case 2: return WedgeOfSpheres::sphere(2);
        case 3: return WedgeOfSpheres::sphere(4);
        case 4: return WedgeOfSpheres::sphere(5, 2);
        default: return predict_y(n) | predict_a(n - 4).suspend(6);
    }
}

}  // namespace

WedgeOfSpheres predict_family(const Family& family) {
    family.validate();
    switch (family.kind) {
        case FamilyKind::Gamma:
            if (family.k != 6) throw std::invalid_argument("closed forms exist only for k = 6");
            return predict_gamma(family.n);
        case FamilyKind::X: return predict_x(family.n);
        case FamilyKind::Y: return predict_y(family.n);
        case FamilyKind::A: return predict_a(family.n);
        case FamilyKind::B: return predict_b(family.n);
    }
    return {};
}

WedgeOfSpheres predict_gamma(int n) {
    if (n < 1) throw std::invalid_argument("predict_gamma requires n >= 1");
    WedgeOfSpheres w;
    if (n % 2 == 1) {
        const auto [m, k, n_prime] = decompose_odd(n);
        w.add(n_prime, 1);
        add_range(w, n_prime - m, n_prime - 1, 6);
        w.add(n_prime - m - 1, static_cast<std::uint64_t>(CoefficientTables::nu_at(k)));
        return w;
    }
    switch (n) {
        case 2: return WedgeOfSpheres::sphere(2);
        case 4: return WedgeOfSpheres::sphere(5, 3);
        case 6: return WedgeOfSpheres::sphere(8, 3);
        default: break;
    }
    const auto [m, k, n_prime] = decompose_even(n);
    w.add(n_prime, 5);
    if (k <= 3) {
        // n > 6 with k <= 3 forces m >= 1.
        assert(m >= 1);
        add_range(w, n_prime - m + 1, n_prime - 1, 6);
        w.add(n_prime - m, static_cast<std::uint64_t>(*CoefficientTables::mu_at(k)));
    } else {
        add_range(w, n_prime - m, n_prime - 1, 6);
    }
    return w;
}

std::int64_t chi_of_wedge(const WedgeOfSpheres& wedge) {
    std::int64_t chi = 1;
    for (const auto& [dim, count] : wedge.multiplicities()) {
        const auto c = static_cast<std::int64_t>(count);
        chi += ((dim % 2) + 2) % 2 == 0 ? c : -c;
    }
    return chi;
}

int expected_f6(int n) {
    if (n < 1) throw std::invalid_argument("expected_f6 requires n >= 1");
    return kF6Table[static_cast<std::size_t>((n - 1) % 28)];
}

}  // namespace indcomplex
