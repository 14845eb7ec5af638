#include <doctest.h>

#include <indcomplex/homology.hpp>
#include <indcomplex/predictor.hpp>
#include <indcomplex/transfer.hpp>

using namespace indcomplex;

TEST_CASE("decompositions") {
    CHECK(decompose_odd(1) == OddDecomposition{0, 0, 1});
    CHECK(decompose_odd(15) == OddDecomposition{1, 0, 22});
    CHECK(decompose_even(2) == EvenDecomposition{0, 1, 2});
    CHECK(decompose_even(14) == EvenDecomposition{1, 0, 20});
    CHECK_THROWS_AS(decompose_odd(4), std::invalid_argument);
    CHECK_THROWS_AS(decompose_even(3), std::invalid_argument);
}

TEST_CASE("coefficient tables") {
    CHECK(CoefficientTables::nu_at(6) == 4);
    CHECK(CoefficientTables::mu_at(3) == 4);
    CHECK_FALSE(CoefficientTables::mu_at(4).has_value());
    CHECK(CoefficientTables::a_at(1) == 1);
    CHECK(CoefficientTables::b_at(5) == 1);
    CHECK_FALSE(CoefficientTables::b_at(1).has_value());
}

TEST_CASE("family predictions") {
    CHECK(predict_family(Family::a(4)) == WedgeOfSpheres::sphere(5, 2));
    CHECK(predict_family(Family::a(9)) == WedgeOfSpheres::sphere(12, 2));
    CHECK(predict_family(Family::b(7)).multiplicities() == std::map<int, std::uint64_t>{{9, 1}, {10, 1}});
    CHECK(predict_family(Family::x(6)) == WedgeOfSpheres::sphere(8));
    CHECK(predict_family(Family::x(7)).is_point());
    CHECK(predict_family(Family::y(1)) == WedgeOfSpheres::sphere(1));
}

TEST_CASE("grid predictions") {
    CHECK(predict_gamma(2) == WedgeOfSpheres::sphere(2));
    CHECK(predict_gamma(6) == WedgeOfSpheres::sphere(8, 3));
    CHECK(predict_gamma(7) == (WedgeOfSpheres::sphere(10) | WedgeOfSpheres::sphere(9, 2)));
    CHECK(predict_gamma(8) == WedgeOfSpheres::sphere(11, 5));
    CHECK(predict_family(Family::gamma(5)) == predict_gamma(5));
    CHECK_THROWS_AS(predict_family(Family::gamma(5, 4)), std::invalid_argument);
    CHECK_THROWS_AS(predict_gamma(0), std::invalid_argument);
}

TEST_CASE("chi_of_wedge") {
    CHECK(chi_of_wedge(WedgeOfSpheres::point()) == 1);
    CHECK(chi_of_wedge(WedgeOfSpheres::sphere(2)) == 2);
    CHECK(chi_of_wedge(WedgeOfSpheres::sphere(5, 3)) == -2);
}

TEST_CASE("expected_f6 wraps with period 28") {
    CHECK(expected_f6(10) == 6);
    CHECK(expected_f6(38) == 6);
    CHECK(expected_f6(28) == 0);
    CHECK_THROWS_AS(expected_f6(0), std::invalid_argument);
}

TEST_CASE("predicted chi matches the transfer matrix up to n = 500") {
    const auto chi = euler_sweep(500, 6);
    for (int n = 1; n <= 500; ++n) CHECK(Integer(chi_of_wedge(predict_gamma(n))) == chi[n - 1]);
}

TEST_CASE("predictions match computed homology for small n") {
    const FamilyKind kinds[] = {FamilyKind::Gamma, FamilyKind::X, FamilyKind::Y, FamilyKind::A, FamilyKind::B};
    for (FamilyKind kind : kinds)
        for (int n = 1; n <= 4; ++n) {
            const Family f{kind, n, 6};
            CHECK(betti_of_family(f, Coefficients::gf(2)).same_groups(betti_of_wedge(predict_family(f))));
        }
}
