#include <doctest.h>

#include <indcomplex/verify.hpp>

using namespace indcomplex;

TEST_CASE("report bookkeeping") {
    VerificationReport r;
    CHECK(r.passed());
    r.skip("s", "in", "budget");
    CHECK(r.passed());
    r.add("k", "in", "1", "1", true);
    CHECK(r.passed());
    r.add("j", "in", "1", "0", false);
    CHECK_FALSE(r.passed());
    CHECK(r.failures() == 1);
    r.finalize();
    CHECK(r.cases.front().key == "j");
}

TEST_CASE("fast suites pass") {
    const VerifyOptions options;
    for (const char* name : {"euler_table", "predictor_chi", "euler_oracle", "formula_consistency", "literature_periods"}) {
        const VerificationReport r = run_suite(name, options);
        INFO(name);
        CHECK(r.passed());
        CHECK_FALSE(r.cases.empty());
    }
}

TEST_CASE("small homology and splittings pass at n <= 4") {
    CHECK(verify_small_homology(4, Coefficients::gf(2)).passed());
    CHECK(verify_small_homology(3, Coefficients::integers()).passed());
    CHECK(verify_splittings(5).passed());
}

TEST_CASE("fold soundness is deterministic in the seed") {
    const auto a = verify_fold_soundness(40, 7);
    const auto b = verify_fold_soundness(40, 7);
    CHECK(a.passed());
    REQUIRE(a.cases.size() == b.cases.size());
    for (std::size_t i = 0; i < a.cases.size(); ++i) CHECK(a.cases[i].actual == b.cases[i].actual);
}

TEST_CASE("budget overruns are skips, not failures") {
    const auto r = verify_small_homology(4, Coefficients::gf(2), FaceBudget{50});
    CHECK(r.passed());
    CHECK_FALSE(r.budget_skips.empty());
}

TEST_CASE("suite names") {
    CHECK(suite_names().size() == 8);
    CHECK_THROWS_AS(run_suite("nope", VerifyOptions{}), std::invalid_argument);
}
