#include <doctest.h>

#include <random>

#include <indcomplex/snf.hpp>

#include "../oracles.hpp"

using namespace indcomplex;

namespace {

SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& a) {
    SparseMatrix m;
    m.rows = static_cast<int>(a.size());
    m.cols = m.rows ? static_cast<int>(a[0].size()) : 0;
    m.columns.resize(m.cols);
    for (int c = 0; c < m.cols; ++c)
        for (int r = 0; r < m.rows; ++r)
            if (a[r][c] != 0) m.columns[c].push_back({r, a[r][c]});
    return m;
}

std::vector<std::vector<std::int64_t>> random_matrix(std::mt19937_64& rng, int rows, int cols, int spread) {
    std::uniform_int_distribution<int> value(-spread, spread);
    std::bernoulli_distribution dense(0.6);
    std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols, 0));
    for (auto& row : a)
        for (auto& v : row)
            if (dense(rng)) v = value(rng);
    return a;
}

std::vector<Integer> nontrivial(const std::vector<oracle::BigInt>& factors) {
    std::vector<Integer> out;
    for (const auto& f : factors)
        if (f > 1) out.push_back(f);
    return out;
}

}  // namespace

TEST_CASE("smith_invariants on known matrices") {
    // diag(2, 4) has torsion Z/2 + Z/4.
    SmithInvariants d = smith_invariants(from_dense({{2, 0}, {0, 4}}));
    CHECK(d.rank == 2);
    CHECK(d.torsion == std::vector<Integer>{2, 4});

    // diag(2, 3) ~ diag(1, 6).
    d = smith_invariants(from_dense({{2, 0}, {0, 3}}));
    CHECK(d.rank == 2);
    CHECK(d.torsion == std::vector<Integer>{6});

    d = smith_invariants(from_dense({{1, 1}, {1, 1}}));
    CHECK(d.rank == 1);
    CHECK(d.torsion.empty());

    d = smith_invariants(from_dense({{0, 0}, {0, 0}}));
    CHECK(d.rank == 0);
}

TEST_CASE("smith_invariants matches determinantal divisors") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 4);
        const int cols = 1 + static_cast<int>(rng() % 4);
        const auto a = random_matrix(rng, rows, cols, trial % 2 == 0 ? 3 : 12);
        const auto expected = oracle::invariant_factors(a);
        const SmithInvariants got = smith_invariants(from_dense(a));
        CHECK(got.rank == expected.size());
        CHECK(got.torsion == nontrivial(expected));
    }
}

TEST_CASE("dense_smith_diagonal yields a divisibility chain") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_matrix(rng, 4, 3, 20);
        std::vector<std::vector<Integer>> big(4, std::vector<Integer>(3));
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 3; ++c) big[r][c] = a[r][c];
        const auto diag = dense_smith_diagonal(big);
        for (std::size_t i = 1; i < diag.size(); ++i) CHECK(diag[i] % diag[i - 1] == 0);
        const auto expected = oracle::invariant_factors(a);
        CHECK(diag == std::vector<Integer>(expected.begin(), expected.end()));
    }
}

TEST_CASE("large entries escalate past 64 bits") {
    // Elimination on the unit in column 0 multiplies entries of order 2^40 together.
    const std::int64_t big = std::int64_t{1} << 40;
    const auto a = std::vector<std::vector<std::int64_t>>{{1, big, 0}, {big, 0, big}, {0, big, 3}};
    const SmithInvariants got = smith_invariants(from_dense(a));
    const auto expected = oracle::invariant_factors(a);
    CHECK(got.rank == expected.size());
    CHECK(got.torsion == nontrivial(expected));
}

TEST_CASE("rank_mod_p matches dense elimination") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_matrix(rng, 6, 5, 4);
        for (std::uint32_t p : {2U, 3U, 5U, 7U}) CHECK(rank_mod_p(from_dense(a), p) == oracle::rank_mod_p(a, p));
    }
    CHECK_THROWS_AS(rank_mod_p(from_dense({{1}}), 6), std::invalid_argument);
}

TEST_CASE("reduce_mod_p skips flagged columns") {
    const SparseMatrix m = from_dense({{1, 1, 0}, {0, 1, 1}});
    const std::vector<bool> skip{false, true, false};
    const FieldReduction r = reduce_mod_p(m, 2, &skip);
    CHECK(r.rank == 2);
    CHECK(r.pivot_rows.size() == 2);
}
