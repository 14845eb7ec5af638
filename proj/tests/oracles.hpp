#pragma once

// Brute-force reference computations for the test suites. Nothing here calls
// into the library's enumeration, reduction or elimination code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

/// Plain adjacency-matrix graph with vertices 0..n-1.
struct SimpleGraph {
    int n = 0;
    std::vector<std::vector<bool>> adj;

    explicit SimpleGraph(int count) : n(count), adj(count, std::vector<bool>(count, false)) {}
    void connect(int a, int b) { adj[a][b] = adj[b][a] = true; }
    int edge_count() const {
        int e = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) e += adj[i][j] ? 1 : 0;
        return e;
    }
};

/// n x k grid from the coordinate definition, vertex (x, y) -> (x-1)*k + (y-1).
inline SimpleGraph grid(int n, int k) {
    SimpleGraph g(n * k);
    for (int x1 = 1; x1 <= n; ++x1)
        for (int y1 = 1; y1 <= k; ++y1)
            for (int x2 = 1; x2 <= n; ++x2)
                for (int y2 = 1; y2 <= k; ++y2)
                    if (std::abs(x1 - x2) + std::abs(y1 - y2) == 1) g.connect((x1 - 1) * k + y1 - 1, (x2 - 1) * k + y2 - 1);
    return g;
}

/// Every independent subset, by scanning all 2^n subsets.
inline std::vector<std::vector<int>> independent_sets(const SimpleGraph& g) {
    std::vector<std::vector<int>> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n); ++s) {
        std::vector<int> members;
        for (int i = 0; i < g.n; ++i)
            if ((s >> i) & 1U) members.push_back(i);
        bool ok = true;
        for (std::size_t a = 0; a < members.size() && ok; ++a)
            for (std::size_t b = a + 1; b < members.size() && ok; ++b) ok = !g.adj[members[a]][members[b]];
        if (ok) out.push_back(members);
    }
    return out;
}

/// counts[i] = independent (i+1)-sets.
inline std::vector<std::uint64_t> f_vector(const SimpleGraph& g) {
    std::vector<std::uint64_t> counts;
    for (const auto& s : independent_sets(g)) {
        if (s.empty()) continue;
        if (counts.size() < s.size()) counts.resize(s.size(), 0);
        ++counts[s.size() - 1];
    }
    return counts;
}

inline std::int64_t euler(const SimpleGraph& g) {
    std::int64_t chi = 0;
    const auto fv = f_vector(g);
    for (std::size_t i = 0; i < fv.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(fv[i]);
    return chi;
}

/// Dense rank over GF(p) by Gaussian elimination.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (auto& row : a)
        for (auto& v : row) v = ((v % p) + p) % p;
    auto inv = [p](std::int64_t x) {
        std::int64_t r = 1, e = p - 2, b = x;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        const std::int64_t iv = inv(a[rank][c]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const std::int64_t f = a[r][c] * iv % p;
            for (std::size_t j = c; j < cols; ++j) a[r][j] = ((a[r][j] - f * a[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

/// Reduced Betti numbers over GF(p) from the augmented chain complex built
/// from scratch: faces by size, dense boundary matrices.
inline std::map<int, std::uint64_t> reduced_betti(const SimpleGraph& g, std::int64_t p) {
    std::map<std::size_t, std::vector<std::vector<int>>> by_size;
    for (auto& s : independent_sets(g)) by_size[s.size()].push_back(s);
    std::size_t top = by_size.rbegin()->first;
    std::vector<std::size_t> rank(top + 2, 0);  // rank[s] = rank of boundary from size s to s-1
    for (std::size_t s = 1; s <= top; ++s) {
        const auto& cols = by_size[s];
        const auto& rows = by_size[s - 1];
        std::map<std::vector<int>, std::size_t> row_index;
        for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
        std::vector<std::vector<std::int64_t>> m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (std::size_t j = 0; j < cols[c].size(); ++j) {
                auto facet = cols[c];
                facet.erase(facet.begin() + static_cast<long>(j));
                m[row_index.at(facet)][c] = (j % 2 == 0) ? 1 : -1;
            }
        rank[s] = rank_mod_p(m, p);
    }
    std::map<int, std::uint64_t> out;
    for (std::size_t s = 0; s <= top; ++s) {
        const std::uint64_t b = by_size[s].size() - rank[s] - rank[s + 1];
        if (b) out[static_cast<int>(s) - 1] = b;
    }
    return out;
}

inline BigInt determinant(std::vector<std::vector<BigInt>> a) {
    // Fraction-free Bareiss elimination.
    const std::size_t n = a.size();
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Invariant factors from determinantal divisors: d_k = gcd of all k x k
/// minors, e_k = d_k / d_(k-1). Exponential; tiny matrices only.
inline std::vector<BigInt> invariant_factors(const std::vector<std::vector<std::int64_t>>& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<BigInt> out;
    BigInt previous = 1;
    for (int k = 1; k <= std::min(rows, cols); ++k) {
        BigInt d = 0;
        std::vector<int> rsel(k), csel(k);
        std::vector<bool> rmask(rows, false), cmask(cols, false);
        std::fill(rmask.begin(), rmask.begin() + k, true);
        do {
            std::fill(cmask.begin(), cmask.end(), false);
            std::fill(cmask.begin(), cmask.begin() + k, true);
            do {
                std::vector<std::vector<BigInt>> sub;
                for (int r = 0; r < rows; ++r) {
                    if (!rmask[r]) continue;
                    std::vector<BigInt> row;
                    for (int c = 0; c < cols; ++c)
                        if (cmask[c]) row.emplace_back(m[r][c]);
                    sub.push_back(std::move(row));
                }
                d = boost::multiprecision::gcd(d, abs(determinant(sub)));
            } while (std::prev_permutation(cmask.begin(), cmask.end()));
        } while (std::prev_permutation(rmask.begin(), rmask.end()));
        if (d == 0) break;
        out.push_back(d / previous);
        previous = d;
    }
    return out;
}

/// Ordered pairs (v, w), v != w, with N(v) contained in N(w).
inline std::vector<std::pair<int, int>> fold_pairs(const SimpleGraph& g) {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < g.n; ++v)
        for (int w = 0; w < g.n; ++w) {
            if (v == w) continue;
            bool contained = true;
            for (int u = 0; u < g.n && contained; ++u)
                if (g.adj[v][u] && !g.adj[w][u]) contained = false;
            if (contained) out.emplace_back(v, w);
        }
    return out;
}

/// Row subsets of {0..k-1} with no two adjacent rows, by filtering all 2^k.
inline std::vector<std::uint32_t> column_states(int k) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < (1U << k); ++s) {
        bool ok = true;
        for (int i = 0; i + 1 < k; ++i)
            if (((s >> i) & 1U) && ((s >> (i + 1)) & 1U)) ok = false;
        if (ok) out.push_back(s);
    }
    return out;
}

}  // namespace oracle
