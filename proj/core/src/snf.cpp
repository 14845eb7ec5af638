#include "indcomplex/snf.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace indcomplex {

std::int64_t SparseMatrix::at(int row, int col) const {
    const auto& column = columns.at(col);
    auto it = std::lower_bound(column.begin(), column.end(), row,
                               [](const SparseEntry& e, int r) { return e.row < r; });
    return (it != column.end() && it->row == row) ? it->value : 0;
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t total = 0;
    for (const auto& c : columns) total += c.size();
    return total;
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Field reduction

namespace {

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
    std::uint64_t result = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1U) result = result * base % p;
        base = base * base % p;
        exp >>= 1U;
    }
    return static_cast<std::uint32_t>(result);
}

using FieldColumn = std::vector<std::pair<int, std::uint32_t>>;

// a <- a - factor * b, entries mod p.
void axpy_mod(FieldColumn& a, const FieldColumn& b, std::uint32_t factor, std::uint32_t p, FieldColumn& scratch) {
    scratch.clear();
    scratch.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    const std::uint64_t neg = p - factor;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            scratch.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            scratch.emplace_back(b[j].first, static_cast<std::uint32_t>(neg * b[j].second % p));
            ++j;
        } else {
            const auto v = static_cast<std::uint32_t>((a[i].second + neg * b[j].second) % p);
            if (v != 0) scratch.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    a.swap(scratch);
}

}  // namespace

FieldReduction reduce_mod_p(const SparseMatrix& m, std::uint32_t p, const std::vector<bool>* skip) {
    if (!is_prime(p) || p >= (1U << 31)) throw std::invalid_argument("coefficient field requires a prime below 2^31");
    FieldReduction out;
    std::vector<int> pivot_of_row(static_cast<std::size_t>(m.rows), -1);
    std::vector<FieldColumn> reduced;
    FieldColumn column;
    FieldColumn scratch;
    for (int j = 0; j < m.cols; ++j) {
        if (skip != nullptr && (*skip)[j]) continue;
        column.clear();
        for (const auto& e : m.columns[j]) {
            const std::int64_t r = e.value % static_cast<std::int64_t>(p);
            const auto v = static_cast<std::uint32_t>(r < 0 ? r + p : r);
            if (v != 0) column.emplace_back(e.row, v);
        }
        while (!column.empty()) {
            const int low = column.back().first;
            const int pivot = pivot_of_row[low];
            if (pivot < 0) break;
            const FieldColumn& other = reduced[pivot];
            const std::uint32_t factor = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(column.back().second) * pow_mod(other.back().second, p - 2, p) % p);
            axpy_mod(column, other, factor, p, scratch);
        }
        if (!column.empty()) {
            pivot_of_row[column.back().first] = static_cast<int>(reduced.size());
            out.pivot_rows.push_back(column.back().first);
            reduced.push_back(column);
        }
    }
    out.rank = reduced.size();
    return out;
}

std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p) { return reduce_mod_p(m, p).rank; }

// ---------------------------------------------------------------------------
// Integral elimination

namespace {

struct CheckedInt64 {
    using value_type = std::int64_t;
    static value_type from(std::int64_t v) { return v; }
    static value_type mul(value_type a, value_type b) {
        value_type r;
        if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit overflow in integer elimination");
        return r;
    }
    static value_type sub(value_type a, value_type b) {
        value_type r;
        if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("64-bit overflow in integer elimination");
        return r;
    }
    static bool is_unit(value_type v) { return v == 1 || v == -1; }
    static Integer to_integer(value_type v) { return Integer(v); }
};

struct BigInt {
    using value_type = Integer;
    static value_type from(std::int64_t v) { return Integer(v); }
    static value_type mul(const value_type& a, const value_type& b) { return a * b; }
    static value_type sub(const value_type& a, const value_type& b) { return a - b; }
    static bool is_unit(const value_type& v) { return v == 1 || v == -1; }
    static Integer to_integer(const value_type& v) { return v; }
};

template <typename Arith>
class SparseEliminator {
public:
    using T = typename Arith::value_type;
    using Column = std::vector<std::pair<int, T>>;

    explicit SparseEliminator(const SparseMatrix& m)
        : rows_(m.rows), columns_(m.cols), row_columns_(m.rows), active_(m.cols, true) {
        for (int c = 0; c < m.cols; ++c) {
            for (const auto& e : m.columns[c]) {
                if (e.value == 0) continue;
                columns_[c].emplace_back(e.row, Arith::from(e.value));
                row_columns_[e.row].push_back(c);
            }
        }
    }

    SmithInvariants run() {
        SmithInvariants out;
        bool progress = true;
        while (progress) {
            progress = false;
            for (int c = 0; c < static_cast<int>(columns_.size()); ++c) {
                if (!active_[c]) continue;
                if (columns_[c].empty()) {
                    active_[c] = false;
                    continue;
                }
                if (eliminate_on_unit(c)) {
                    ++out.rank;
                    progress = true;
                }
            }
        }
        finish_dense(out);
        return out;
    }

private:
    // Picks a unit entry of column c in the sparsest row, clears that row
    // from every other column and retires both.
    bool eliminate_on_unit(int c) {
        const Column& col = columns_[c];
        std::size_t best = col.size();
        std::size_t best_load = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 0; i < col.size(); ++i) {
            if (!Arith::is_unit(col[i].second)) continue;
            const std::size_t load = row_columns_[col[i].first].size();
            if (load < best_load) {
                best_load = load;
                best = i;
            }
        }
        if (best == col.size()) return false;

        const int row = col[best].first;
        const T unit = col[best].second;
        active_[c] = false;
        const std::vector<int> touching = std::move(row_columns_[row]);
        row_columns_[row].clear();
        for (int other : touching) {
            if (other == c || !active_[other]) continue;
            Column& target = columns_[other];
            auto it = std::lower_bound(target.begin(), target.end(), row,
                                       [](const auto& e, int r) { return e.first < r; });
            if (it == target.end() || it->first != row) continue;
            // unit is its own inverse.
            const T factor = Arith::mul(it->second, unit);
            subtract(other, factor, columns_[c]);
        }
        return true;
    }

    // columns_[target] -= factor * source
    void subtract(int target, const T& factor, const Column& source) {
        Column& a = columns_[target];
        scratch_.clear();
        scratch_.reserve(a.size() + source.size());
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < a.size() || j < source.size()) {
            if (j == source.size() || (i < a.size() && a[i].first < source[j].first)) {
                scratch_.push_back(std::move(a[i++]));
            } else if (i == a.size() || source[j].first < a[i].first) {
                T v = Arith::sub(T(0), Arith::mul(factor, source[j].second));
                if (v != 0) {
                    row_columns_[source[j].first].push_back(target);
                    scratch_.emplace_back(source[j].first, std::move(v));
                }
                ++j;
            } else {
                T v = Arith::sub(a[i].second, Arith::mul(factor, source[j].second));
                if (v != 0) scratch_.emplace_back(a[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        a.swap(scratch_);
    }

    void finish_dense(SmithInvariants& out) {
        std::vector<int> live_columns;
        std::vector<int> row_slot(rows_, -1);
        int live_rows = 0;
        for (int c = 0; c < static_cast<int>(columns_.size()); ++c) {
            if (!active_[c] || columns_[c].empty()) continue;
            live_columns.push_back(c);
            for (const auto& [r, v] : columns_[c])
                if (row_slot[r] < 0) row_slot[r] = live_rows++;
        }
        if (live_columns.empty()) return;
        std::vector<std::vector<Integer>> dense(live_rows, std::vector<Integer>(live_columns.size()));
        for (std::size_t j = 0; j < live_columns.size(); ++j) {
            for (const auto& [r, v] : columns_[live_columns[j]]) dense[row_slot[r]][j] = Arith::to_integer(v);
        }
        for (Integer& d : dense_smith_diagonal(std::move(dense))) {
            ++out.rank;
            if (d > 1) out.torsion.push_back(std::move(d));
        }
    }

    int rows_;
    std::vector<Column> columns_;
    std::vector<std::vector<int>> row_columns_;
    std::vector<bool> active_;
    Column scratch_;
};

}  // namespace

SmithInvariants smith_invariants(const SparseMatrix& m) {
    try {
        return SparseEliminator<CheckedInt64>(m).run();
    } catch (const OverflowError&) {
        return SparseEliminator<BigInt>(m).run();
    }
}

std::vector<Integer> dense_smith_diagonal(std::vector<std::vector<Integer>> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<Integer> diagonal;

    auto swap_cols = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (auto& row : a) std::swap(row[x], row[y]);
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Smallest nonzero magnitude in the trailing block becomes the pivot.
        std::size_t pr = rows;
        std::size_t pc = cols;
        Integer best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < best)) {
                    best = abs(a[i][j]);
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break;
        std::swap(a[t], a[pr]);
        swap_cols(t, pc);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                const Integer q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                const Integer q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) {
                // A remainder smaller than the pivot survived; promote it.
                std::size_t r = t;
                std::size_t c = t;
                for (std::size_t i = t; i < rows; ++i)
                    if (a[i][t] != 0 && abs(a[i][t]) < abs(a[r][c])) {
                        r = i;
                        c = t;
                    }
                for (std::size_t j = t; j < cols; ++j)
                    if (a[t][j] != 0 && abs(a[t][j]) < abs(a[r][c])) {
                        r = t;
                        c = j;
                    }
                std::swap(a[t], a[r]);
                swap_cols(t, c);
                continue;
            }
            // Pivot must divide the whole trailing block.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) break;
        }
        diagonal.push_back(abs(a[t][t]));
    }
    return diagonal;
}

}  // namespace indcomplex
