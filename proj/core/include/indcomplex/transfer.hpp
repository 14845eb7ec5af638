#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "indcomplex/snf.hpp"

namespace indcomplex {

inline constexpr int kMaxTransferRows = 24;
// Dense matrices are materialized only up to this many rows.
inline constexpr int kMaxDenseTransferRows = 16;

enum class OverflowPolicy {
    Escalate,  // redo the computation in arbitrary precision
    Abort,     // throw OverflowError
};

/// Column configurations of the n x k grid and the signed transfer between
/// neighboring columns. A state is a row subset (bit i = row i + 1) with no
/// two consecutive rows. entry(s, t) = (-1)^|t| if s and t are disjoint, else 0.
class TransferModel {
public:
    explicit TransferModel(int k);

    int rows() const noexcept { return k_; }
    const std::vector<std::uint32_t>& states() const noexcept { return states_; }
    std::int64_t entry(std::size_t from, std::size_t to) const;
    /// Dense |states| x |states| matrix; throws for k > kMaxDenseTransferRows.
    std::vector<std::vector<std::int64_t>> matrix() const;

    /// Values of n -> chi(I(grid(n, k))) for n = 1..max_n.
    std::vector<Integer> sweep(int max_n, OverflowPolicy policy = OverflowPolicy::Escalate) const;

private:
    template <typename Arith>
    std::vector<Integer> run(int max_n) const;

    int k_;
    std::vector<std::uint32_t> states_;
    std::vector<std::vector<std::uint32_t>> compatible_;  // per target state, compatible source indices
};

/// Subsets of {1..k} without two consecutive elements, as increasing bitmasks.
/// Throws std::invalid_argument unless 1 <= k <= kMaxTransferRows.
std::vector<std::uint32_t> column_states(int k);

/// chi(I(grid(n, k))) = 1 - Z where Z is the independence polynomial of the
/// grid evaluated at -1.
Integer euler_chi(int n, int k, OverflowPolicy policy = OverflowPolicy::Escalate);

/// Euler characteristics for n = 1..max_n.
std::vector<Integer> euler_sweep(int max_n, int k, OverflowPolicy policy = OverflowPolicy::Escalate);

/// Smallest p <= max_n / 4 with chi(n + p) == chi(n) across 1..max_n - p.
/// Empirical: the whole window must agree, nothing beyond it is claimed.
std::optional<int> period_detect(int k, int max_n, OverflowPolicy policy = OverflowPolicy::Escalate);

/// Smallest p <= values.size() / 4 with values[i + p] == values[i] throughout.
std::optional<int> smallest_period(const std::vector<Integer>& values);

}  // namespace indcomplex
