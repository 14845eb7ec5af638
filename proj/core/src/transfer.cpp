#include "indcomplex/transfer.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace indcomplex {

namespace {

// Above this many rows the transfer step uses a subset-sum transform over all
// 2^k row subsets instead of explicit compatibility lists.
constexpr int kMaxListTransferRows = 12;

struct CheckedI64 {
    using value_type = std::int64_t;
    static value_type add(value_type a, value_type b) {
        value_type r;
        if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit overflow in transfer step");
        return r;
    }
    static value_type negate(value_type a) {
        if (a == INT64_MIN) throw OverflowError("64-bit overflow in transfer step");
        return -a;
    }
    static Integer to_integer(value_type a) { return Integer(a); }
};

struct Exact {
    using value_type = Integer;
    static value_type add(const value_type& a, const value_type& b) { return a + b; }
    static value_type negate(const value_type& a) { return -a; }
    static Integer to_integer(const value_type& a) { return a; }
};

}  // namespace

std::vector<std::uint32_t> column_states(int k) {
    if (k < 1 || k > kMaxTransferRows) {
        throw std::invalid_argument("row count must be in [1, " + std::to_string(kMaxTransferRows) + "], got " +
                                    std::to_string(k));
    }
    std::vector<std::uint32_t> states;
    for (std::uint32_t m = 0; m < (1U << k); ++m)
        if ((m & (m >> 1)) == 0) states.push_back(m);
    return states;
}

TransferModel::TransferModel(int k) : k_(k), states_(column_states(k)) {
    if (k_ <= kMaxListTransferRows) {
        compatible_.resize(states_.size());
        for (std::size_t t = 0; t < states_.size(); ++t)
            for (std::size_t s = 0; s < states_.size(); ++s)
                if ((states_[s] & states_[t]) == 0) compatible_[t].push_back(static_cast<std::uint32_t>(s));
    }
}

std::int64_t TransferModel::entry(std::size_t from, std::size_t to) const {
    const std::uint32_t s = states_.at(from);
    const std::uint32_t t = states_.at(to);
    if ((s & t) != 0) return 0;
    return std::popcount(t) % 2 == 0 ? 1 : -1;
}

std::vector<std::vector<std::int64_t>> TransferModel::matrix() const {
    if (k_ > kMaxDenseTransferRows) {
        throw std::invalid_argument("dense transfer matrix limited to k <= " + std::to_string(kMaxDenseTransferRows));
    }
    std::vector<std::vector<std::int64_t>> m(states_.size(), std::vector<std::int64_t>(states_.size()));
    for (std::size_t s = 0; s < states_.size(); ++s)
        for (std::size_t t = 0; t < states_.size(); ++t) m[s][t] = entry(s, t);
    return m;
}

template <typename Arith>
std::vector<Integer> TransferModel::run(int max_n) const {
    using T = typename Arith::value_type;
    const std::size_t count = states_.size();
    std::vector<T> current(count);
    std::vector<T> next(count);
    for (std::size_t s = 0; s < count; ++s) current[s] = std::popcount(states_[s]) % 2 == 0 ? T(1) : T(-1);

    std::vector<T> zeta;
    const std::uint32_t full = (1U << k_) - 1;
    if (compatible_.empty()) zeta.resize(std::size_t{1} << k_);

    std::vector<Integer> chi;
    chi.reserve(max_n);
    for (int n = 1; n <= max_n; ++n) {
        if (n > 1) {
            if (!compatible_.empty()) {
                for (std::size_t t = 0; t < count; ++t) {
                    T sum(0);
                    for (std::uint32_t s : compatible_[t]) sum = Arith::add(sum, current[s]);
                    next[t] = std::popcount(states_[t]) % 2 == 0 ? sum : Arith::negate(sum);
                }
            } else {
                std::fill(zeta.begin(), zeta.end(), T(0));
                for (std::size_t s = 0; s < count; ++s) zeta[states_[s]] = current[s];
                for (int b = 0; b < k_; ++b) {
                    const std::uint32_t mask = 1U << b;
                    for (std::uint32_t m = 0; m <= full; ++m)
                        if ((m & mask) != 0) zeta[m] = Arith::add(zeta[m], zeta[m ^ mask]);
                }
                for (std::size_t t = 0; t < count; ++t) {
                    const T& sum = zeta[full & ~states_[t]];
                    next[t] = std::popcount(states_[t]) % 2 == 0 ? sum : Arith::negate(sum);
                }
            }
            current.swap(next);
        }
        T z(0);
        for (const T& v : current) z = Arith::add(z, v);
        chi.push_back(Integer(1) - Arith::to_integer(z));
    }
    return chi;
}

std::vector<Integer> TransferModel::sweep(int max_n, OverflowPolicy policy) const {
    if (max_n < 1) throw std::invalid_argument("sweep requires max_n >= 1");
    try {
        return run<CheckedI64>(max_n);
    } catch (const OverflowError&) {
        if (policy == OverflowPolicy::Abort) throw;
        return run<Exact>(max_n);
    }
}

Integer euler_chi(int n, int k, OverflowPolicy policy) {
    if (n < 1) throw std::invalid_argument("euler_chi requires n >= 1");
    return TransferModel(k).sweep(n, policy).back();
}

std::vector<Integer> euler_sweep(int max_n, int k, OverflowPolicy policy) {
    return TransferModel(k).sweep(max_n, policy);
}

std::optional<int> smallest_period(const std::vector<Integer>& values) {
    const int size = static_cast<int>(values.size());
    for (int p = 1; p <= size / 4; ++p) {
        bool holds = true;
        for (int i = 0; i + p < size && holds; ++i) holds = values[i] == values[i + p];
        if (holds) return p;
    }
    return std::nullopt;
}

std::optional<int> period_detect(int k, int max_n, OverflowPolicy policy) {
    return smallest_period(euler_sweep(max_n, k, policy));
}

}  // namespace indcomplex
