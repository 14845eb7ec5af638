#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace indcomplex {

using Integer = boost::multiprecision::cpp_int;

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

struct SparseEntry {
    int row = 0;
    std::int64_t value = 0;

    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Column-major sparse integer matrix; each column is sorted by row and
/// holds no explicit zeros.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<SparseEntry>> columns;

    std::int64_t at(int row, int col) const;
    std::size_t nonzeros() const;
};

/// Rank over GF(p), p prime and below 2^31.
std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p);

struct FieldReduction {
    std::size_t rank = 0;
    std::vector<int> pivot_rows;  // lowest nonzero row of each reduced column
};

/// Column reduction over GF(p) in column order, each column reduced on its
/// lowest nonzero row. Columns flagged in `skip` are known to reduce to zero
/// and are not touched.
FieldReduction reduce_mod_p(const SparseMatrix& m, std::uint32_t p, const std::vector<bool>* skip = nullptr);

/// Rank and the invariant factors greater than one of an integer matrix.
struct SmithInvariants {
    std::size_t rank = 0;
    std::vector<Integer> torsion;  // ascending, each divides the next
};

/// Sparse elimination on unit pivots in checked 64-bit arithmetic, redone in
/// arbitrary precision on overflow; whatever is left without unit entries is
/// finished by a dense Smith normal form.
SmithInvariants smith_invariants(const SparseMatrix& m);

/// Dense Smith normal form diagonal of an arbitrary integer matrix (row-major).
/// Returns the nonzero invariant factors in divisibility order, all positive.
std::vector<Integer> dense_smith_diagonal(std::vector<std::vector<Integer>> a);

bool is_prime(std::uint64_t p);

}  // namespace indcomplex
