#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "indcomplex/complex.hpp"
#include "indcomplex/homology.hpp"

namespace indcomplex {

struct VerificationCase {
    std::string key;  // sort key, unique within a suite
    std::string input;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct BudgetSkip {
    std::string key;
    std::string input;
    std::string reason;
};

/// Outcome of one verification suite. Passes iff every non-skipped case
/// passes; skipped cases are listed, never dropped.
struct VerificationReport {
    std::string suite;
    std::vector<VerificationCase> cases;
    std::vector<BudgetSkip> budget_skips;
    double runtime_seconds = 0.0;

    bool passed() const;
    std::size_t failures() const;
    void add(std::string key, std::string input, std::string expected, std::string actual, bool pass);
    void skip(std::string key, std::string input, std::string reason);
    /// Orders cases and skips by key.
    void finalize();
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct VerifyOptions {
    bool deep = false;    // small homology at n = 5 over GF(2)
    bool deeper = false;  // and n = 6
    std::uint64_t seed = kDefaultSeed;
    FaceBudget budget = FaceBudget::from_environment();
};

/// Transfer-matrix chi, tabulated f6 and chi of the predicted wedge agree for
/// n = 1..max_n.
VerificationReport verify_euler_table(int max_n = 56);

/// chi of predict_gamma(n) equals the transfer-matrix chi for n = 1..max_n.
VerificationReport verify_predictor_chi(int max_n = 500);

/// Transfer-matrix chi against face enumeration on every grid with n*k <= max_cells.
VerificationReport verify_euler_oracle(int max_cells = 30, const FaceBudget& budget = FaceBudget::from_environment());

/// Homology of every family at n = 1..max_n against the predicted wedge,
/// through the fold-reduction pipeline and, where the budget allows,
/// directly on the unreduced complex. Integer coefficients also require
/// vanishing torsion.
VerificationReport verify_small_homology(int max_n, const Coefficients& coeff,
                                         const FaceBudget& budget = FaceBudget::from_environment(),
                                         int min_n = 1);

/// Betti additivity for the A-, B- and grid splittings and the suspension
/// identities for A_n - N[v_n] and B_n - N[v_n], at every applicable n <= max_n.
VerificationReport verify_splittings(int max_n, const FaceBudget& budget = FaceBudget::from_environment());

/// Reduction preserves homology (up to the recorded suspensions) on `count`
/// random induced subgraphs of grid(n, 6), n <= max_n, with at most
/// max_vertices vertices. Trace invariants are checked as well.
VerificationReport verify_fold_soundness(std::size_t count, std::uint64_t seed, int max_n = 4,
                                         int max_vertices = 20,
                                         const FaceBudget& budget = FaceBudget::from_environment());

/// The closed forms against their own recursions for n <= max_n: grid
/// splitting, A-recursion, the Sigma^20 ladder, the A/B splitting and the
/// dimension bounds.
VerificationReport verify_formula_consistency(int max_n = 500);

/// Periods of n -> chi(I(grid(n, k))) for k = 1, 2, 3, 5, 6 and the
/// unbounded growth for k = 4.
VerificationReport verify_literature_periods();

/// Stable names: euler_table, predictor_chi, euler_oracle, small_homology,
/// splittings, fold_soundness, formula_consistency, literature_periods.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for unknown names.
VerificationReport run_suite(const std::string& name, const VerifyOptions& options);
std::vector<VerificationReport> run_all(const VerifyOptions& options);

}  // namespace indcomplex
