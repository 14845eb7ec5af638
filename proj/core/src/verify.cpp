#include "indcomplex/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "indcomplex/fold.hpp"
#include "indcomplex/predictor.hpp"
#include "indcomplex/transfer.hpp"

namespace indcomplex {

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return !c.pass; }));
}

void VerificationReport::add(std::string key, std::string input, std::string expected, std::string actual, bool pass) {
    cases.push_back({std::move(key), std::move(input), std::move(expected), std::move(actual), pass});
}

void VerificationReport::skip(std::string key, std::string input, std::string reason) {
    budget_skips.push_back({std::move(key), std::move(input), std::move(reason)});
}

void VerificationReport::finalize() {
    std::stable_sort(cases.begin(), cases.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
    std::stable_sort(budget_skips.begin(), budget_skips.end(),
                     [](const auto& a, const auto& b) { return a.key < b.key; });
}

namespace {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string pad(int value, int width = 3) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%0*d", width, value);
    return buf;
}

std::string str(const Integer& v) { return v.str(); }

template <typename T>
std::string str(const T& v) {
    return std::to_string(v);
}

}  // namespace

VerificationReport verify_euler_table(int max_n) {
    Stopwatch clock;
    VerificationReport report{"euler_table", {}, {}, 0.0};
    const auto transfer = euler_sweep(max_n, 6);
    for (int n = 1; n <= max_n; ++n) {
        const Integer& chi = transfer[n - 1];
        const int table = expected_f6(n);
        const std::int64_t wedge = chi_of_wedge(predict_gamma(n));
        const bool ok = chi == table && wedge == table;
        report.add("n=" + pad(n), "f6(" + std::to_string(n) + ")", std::to_string(table),
                   "transfer=" + str(chi) + " wedge=" + std::to_string(wedge), ok);
    }
    report.finalize();
    report.runtime_seconds = clock.seconds();
    return report;
}

VerificationReport verify_predictor_chi(int max_n) {
    Stopwatch clock;
    VerificationReport report{"predictor_chi", {}, {}, 0.0};
    const auto transfer = euler_sweep(max_n, 6);
    for (int n = 1; n <= max_n; ++n) {
        const std::int64_t wedge = chi_of_wedge(predict_gamma(n));
        report.add("n=" + pad(n), "gamma(" + std::to_string(n) + ",6)", str(transfer[n - 1]), std::to_string(wedge),
                   transfer[n - 1] == wedge);
    }
    report.finalize();
    report.runtime_seconds = clock.seconds();
    return report;
}

VerificationReport verify_euler_oracle(int max_cells, const FaceBudget& budget) {
    Stopwatch clock;
    VerificationReport report{"euler_oracle", {}, {}, 0.0};
    for (int k = 1; k <= std::min(max_cells, kMaxTransferRows); ++k) {
        const int max_n = max_cells / k;
        if (max_n < 1) continue;
        const auto transfer = euler_sweep(max_n, k);
        for (int n = 1; n <= max_n; ++n) {
            const std::string key = "k=" + pad(k, 2) + "/n=" + pad(n, 2);
            const std::string input = "grid(" + std::to_string(n) + "," + std::to_string(k) + ")";
            try {
                const std::int64_t enumerated = euler_from_fvector(f_vector(build_gamma(n, k), budget));
                report.add(key, input, std::to_string(enumerated), str(transfer[n - 1]),
                           transfer[n - 1] == enumerated);
            } catch (const FaceBudgetExceeded& e) {
                report.skip(key, input, e.what());
            }
        }
    }
    report.finalize();
    report.runtime_seconds = clock.seconds();
    return report;
}

VerificationReport verify_small_homology(int max_n, const Coefficients& coeff, const FaceBudget& budget, int min_n) {
    Stopwatch clock;
    VerificationReport report{"small_homology", {}, {}, 0.0};
    const FamilyKind kinds[] = {FamilyKind::Gamma, FamilyKind::X, FamilyKind::Y, FamilyKind::A, FamilyKind::B};
    for (FamilyKind kind : kinds) {
        for (int n = min_n; n <= max_n; ++n) {
            const Family family{kind, n, 6};
            const WedgeOfSpheres wedge = predict_family(family);
            const BettiProfile expected = betti_of_wedge(wedge);
            const std::string base = std::string(to_string(kind)) + "/n=" + pad(n, 2) + "/" + coeff.name();
            const std::string input = family.label() + " " + coeff.name();
            const auto check = [&](const std::string& route, auto&& compute) {
                try {
                    const BettiProfile actual = compute();
                    report.add(base + "/" + route, input + " " + route, wedge.to_string() + " " + expected.to_string(),
                               actual.to_string(), actual.same_groups(expected));
                } catch (const FaceBudgetExceeded& e) {
                    report.skip(base + "/" + route, input + " " + route, e.what());
                }
            };
            check("reduced", [&] { return betti_of_family(family, coeff, budget); });
            check("direct", [&] { return homology(build_family(family), coeff, budget); });
        }
    }
    report.finalize();
    report.runtime_seconds = clock.seconds();
    return report;
}

VerificationReport verify_splittings(int max_n, const FaceBudget& budget) {
    Stopwatch clock;
    VerificationReport report{"splittings", {}, {}, 0.0};
    const Coefficients coeff = Coefficients::gf(2);
    const auto betti = [&](const Graph& g) { return reduced_homology(g, coeff, budget); };
    const auto family = [&](const Family& f) { return betti(build_family(f)); };

    const auto compare = [&](const std::string& key, const std::string& input, auto&& lhs, auto&& rhs) {
        try {
            const BettiProfile left = lhs();
            const BettiProfile right = rhs();
            report.add(key, input, right.to_string(), left.to_string(), left.same_groups(right));
        } catch (const FaceBudgetExceeded& e) {
            report.skip(key, input, e.what());
        }
    };

    for (int n = 1; n <= max_n; ++n) {
        const std::string tag = "/n=" + pad(n, 2);
        const std::string ns = std::to_string(n);

        // Graph identities behind the splittings.
        {
            const Graph a = build_family(Family::a(n));
            const Graph b = build_family(Family::b(n));
            const Graph x = build_family(Family::x(n));
            const Graph y = build_family(Family::y(n));
            const bool a_ok = deletion_graph(a, a.require_index(pivot_v(n))) == x;
            const bool b_ok = deletion_graph(b, b.require_index(pivot_v(n))) == y;
            report.add("graph/a-minus-v" + tag, "A(" + ns + ") - v", "X(" + ns + ")", a_ok ? "X(" + ns + ")" : "differs",
                       a_ok);
            report.add("graph/b-minus-v" + tag, "B(" + ns + ") - v", "Y(" + ns + ")", b_ok ? "Y(" + ns + ")" : "differs",
                       b_ok);
        }
        if (n >= 4) {
            compare("a-split" + tag, "A(" + ns + ") = X(" + ns + ") v S^4 B(" + std::to_string(n - 3) + ")",
                    [&] { return family(Family::a(n)); },
                    [&] { return add_profiles(family(Family::x(n)), family(Family::b(n - 3)), 4); });
            compare("a-link" + tag, "A(" + ns + ") - N[v] = S^3 B(" + std::to_string(n - 3) + ")",
                    [&] {
                        const Graph a = build_family(Family::a(n));
                        return betti(link_graph(a, a.require_index(pivot_v(n))));
                    },
                    [&] { return family(Family::b(n - 3)).shifted(3); });
        }
        if (n >= 5) {
            compare("b-split" + tag, "B(" + ns + ") = Y(" + ns + ") v S^6 A(" + std::to_string(n - 4) + ")",
                    [&] { return family(Family::b(n)); },
                    [&] { return add_profiles(family(Family::y(n)), family(Family::a(n - 4)), 6); });
            compare("b-link" + tag, "B(" + ns + ") - N[v] = S^5 A(" + std::to_string(n - 4) + ")",
                    [&] {
                        const Graph b = build_family(Family::b(n));
                        return betti(link_graph(b, b.require_index(pivot_v(n))));
                    },
                    [&] { return family(Family::a(n - 4)).shifted(5); });
            compare("gamma-split" + tag, "Gamma(" + ns + ") = Y(" + ns + ") v 2 S^6 A(" + std::to_string(n - 4) + ")",
                    [&] { return family(Family::gamma(n)); },
                    [&] { return add_profiles(family(Family::y(n)), family(Family::a(n - 4)), 6, 2); });
        }
    }
    report.finalize();
    report.runtime_seconds = clock.seconds();
    return report;
}

namespace {

// Invariants every finished trace must satisfy.
std::string trace_violation(const Graph& g, const ReductionTrace& t) {
    if (t.moves.size() > g.size()) return "more moves than vertices";
    const auto strips = std::count_if(t.moves.begin(), t.moves.end(),
                                      [](const Move& m) { return m.kind == MoveKind::StripK2; });
    if (strips != t.suspensions) return "suspension count mismatch";
    if (t.contractible) {
        if (t.moves.empty() || t.moves.back().kind != MoveKind::Cone) return "contractible trace not ending in cone";
        return {};
    }
    const Graph& r = t.residual;
    for (std::size_t v = 0; v < r.size(); ++v) {
        const int d = r.degree(static_cast<int>(v));
        if (d == 0) return "residual has an isolated vertex";
        if (d == 1 && r.degree(r.neighbors(static_cast<int>(v))[0]) == 1) return "residual has a K2 component";
    }
    if (find_fold(r)) return "residual still admits a fold";
    return {};
}

}  // namespace

VerificationReport verify_fold_soundness(std::size_t count, std::uint64_t seed, int max_n, int max_vertices,
                                         const FaceBudget& budget) {
    Stopwatch clock;
    VerificationReport report{"fold_soundness", {}, {}, 0.0};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
        const Graph grid = build_gamma(n, 6);
        const int cap = std::min<int>(max_vertices, static_cast<int>(grid.size()));
        const int keep = std::uniform_int_distribution<int>(0, cap)(rng);
        std::vector<int> order(grid.size());
        for (std::size_t v = 0; v < order.size(); ++v) order[v] = static_cast<int>(v);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<int> removed(order.begin() + keep, order.end());
        const Graph g = delete_vertices(grid, removed);

        std::ostringstream input;
        input << "grid(" << n << ",6) keep";
        for (const Vertex& v : g.vertices()) input << " (" << v.x << "," << v.y << ")";
        const std::string key = "case=" + pad(static_cast<int>(i), 4);
        try {
            const BettiProfile direct = betti_over_field(g, 2, budget);
            const ReductionTrace trace = reduce(g);
            BettiProfile via = trace.contractible ? BettiProfile{}
                                                  : betti_over_field(trace.residual, 2, budget).shifted(trace.suspensions);
            const std::string violation = trace_violation(g, trace);
            const bool ok = via.same_groups(direct) && violation.empty();
            report.add(key, input.str(), direct.to_string(),
                       via.to_string() + (violation.empty() ? "" : " [" + violation + "]"), ok);
        } catch (const FaceBudgetExceeded& e) {
            report.skip(key, input.str(), e.what());
        }
    }
    report.finalize();
    report.runtime_seconds = clock.seconds();
    return report;
}

VerificationReport verify_formula_consistency(int max_n) {
    Stopwatch clock;
    VerificationReport report{"formula_consistency", {}, {}, 0.0};
    const auto eq = [&](const std::string& key, const std::string& input, const WedgeOfSpheres& lhs,
                        const WedgeOfSpheres& rhs) {
        report.add(key, input, rhs.to_string(), lhs.to_string(), lhs == rhs);
    };
    const auto A = [](int n) { return predict_family(Family::a(n)); };
    const auto B = [](int n) { return predict_family(Family::b(n)); };
    const auto X = [](int n) { return predict_family(Family::x(n)); };
    const auto Y = [](int n) { return predict_family(Family::y(n)); };

    for (int n = 1; n <= max_n; ++n) {
        const std::string tag = "/n=" + pad(n);
        const std::string ns = std::to_string(n);
        if (n >= 5) {
            eq("gamma-split" + tag, "Gamma(" + ns + ") = Y v 2 S^6 A(n-4)", predict_gamma(n),
               Y(n) | A(n - 4).suspend(6).repeated(2));
        }
        if (n >= 8) {
            eq("a-recursion" + tag, "A(" + ns + ") = X v S^4 Y(n-3) v S^10 A(n-7)", A(n),
               X(n) | Y(n - 3).suspend(4) | A(n - 7).suspend(10));
        }
        if (n >= 4) {
            eq("a-split" + tag, "A(" + ns + ") = X v S^4 B(n-3)", A(n), X(n) | B(n - 3).suspend(4));
        }
        if (n % 2 == 1 && n >= 15) {
            const int k = (n - 1) / 2;
            eq("a-ladder" + tag, "A(" + ns + ") = 3 S^3k v S^20 A(n-14)", A(n),
               WedgeOfSpheres::sphere(3 * k, 3) | A(n - 14).suspend(20));
        }
        const int half = n / 2;
        const int a_bound = n % 2 == 1 ? 3 * half : 3 * half - 1;
        const int b_bound = n % 2 == 1 ? 3 * half + 1 : 3 * half - 1;
        const int a_max = A(n).max_dimension().value_or(-1);
        const int b_max = B(n).max_dimension().value_or(-1);
        report.add("a-dim-bound" + tag, "max dim A(" + ns + ")", "<= " + std::to_string(a_bound), std::to_string(a_max),
                   a_max <= a_bound);
        report.add("b-dim-bound" + tag, "max dim B(" + ns + ")", "<= " + std::to_string(b_bound), std::to_string(b_max),
                   b_max <= b_bound);
    }
    report.finalize();
    report.runtime_seconds = clock.seconds();
    return report;
}

VerificationReport verify_literature_periods() {
    Stopwatch clock;
    VerificationReport report{"literature_periods", {}, {}, 0.0};
    struct Expectation {
        int k;
        int period;
    };
    constexpr int kWindow = 200;
    for (const auto [k, period] : {Expectation{1, 6}, Expectation{2, 4}, Expectation{3, 8}, Expectation{5, 40},
                                   Expectation{6, 28}}) {
        const auto found = period_detect(k, kWindow);
        report.add("k=" + pad(k, 2), "period of f" + std::to_string(k) + " over n <= " + std::to_string(kWindow),
                   std::to_string(period), found ? std::to_string(*found) : "none", found == period);
    }

    constexpr int kWindow4 = 400;
    constexpr int kBlock = 50;
    const auto chi = euler_sweep(kWindow4, 4);
    const auto found = smallest_period(chi);
    report.add("k=04/period", "period of f4 over n <= 400", "none", found ? std::to_string(*found) : "none",
               !found.has_value());

    std::vector<Integer> block_max;
    for (int start = 0; start < kWindow4; start += kBlock) {
        Integer best = 0;
        for (int i = start; i < start + kBlock; ++i) best = std::max<Integer>(best, abs(chi[i]));
        block_max.push_back(best);
    }
    bool growing = true;
    std::string listing;
    for (std::size_t i = 0; i < block_max.size(); ++i) {
        if (i > 0 && !(block_max[i] > block_max[i - 1])) growing = false;
        listing += (i ? " " : "") + block_max[i].str();
    }
    report.add("k=04/growth", "max |f4| per block of 50, n <= 400", "strictly increasing", listing, growing);

    report.finalize();
    report.runtime_seconds = clock.seconds();
    return report;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"euler_table",  "predictor_chi",  "euler_oracle",
                                                "small_homology", "splittings",   "fold_soundness",
                                                "formula_consistency", "literature_periods"};
    return names;
}

VerificationReport run_suite(const std::string& name, const VerifyOptions& options) {
    if (name == "euler_table") return verify_euler_table();
    if (name == "predictor_chi") return verify_predictor_chi();
    if (name == "euler_oracle") return verify_euler_oracle(30, options.budget);
    if (name == "small_homology") {
        Stopwatch clock;
        VerificationReport merged = verify_small_homology(4, Coefficients::gf(2), options.budget);
        const VerificationReport integral = verify_small_homology(4, Coefficients::integers(), options.budget);
        merged.cases.insert(merged.cases.end(), integral.cases.begin(), integral.cases.end());
        merged.budget_skips.insert(merged.budget_skips.end(), integral.budget_skips.begin(), integral.budget_skips.end());
        if (options.deep || options.deeper) {
            const int top = options.deeper ? 6 : 5;
            const VerificationReport deep = verify_small_homology(top, Coefficients::gf(2), options.budget, 5);
            merged.cases.insert(merged.cases.end(), deep.cases.begin(), deep.cases.end());
            merged.budget_skips.insert(merged.budget_skips.end(), deep.budget_skips.begin(), deep.budget_skips.end());
        }
        merged.finalize();
        merged.runtime_seconds = clock.seconds();
        return merged;
    }
    if (name == "splittings") return verify_splittings(5, options.budget);
    if (name == "fold_soundness") return verify_fold_soundness(200, options.seed, 4, 20, options.budget);
    if (name == "formula_consistency") return verify_formula_consistency();
    if (name == "literature_periods") return verify_literature_periods();
    throw std::invalid_argument("unknown suite \"" + name + "\"");
}

std::vector<VerificationReport> run_all(const VerifyOptions& options) {
    std::vector<VerificationReport> reports;
    for (const auto& name : suite_names()) reports.push_back(run_suite(name, options));
    return reports;
}

}  // namespace indcomplex
