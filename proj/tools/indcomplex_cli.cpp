#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <indcomplex/complex.hpp>
#include <indcomplex/fold.hpp>
#include <indcomplex/homology.hpp>
#include <indcomplex/json_io.hpp>
#include <indcomplex/predictor.hpp>
#include <indcomplex/transfer.hpp>
#include <indcomplex/verify.hpp>

using namespace indcomplex;

namespace {

enum ExitCode : int { kPass = 0, kFailure = 1, kUsage = 2, kBudget = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const json& j) { std::cout << j.dump() << '\n'; }

json integer_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Graph read_graph(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
    try {
        return graph_from_json(j);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

FamilyKind family_kind(const std::string& name) {
    const auto kind = parse_family_kind(name);
    if (!kind) throw UsageError("unknown family '" + name + "'");
    return *kind;
}

// Graph from either --graph or --family/--n/--k.
struct GraphSource {
    std::string graph_path;
    std::string family = "gamma";
    int n = 0;
    int k = 6;

    void attach(CLI::App* cmd) {
        cmd->add_option("--graph", graph_path, "JSON graph file, or - for stdin");
        cmd->add_option("--family", family, "gamma|x|y|a|b")->default_val("gamma");
        cmd->add_option("--n", n, "number of columns");
        cmd->add_option("--k", k, "number of rows (families require 6)")->default_val(6);
    }

    Graph load() const {
        if (!graph_path.empty()) return read_graph(graph_path);
        if (n < 1) throw UsageError("either --graph or --n is required");
        const Family f{family_kind(family), n, k};
        try {
            return build_family(f);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
};

void run_predict(int n, const std::string& family) {
    const Family f{family_kind(family), n, 6};
    WedgeOfSpheres w;
    try {
        w = predict_family(f);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    emit({{"wedge", wedge_to_json(w)}, {"chi", chi_of_wedge(w)}, {"contractible", w.is_point()}});
}

void run_homology(const GraphSource& source, const std::string& coeff_name, const FaceBudget& budget) {
    const auto coeff = Coefficients::parse(coeff_name);
    if (!coeff) throw UsageError("unknown coefficients '" + coeff_name + "'");
    emit(profile_to_json(reduced_homology(source.load(), *coeff, budget)));
}

std::pair<int, int> parse_sweep(const std::string& spec) {
    const auto dots = spec.find("..");
    try {
        if (dots == std::string::npos) return {1, std::stoi(spec)};
        return {std::stoi(spec.substr(0, dots)), std::stoi(spec.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("--sweep expects A..B");
    }
}

void run_euler(const GraphSource& source, const std::string& method, const std::string& sweep,
               const FaceBudget& budget) {
    if (!sweep.empty()) {
        const auto [lo, hi] = parse_sweep(sweep);
        if (lo < 1 || hi < lo) throw UsageError("--sweep range must satisfy 1 <= A <= B");
        if (source.k < 1 || source.k > kMaxTransferRows) throw UsageError("--k out of range for the transfer matrix");
        const auto values = euler_sweep(hi, source.k);
        std::cout << "n,chi\n";
        for (int n = lo; n <= hi; ++n) std::cout << n << ',' << values[n - 1] << '\n';
        return;
    }
    if (method == "enumerate") {
        const Graph g = source.load();
        const FVector fv = f_vector(g, budget);
        json out{{"chi", euler_from_fvector(fv)}, {"f_vector", fv.counts}};
        if (source.graph_path.empty()) out = {{"n", source.n}, {"k", source.k}, {"chi", out["chi"]},
                                              {"f_vector", out["f_vector"]}, {"method", method}};
        emit(out);
        return;
    }
    if (source.n < 1) throw UsageError("--n is required");
    json chi;
    if (method == "transfer") {
        if (source.k < 1 || source.k > kMaxTransferRows) throw UsageError("--k out of range for the transfer matrix");
        chi = integer_json(euler_chi(source.n, source.k));
    } else if (method == "predict") {
        if (source.k != 6) throw UsageError("--method predict requires --k 6");
        chi = chi_of_wedge(predict_gamma(source.n));
    } else {
        throw UsageError("unknown method '" + method + "'");
    }
    emit({{"n", source.n}, {"k", source.k}, {"chi", chi}, {"method", method}});
}

void run_reduce(const GraphSource& source) { emit(trace_to_json(reduce(source.load()))); }

int run_verify(bool all, const std::string& suite, const VerifyOptions& options, const std::string& json_path) {
    if (all == !suite.empty()) throw UsageError("specify exactly one of --all or --suite NAME");
    std::vector<VerificationReport> reports;
    try {
        reports = all ? run_all(options) : std::vector<VerificationReport>{run_suite(suite, options)};
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    bool passed = true;
    json out = json::array();
    for (const auto& r : reports) {
        passed = passed && r.passed();
        std::fprintf(stderr, "%-20s %s  %zu cases, %zu failures, %zu budget skips, %.2f s\n", r.suite.c_str(),
                     r.passed() ? "PASS" : "FAIL", r.cases.size(), r.failures(), r.budget_skips.size(),
                     r.runtime_seconds);
        out.push_back(report_to_json(r));
    }
    if (json_path == "-") {
        std::cout << out.dump(2) << '\n';
    } else if (!json_path.empty()) {
        std::ofstream file(json_path);
        if (!file) throw UsageError("cannot write " + json_path);
        file << out.dump(2) << '\n';
    }
    return passed ? kPass : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Independence complexes of grid graphs: prediction, homology, Euler characteristics"};
    app.require_subcommand(1);

    int predict_n = 0;
    std::string predict_family = "gamma";
    auto* predict = app.add_subcommand("predict", "closed-form homotopy type of a family graph");
    predict->add_option("--n", predict_n, "number of columns")->required()->check(CLI::PositiveNumber);
    predict->add_option("--family", predict_family, "gamma|x|y|a|b")->default_val("gamma");

    GraphSource homology_source;
    std::string coeff = "gf2";
    auto* homology_cmd = app.add_subcommand("homology", "reduced homology via fold reduction");
    homology_source.attach(homology_cmd);
    homology_cmd->add_option("--coeff", coeff, "gf2|gf3|...|int")->default_val("gf2");

    GraphSource euler_source;
    std::string method = "transfer";
    std::string sweep;
    auto* euler = app.add_subcommand("euler", "Euler characteristic of I(grid(n, k))");
    euler_source.attach(euler);
    euler->add_option("--method", method, "transfer|enumerate|predict")->default_val("transfer");
    euler->add_option("--sweep", sweep, "CSV of chi for n in A..B (transfer matrix)");

    GraphSource reduce_source;
    auto* reduce_cmd = app.add_subcommand("reduce", "fold-lemma reduction trace");
    reduce_source.attach(reduce_cmd);

    bool all = false;
    std::string suite;
    std::string json_path;
    VerifyOptions options;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_flag("--all", all, "run every suite");
    verify->add_option("--suite", suite, "suite name");
    verify->add_flag("--deep", options.deep, "include n = 5 small homology");
    verify->add_flag("--deeper", options.deeper, "include n = 6 small homology");
    verify->add_option("--seed", options.seed, "seed for randomized suites");
    verify->add_option("--json", json_path, "write reports as JSON (- for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    const FaceBudget budget = FaceBudget::from_environment();
    options.budget = budget;
    try {
        if (*predict) run_predict(predict_n, predict_family);
        if (*homology_cmd) run_homology(homology_source, coeff, budget);
        if (*euler) run_euler(euler_source, method, sweep, budget);
        if (*reduce_cmd) run_reduce(reduce_source);
        if (*verify) return run_verify(all, suite, options, json_path);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const FaceBudgetExceeded& e) {
        std::fprintf(stderr, "budget abort: %s\n", e.what());
        return kBudget;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kFailure;
    }
    return kPass;
}
