#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bfc/algorithm_a.hpp"
#include "bfc/decision_tree.hpp"
#include "bfc/errors.hpp"
#include "bfc/families.hpp"
#include "bfc/io.hpp"
#include "bfc/measures.hpp"
#include "bfc/poly.hpp"
#include "bfc/truth_table.hpp"
#include "bfc/verify.hpp"

namespace {

// Exit codes: 0 success, 1 check failure, 2 input error, 3 cap/budget.
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapError = 3;

struct InputArgs {
    std::string tt_text;
    std::string poly_text;
    std::string file;
    std::string family;
    int n = 0;
    int k = 0;

    void add_to(CLI::App& cmd) {
        auto* tt = cmd.add_option("--tt", tt_text, "inline truth table, e.g. n=2;bits=0111");
        auto* poly = cmd.add_option("--poly", poly_text, "inline polynomial JSON");
        auto* file = cmd.add_option("--file", this->file, "file holding a truth table or polynomial");
        auto* family = cmd.add_option("--family", this->family,
                                      "family name: const0 const1 dictator and or parity majority address");
        cmd.add_option("--n", n, "variable count (family input)");
        cmd.add_option("--k", k, "selector width (address family)");
        tt->excludes(poly)->excludes(file)->excludes(family);
        poly->excludes(file)->excludes(family);
        file->excludes(family);
    }

    // Exactly one source; returns the polynomial and, when available
    // without a full cube check, the truth table.
    bfc::MultilinearPoly resolve_poly() const {
        if (!poly_text.empty()) return bfc::parse_poly(poly_text);
        if (!file.empty()) {
            const std::string text = slurp(file);
            if (text.rfind("n=", 0) == 0)
                return bfc::MultilinearPoly::from_truth_table(bfc::parse_truth_table(text));
            return bfc::parse_poly(text);
        }
        return bfc::MultilinearPoly::from_truth_table(resolve_tt());
    }

    bfc::TruthTable resolve_tt() const {
        if (!tt_text.empty()) return bfc::parse_truth_table(tt_text);
        if (!poly_text.empty()) return bfc::parse_poly(poly_text).to_truth_table();
        if (!file.empty()) {
            const std::string text = slurp(file);
            if (text.rfind("n=", 0) == 0) return bfc::parse_truth_table(text);
            return bfc::parse_poly(text).to_truth_table();
        }
        if (!family.empty()) {
            const auto fam = bfc::family_from_name(family);
            if (!fam) throw bfc::ParseError("unknown family '" + family + "'");
            return bfc::make_family({.family = *fam, .n = n, .k = k});
        }
        throw bfc::ParseError("no input: pass one of --tt, --poly, --file, --family");
    }

private:
    static std::string slurp(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw bfc::ParseError("cannot read file '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
            text.pop_back();
        return text;
    }
};

bfc::Point parse_point(const std::string& text, int n) {
    if (static_cast<int>(text.size()) != n)
        throw bfc::ParseError("point '" + text + "' has " +
                              std::to_string(text.size()) + " bits, function has n=" +
                              std::to_string(n));
    bfc::Point x = 0;
    for (int i = 0; i < n; ++i) {
        if (text[i] != '0' && text[i] != '1')
            throw bfc::ParseError("point bits must be 0/1");
        x |= static_cast<bfc::Point>(text[i] - '0') << i;  // char i is x_i
    }
    return x;
}

void print_measures_human(const bfc::MeasureReport& r) {
    auto line = [](const char* name, const auto& v) {
        if (v) std::cout << name << " = " << *v << "\n";
        else std::cout << name << " = unavailable\n";
    };
    std::cout << "n = " << r.n << "\n";
    std::cout << "deg = " << r.deg << "\n";
    line("bs", r.bs);
    line("d", r.d);
    line("ndeg", r.ndeg);
    std::cout << "qe_lower = " << r.qe_lower << "\n";
    line("slack_theorem2 (2deg^2-bs)", r.slack_theorem2);
    line("slack_deg_bs (deg*bs-d)", r.slack_deg_bs);
    line("slack_theorem3 (2deg^3-d)", r.slack_theorem3);
    line("slack_bs_ndeg (bs*ndeg-d)", r.slack_bs_ndeg);
}

void print_trace_human(const bfc::QueryTrace& trace, int n) {
    int i = 0;
    for (const auto& round : trace.rounds) {
        std::cout << "round " << ++i << ": maxonomial "
                  << bfc::format_mask_binary(round.maxonomial, n) << ", deg "
                  << round.degree_before << " -> " << round.degree_after
                  << ", queries";
        for (auto [var, value] : round.queries)
            std::cout << " x" << var << "=" << value;
        std::cout << "\n";
    }
}

bfc::SweepChecks parse_checks(const std::string& list) {
    if (list == "all") return {};
    bfc::SweepChecks checks{.theorem2 = false, .theorem3 = false,
                            .theorem4_derived = false, .lemma1 = false,
                            .alg_a_bounds = false, .ndeg_bound = false,
                            .average_case = false};
    if (list == "core") {
        checks.theorem2 = checks.theorem3 = checks.theorem4_derived = true;
        checks.alg_a_bounds = checks.average_case = true;
        return checks;
    }
    std::istringstream in(list);
    std::string name;
    while (std::getline(in, name, ',')) {
        if (name == "theorem2") checks.theorem2 = true;
        else if (name == "theorem3") checks.theorem3 = true;
        else if (name == "theorem4_derived") checks.theorem4_derived = true;
        else if (name == "lemma1") checks.lemma1 = true;
        else if (name == "alg_a_bounds") checks.alg_a_bounds = true;
        else if (name == "ndeg_bound") checks.ndeg_bound = true;
        else if (name == "average_case") checks.average_case = true;
        else throw bfc::ParseError("unknown check '" + name + "'");
    }
    return checks;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Boolean function complexity toolkit"};
    app.require_subcommand(1);

    // measures
    auto* measures = app.add_subcommand("measures", "compute deg, bs, D, ndeg and bound slacks");
    InputArgs measures_in;
    measures_in.add_to(*measures);
    std::string measures_format = "human";
    measures->add_option("--format", measures_format, "human or json")
        ->check(CLI::IsMember({"human", "json"}));
    bool with_profile = false;
    measures->add_flag("--profile", with_profile, "include per-point bs profile");
    bfc::MeasureCaps caps;
    measures->add_option("--bs-cap", caps.bs_cap, "block sensitivity arity cap");
    measures->add_option("--d-cap", caps.d_cap, "decision tree depth arity cap");
    measures->add_option("--ndeg-cap", caps.ndeg_cap, "ndeg arity cap");

    // run
    auto* run = app.add_subcommand("run", "evaluate a function with the maxonomial algorithm");
    InputArgs run_in;
    run_in.add_to(*run);
    std::string point_text;
    run->add_option("--x", point_text, "input word, one 0/1 char per variable, x0 first")
        ->required();
    bool with_trace = false;
    run->add_flag("--trace", with_trace, "print the per-round query trace");
    std::string run_format = "human";
    run->add_option("--format", run_format)->check(CLI::IsMember({"human", "json"}));

    // verify
    auto* verify = app.add_subcommand("verify", "sweep functions and assert every bound");
    bfc::SweepConfig cfg;
    bool exhaustive = false, random_mode = false;
    verify->add_flag("--exhaustive", exhaustive, "all 2^2^n functions");
    verify->add_flag("--random", random_mode, "seeded random truth tables");
    verify->add_option("--n", cfg.n, "variable count")->required();
    verify->add_option("--count", cfg.sample_count, "sample count (random mode)");
    verify->add_option("--seed", cfg.seed, "random seed, echoed in the report");
    verify->add_option("--jobs", cfg.jobs, "worker threads");
    verify->add_option("--exhaustive-cap", cfg.exhaustive_n_cap,
                       "largest n allowed in exhaustive mode");
    verify->add_option("--ndeg-samples", cfg.ndeg_sample_count,
                       "functions given the ndeg check in exhaustive mode at n >= 4");
    std::string checks_list;
    verify->add_option("--checks", checks_list,
                       "all, core, or comma list of: theorem2 theorem3 "
                       "theorem4_derived lemma1 alg_a_bounds ndeg_bound average_case");
    std::string verify_format = "human";
    verify->add_option("--format", verify_format)->check(CLI::IsMember({"human", "json"}));

    // family
    auto* family = app.add_subcommand("family", "emit a named function family");
    std::string family_name, family_emit = "bits";
    int family_n = 0, family_k = 0;
    family->add_option("--family", family_name, "family name")->required();
    family->add_option("--n", family_n);
    family->add_option("--k", family_k, "selector width (address)");
    family->add_option("--emit", family_emit, "bits, hex, or poly")
        ->check(CLI::IsMember({"bits", "hex", "poly"}));

    // tree
    auto* tree = app.add_subcommand("tree", "compile the evaluator's strategy to a decision tree");
    InputArgs tree_in;
    tree_in.add_to(*tree);
    std::string dot_path;
    tree->add_option("--dot", dot_path, "also write DOT to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    if (measures->parsed()) {
        const auto tt = measures_in.resolve_tt();
        const auto report = bfc::measure_report(tt, caps, with_profile);
        if (measures_format == "json")
            std::cout << bfc::report_to_json(report).dump(2) << "\n";
        else
            print_measures_human(report);
        return 0;
    }

    if (run->parsed()) {
        const auto poly = run_in.resolve_poly();
        const bfc::Point x = parse_point(point_text, poly.n());
        bfc::FixedWordOracle oracle(poly.n(), x);
        const auto [value, trace] = bfc::run_algorithm_a(poly, oracle);
        if (run_format == "json") {
            std::cout << bfc::trace_to_json(trace, poly.n()).dump(2) << "\n";
        } else {
            std::cout << "value = " << value << "\n";
            std::cout << "rounds = " << trace.rounds.size() << "\n";
            std::cout << "queries = " << trace.total_queries << "\n";
            if (with_trace) print_trace_human(trace, poly.n());
        }
        return 0;
    }

    if (verify->parsed()) {
        if (exhaustive == random_mode)
            throw bfc::ParseError("pass exactly one of --exhaustive and --random");
        cfg.mode = exhaustive ? bfc::SweepConfig::Mode::exhaustive
                              : bfc::SweepConfig::Mode::random_draw;
        // Random-mode sweeps skip lemma1 and ndeg by default: both are
        // superlinear in 2^n per function. Ask for them via --checks.
        if (checks_list.empty()) checks_list = exhaustive ? "all" : "core";
        cfg.checks = parse_checks(checks_list);
        const auto report = bfc::run_sweep(cfg);
        if (verify_format == "json") {
            std::cout << bfc::findings_to_json(report).dump(2) << "\n";
        } else {
            std::cout << "functions checked: " << report.functions_checked << "\n";
            for (const auto& [name, count] : report.pass_counts)
                std::cout << "check " << name << ": " << count << " pass\n";
            std::cout << "failures: " << report.failures.size() << "\n";
            for (const auto& f : report.failures)
                std::cout << "FAILURE " << f.dump() << "\n";
            std::cout << "max D/deg^3 = " << report.max_ratio_d << "/"
                      << report.max_ratio_deg3 << " at " << report.max_ratio_function
                      << "\n";
            std::cout << "functions with D = deg*bs: " << report.d_eq_deg_bs_count
                      << "\n";
            if (report.first_d_eq_deg)
                std::cout << "D = deg witness: " << *report.first_d_eq_deg << "\n";
            if (report.first_d_eq_bs_ndeg)
                std::cout << "D = bs*ndeg witness: " << *report.first_d_eq_bs_ndeg
                          << "\n";
            std::cout << "seed: " << report.config.seed << "\n";
            std::fprintf(stderr, "runtime: %.3fs\n", report.runtime_seconds);
        }
        return report.ok() ? 0 : kExitCheckFailure;
    }

    if (family->parsed()) {
        const auto fam = bfc::family_from_name(family_name);
        if (!fam) throw bfc::ParseError("unknown family '" + family_name + "'");
        const auto tt = bfc::make_family({.family = *fam, .n = family_n, .k = family_k});
        if (family_emit == "bits") std::cout << bfc::format_truth_table(tt) << "\n";
        else if (family_emit == "hex") std::cout << bfc::format_truth_table_hex(tt) << "\n";
        else std::cout << bfc::poly_to_json(bfc::MultilinearPoly::from_truth_table(tt)).dump(2) << "\n";
        return 0;
    }

    if (tree->parsed()) {
        const auto poly = tree_in.resolve_poly();
        const auto compiled = bfc::compile_decision_tree(poly);
        std::cout << "depth = " << compiled.depth() << "\n";
        std::cout << compiled.to_text();
        if (!dot_path.empty()) {
            std::ofstream out(dot_path);
            if (!out) throw bfc::ParseError("cannot write '" + dot_path + "'");
            out << compiled.to_dot();
        }
        return 0;
    }

    return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const bfc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const bfc::InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const bfc::NonBooleanPolynomial& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const bfc::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapError;
    } catch (const bfc::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
}
