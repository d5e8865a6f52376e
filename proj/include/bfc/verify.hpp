#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "bfc/algorithm_a.hpp"
#include "bfc/errors.hpp"
#include "bfc/io.hpp"
#include "bfc/measures.hpp"
#include "bfc/poly.hpp"
#include "bfc/truth_table.hpp"

namespace bfc {

// D vs the cube of the quantum lower bound. 16*ceil(deg/2)^3 equals 2*deg^3
// exactly when deg is even and dominates it otherwise, so consistency of the
// record follows from the degree bound alone; true Q_E is never computed.
struct Theorem4Record {
    std::optional<int> d;
    std::int64_t two_deg_cubed = 0;
    std::int64_t sixteen_qe_lower_cubed = 0;
    bool exact = false;       // deg even: the two bounds coincide
    bool consistent = false;  // d <= 16 * qe_lower^3
};

inline Theorem4Record derived_theorem4_report(const MeasureReport& r) {
    Theorem4Record rec;
    const std::int64_t deg = r.deg;
    const std::int64_t qe = r.qe_lower;
    rec.d = r.d;
    rec.two_deg_cubed = 2 * deg * deg * deg;
    rec.sixteen_qe_lower_cubed = 16 * qe * qe * qe;
    rec.exact = deg % 2 == 0;
    rec.consistent = !r.d || *r.d <= rec.sixteen_qe_lower_cubed;
    return rec;
}

struct SweepChecks {
    bool theorem2 = true;          // bs <= 2 deg^2
    bool theorem3 = true;          // deg <= D <= deg*bs <= 2 deg^3
    bool theorem4_derived = true;  // derived_theorem4_report consistency
    bool lemma1 = true;            // sensitive block inside every maxonomial
    bool alg_a_bounds = true;      // evaluator correctness + cycle/query bounds
    bool ndeg_bound = true;        // ndeg <= deg and D <= bs*ndeg
    bool average_case = true;      // mean rounds <= mean bs_x
};

struct SweepConfig {
    enum class Mode { exhaustive, random_draw };
    Mode mode = Mode::exhaustive;
    int n = 3;
    std::uint64_t sample_count = 0;  // random mode
    std::uint64_t seed = 0;
    SweepChecks checks;
    int exhaustive_n_cap = 4;  // 2^2^n functions
    MeasureCaps caps;
    // In exhaustive mode at n >= 4 the ndeg check runs on this many
    // seed-selected functions instead of all of them.
    std::uint64_t ndeg_sample_count = 2048;
    int jobs = 1;
};

struct FindingsReport {
    SweepConfig config;
    std::uint64_t functions_checked = 0;
    std::map<std::string, std::uint64_t> pass_counts;
    std::vector<nlohmann::json> failures;  // must stay empty: checks are theorems

    // Tightness statistics over the sweep.
    std::int64_t max_ratio_d = 0;  // max D/deg^3 as a fraction, deg >= 1 only
    std::int64_t max_ratio_deg3 = 1;
    std::string max_ratio_function;
    std::uint64_t d_eq_deg_bs_count = 0;
    std::optional<std::string> first_d_eq_deg;      // parity-type witness
    std::optional<std::string> first_d_eq_bs_ndeg;  // OR-type witness
    int max_deg = 0, max_bs = 0, max_d = 0;

    double runtime_seconds = 0;  // human output only; never serialized

    bool ok() const { return failures.empty(); }
};

inline nlohmann::json findings_to_json(const FindingsReport& r) {
    const auto& c = r.config;
    nlohmann::json checks = {{"theorem2", c.checks.theorem2},
                             {"theorem3", c.checks.theorem3},
                             {"theorem4_derived", c.checks.theorem4_derived},
                             {"lemma1", c.checks.lemma1},
                             {"alg_a_bounds", c.checks.alg_a_bounds},
                             {"ndeg_bound", c.checks.ndeg_bound},
                             {"average_case", c.checks.average_case}};
    nlohmann::json config = {
        {"mode", c.mode == SweepConfig::Mode::exhaustive ? "exhaustive" : "random"},
        {"n", c.n},
        {"sample_count", c.sample_count},
        {"seed", c.seed},
        {"checks", checks},
        {"ndeg_sample_count", c.ndeg_sample_count}};
    nlohmann::json j = {
        {"config", config},
        {"functions_checked", r.functions_checked},
        {"pass_counts", r.pass_counts},
        {"failures", r.failures},
        {"stats",
         {{"max_d_over_deg3",
           {{"d", r.max_ratio_d},
            {"deg3", r.max_ratio_deg3},
            {"function", r.max_ratio_function}}},
          {"d_eq_deg_bs_count", r.d_eq_deg_bs_count},
          {"first_d_eq_deg",
           r.first_d_eq_deg ? nlohmann::json(*r.first_d_eq_deg) : nlohmann::json()},
          {"first_d_eq_bs_ndeg",
           r.first_d_eq_bs_ndeg ? nlohmann::json(*r.first_d_eq_bs_ndeg)
                                : nlohmann::json()},
          {"max_deg", r.max_deg},
          {"max_bs", r.max_bs},
          {"max_d", r.max_d}}}};
    return j;
}

namespace detail {

struct ChunkResult {
    std::uint64_t functions = 0;
    std::map<std::string, std::uint64_t> pass_counts;
    std::vector<nlohmann::json> failures;
    std::int64_t ratio_d = 0;
    std::int64_t ratio_deg3 = 1;
    std::string ratio_function;
    std::uint64_t d_eq_deg_bs_count = 0;
    std::optional<std::string> first_d_eq_deg;
    std::optional<std::string> first_d_eq_bs_ndeg;
    int max_deg = 0, max_bs = 0, max_d = 0;
};

class SweepWorker {
public:
    SweepWorker(const SweepConfig& cfg, ChunkResult& out)
        : cfg_(cfg), out_(out), depth_solver_(cfg.caps.d_cap) {}

    void check_function(const TruthTable& tt, const std::string& label, bool do_ndeg) {
        ++out_.functions;
        const auto poly = MultilinearPoly::from_truth_table(tt);
        const int deg = poly.degree();
        const std::int64_t deg64 = deg;
        const int n = tt.n();

        std::vector<int> bs_profile(tt.size());
        int bs = 0;
        for (Point x = 0; x < tt.size(); ++x) {
            bs_profile[x] = block_sensitivity_at(tt, x, cfg_.caps.bs_cap).value;
            bs = std::max(bs, bs_profile[x]);
        }
        const int d = depth_solver_.depth(tt);

        out_.max_deg = std::max(out_.max_deg, deg);
        out_.max_bs = std::max(out_.max_bs, bs);
        out_.max_d = std::max(out_.max_d, d);
        if (deg >= 1) {
            // larger d/deg^3 wins; first witness kept on ties
            if (std::int64_t{d} * out_.ratio_deg3 >
                out_.ratio_d * deg64 * deg64 * deg64) {
                out_.ratio_d = d;
                out_.ratio_deg3 = deg64 * deg64 * deg64;
                out_.ratio_function = label;
            }
            if (d == deg && !out_.first_d_eq_deg) out_.first_d_eq_deg = label;
        }
        if (d == deg64 * bs && deg >= 1) ++out_.d_eq_deg_bs_count;

        if (cfg_.checks.theorem2)
            expect(bs <= 2 * deg64 * deg64, "theorem2", tt, label,
                   {{"bs", bs}, {"deg", deg}});

        if (cfg_.checks.theorem3)
            expect(deg <= d && d <= deg64 * bs && d <= 2 * deg64 * deg64 * deg64,
                   "theorem3", tt, label, {{"d", d}, {"deg", deg}, {"bs", bs}});

        if (cfg_.checks.theorem4_derived) {
            MeasureReport r;
            r.n = n;
            r.deg = deg;
            r.qe_lower = (deg + 1) / 2;
            r.d = d;
            const auto rec = derived_theorem4_report(r);
            const bool exact_ok =
                !rec.exact || rec.sixteen_qe_lower_cubed == rec.two_deg_cubed;
            expect(rec.consistent && exact_ok, "theorem4_derived", tt, label,
                   {{"d", d},
                    {"two_deg_cubed", rec.two_deg_cubed},
                    {"sixteen_qe_lower_cubed", rec.sixteen_qe_lower_cubed}});
        }

        if (cfg_.checks.lemma1 && deg >= 1) {
            bool ok = true;
            nlohmann::json detail;
            for (Point w = 0; w < tt.size() && ok; ++w) {
                for (auto [mask, coeff] : poly.terms()) {
                    if (popcount(mask) != deg) continue;
                    try {
                        const Mask b = lemma1_witness(poly, w, mask);
                        if (b == 0 || (b & mask) != b ||
                            tt(flip(w, b)) == tt(w)) {
                            ok = false;
                            detail = {{"point", w}, {"maxonomial", mask}, {"block", b}};
                            break;
                        }
                    } catch (const WitnessNotFound&) {
                        ok = false;
                        detail = {{"point", w}, {"maxonomial", mask}};
                        break;
                    }
                }
            }
            expect(ok, "lemma1", tt, label, detail);
        }

        std::uint64_t total_rounds = 0, total_bsx = 0;
        if (cfg_.checks.alg_a_bounds || cfg_.checks.average_case) {
            bool ok = true;
            nlohmann::json detail;
            for (Point x = 0; x < tt.size(); ++x) {
                FixedWordOracle oracle(n, x);
                const auto [value, trace] = run_algorithm_a(poly, oracle);
                total_rounds += trace.rounds.size();
                total_bsx += static_cast<std::uint64_t>(bs_profile[x]);
                Mask seen = 0;
                bool disjoint = true, sized = true;
                for (const auto& round : trace.rounds) {
                    Mask queried = 0;
                    for (auto [var, bit] : round.queries) queried |= Mask{1} << var;
                    if (queried & seen) disjoint = false;
                    seen |= queried;
                    if (static_cast<int>(round.queries.size()) != round.degree_before)
                        sized = false;
                }
                if (value != tt(x) ||
                    static_cast<int>(trace.rounds.size()) > bs_profile[x] ||
                    trace.total_queries > deg64 * bs_profile[x] || !disjoint ||
                    !sized) {
                    ok = false;
                    detail = {{"point", x},
                              {"value", value},
                              {"expected", tt(x)},
                              {"rounds", trace.rounds.size()},
                              {"bs_at_point", bs_profile[x]},
                              {"trace", trace_to_json(trace, n)}};
                    break;
                }
            }
            if (cfg_.checks.alg_a_bounds)
                expect(ok, "alg_a_bounds", tt, label, detail);
            if (cfg_.checks.average_case)
                expect(total_rounds <= total_bsx, "average_case", tt, label,
                       {{"total_rounds", total_rounds}, {"total_bsx", total_bsx}});
        }

        if (cfg_.checks.ndeg_bound && do_ndeg) {
            const int nd = ndeg(tt, cfg_.caps.ndeg_cap);
            expect(nd <= deg && d <= std::int64_t{bs} * nd, "ndeg_bound", tt, label,
                   {{"ndeg", nd}, {"deg", deg}, {"d", d}, {"bs", bs}});
            if (d >= 1 && d == std::int64_t{bs} * nd && !out_.first_d_eq_bs_ndeg)
                out_.first_d_eq_bs_ndeg = label;
        }
    }

private:
    void expect(bool pass, const char* check, const TruthTable& tt,
                const std::string& label, nlohmann::json detail) {
        if (pass) {
            ++out_.pass_counts[check];
            return;
        }
        out_.failures.push_back({{"check", check},
                                 {"function", label},
                                 {"truth_table", format_truth_table(tt)},
                                 {"detail", std::move(detail)}});
    }

    const SweepConfig& cfg_;
    ChunkResult& out_;
    DecisionTreeDepthSolver depth_solver_;
};

inline void merge_chunk(FindingsReport& report, const ChunkResult& c) {
    report.functions_checked += c.functions;
    for (const auto& [name, count] : c.pass_counts) report.pass_counts[name] += count;
    for (const auto& f : c.failures) report.failures.push_back(f);
    if (c.ratio_d * report.max_ratio_deg3 >
        report.max_ratio_d * c.ratio_deg3) {
        report.max_ratio_d = c.ratio_d;
        report.max_ratio_deg3 = c.ratio_deg3;
        report.max_ratio_function = c.ratio_function;
    }
    report.d_eq_deg_bs_count += c.d_eq_deg_bs_count;
    if (!report.first_d_eq_deg && c.first_d_eq_deg)
        report.first_d_eq_deg = c.first_d_eq_deg;
    if (!report.first_d_eq_bs_ndeg && c.first_d_eq_bs_ndeg)
        report.first_d_eq_bs_ndeg = c.first_d_eq_bs_ndeg;
    report.max_deg = std::max(report.max_deg, c.max_deg);
    report.max_bs = std::max(report.max_bs, c.max_bs);
    report.max_d = std::max(report.max_d, c.max_d);
}

}  // namespace detail

// Enumerates (exhaustive mode) or samples (random mode) truth tables and
// asserts every enabled check on each. Work is chunked by function index;
// chunks may run on multiple threads but are merged in index order, so the
// report does not depend on the job count.
inline FindingsReport run_sweep(const SweepConfig& cfg) {
    const auto started = std::chrono::steady_clock::now();
    if (cfg.n < 1 || cfg.n > kMaxVariables)
        throw InvalidParams("sweep arity out of range");
    if (cfg.mode == SweepConfig::Mode::exhaustive && cfg.n > cfg.exhaustive_n_cap)
        throw CapExceeded("exhaustive sweep cap is n <= " +
                          std::to_string(cfg.exhaustive_n_cap) +
                          " (2^2^n functions), got n = " + std::to_string(cfg.n));
    if (cfg.mode == SweepConfig::Mode::random_draw && cfg.sample_count == 0)
        throw InvalidParams("random sweep needs sample_count >= 1");

    const bool exhaustive = cfg.mode == SweepConfig::Mode::exhaustive;
    const std::uint64_t total =
        exhaustive ? std::uint64_t{1} << (std::uint64_t{1} << cfg.n)
                   : cfg.sample_count;

    // Random mode: all tables drawn upfront from one seeded stream, so the
    // sample set is a pure function of (n, count, seed).
    std::vector<TruthTable> samples;
    if (!exhaustive) {
        std::mt19937_64 rng(cfg.seed);
        const std::size_t size = std::size_t{1} << cfg.n;
        samples.reserve(cfg.sample_count);
        for (std::uint64_t s = 0; s < cfg.sample_count; ++s) {
            std::vector<std::uint8_t> bits(size);
            std::uint64_t word = 0;
            for (std::size_t i = 0; i < size; ++i) {
                if (i % 64 == 0) word = rng();
                bits[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1);
            }
            samples.emplace_back(cfg.n, std::move(bits));
        }
    }

    // Exhaustive mode at n >= 4 checks ndeg on a seed-selected subset.
    std::unordered_set<std::uint64_t> ndeg_selected;
    bool ndeg_all = !exhaustive || cfg.n <= 3 || cfg.ndeg_sample_count >= total;
    if (exhaustive && !ndeg_all && cfg.checks.ndeg_bound) {
        std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
        while (ndeg_selected.size() < cfg.ndeg_sample_count)
            ndeg_selected.insert(pick(rng));
    }

    const std::uint64_t chunk_size = 512;  // fixed: merge order ignores jobs
    const std::uint64_t num_chunks = (total + chunk_size - 1) / chunk_size;
    std::vector<detail::ChunkResult> chunks(num_chunks);

    auto run_chunk = [&](std::uint64_t chunk) {
        detail::SweepWorker worker(cfg, chunks[chunk]);
        const std::uint64_t begin = chunk * chunk_size;
        const std::uint64_t end = std::min(begin + chunk_size, total);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            const TruthTable tt = exhaustive
                                      ? TruthTable::from_index(cfg.n, idx)
                                      : samples[idx];
            const std::string label =
                (exhaustive ? "f" : "sample") + std::to_string(idx);
            const bool do_ndeg = ndeg_all || ndeg_selected.count(idx) > 0;
            worker.check_function(tt, label, do_ndeg);
        }
    };

    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1 || num_chunks == 1) {
        for (std::uint64_t chunk = 0; chunk < num_chunks; ++chunk) run_chunk(chunk);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (std::uint64_t chunk; (chunk = next.fetch_add(1)) < num_chunks;)
                    run_chunk(chunk);
            });
        for (auto& th : pool) th.join();
    }

    FindingsReport report;
    report.config = cfg;
    for (const auto& chunk : chunks) detail::merge_chunk(report, chunk);
    report.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    return report;
}

}  // namespace bfc
