#include <catch2/catch_amalgamated.hpp>

#include "bfc/families.hpp"
#include "bfc/verify.hpp"

using namespace bfc;

namespace {

SweepChecks core_checks() {
    return {.theorem2 = true, .theorem3 = true, .theorem4_derived = true,
            .lemma1 = false, .alg_a_bounds = true, .ndeg_bound = false,
            .average_case = true};
}

}  // namespace

TEST_CASE("exhaustive n=3 with every check: 256 functions, zero failures") {
    SweepConfig cfg;
    cfg.mode = SweepConfig::Mode::exhaustive;
    cfg.n = 3;
    const auto report = run_sweep(cfg);
    CHECK(report.functions_checked == 256);
    CHECK(report.failures.empty());
    CHECK(report.pass_counts.at("theorem2") == 256);
    CHECK(report.pass_counts.at("theorem3") == 256);
    CHECK(report.pass_counts.at("theorem4_derived") == 256);
    CHECK(report.pass_counts.at("alg_a_bounds") == 256);
    CHECK(report.pass_counts.at("average_case") == 256);
    CHECK(report.pass_counts.at("ndeg_bound") == 256);
    // lemma1 skips constants (no maxonomial exists)
    CHECK(report.pass_counts.at("lemma1") == 254);

    // non-vacuous: parity-type and OR-type tightness witnesses show up
    CHECK(report.first_d_eq_deg.has_value());
    CHECK(report.first_d_eq_bs_ndeg.has_value());
    CHECK(report.d_eq_deg_bs_count > 0);
}

TEST_CASE("exhaustive cap refusal") {
    SweepConfig cfg;
    cfg.mode = SweepConfig::Mode::exhaustive;
    cfg.n = 9;
    CHECK_THROWS_AS(run_sweep(cfg), CapExceeded);
}

TEST_CASE("random sweep is reproducible and job-count independent") {
    SweepConfig cfg;
    cfg.mode = SweepConfig::Mode::random_draw;
    cfg.n = 6;
    cfg.sample_count = 100;
    cfg.seed = 7;
    cfg.checks = core_checks();

    const auto first = findings_to_json(run_sweep(cfg)).dump();
    const auto second = findings_to_json(run_sweep(cfg)).dump();
    CHECK(first == second);

    cfg.jobs = 3;
    const auto parallel = findings_to_json(run_sweep(cfg)).dump();
    CHECK(first == parallel);

    const auto report = run_sweep(cfg);
    CHECK(report.functions_checked == 100);
    CHECK(report.failures.empty());
}

TEST_CASE("different seeds give different samples") {
    SweepConfig cfg;
    cfg.mode = SweepConfig::Mode::random_draw;
    cfg.n = 6;
    cfg.sample_count = 50;
    cfg.checks = core_checks();
    cfg.seed = 1;
    const auto a = findings_to_json(run_sweep(cfg));
    cfg.seed = 2;
    const auto b = findings_to_json(run_sweep(cfg));
    CHECK(a != b);
}

TEST_CASE("random sweep needs a sample count") {
    SweepConfig cfg;
    cfg.mode = SweepConfig::Mode::random_draw;
    cfg.n = 4;
    CHECK_THROWS_AS(run_sweep(cfg), InvalidParams);
}

TEST_CASE("derived theorem 4 record") {
    const auto parity4 =
        measure_report(make_family({.family = Family::parity, .n = 4}));
    const auto rec = derived_theorem4_report(parity4);
    CHECK(rec.d == 4);
    CHECK(rec.two_deg_cubed == 128);
    CHECK(rec.sixteen_qe_lower_cubed == 128);  // 16 * 2^3
    CHECK(rec.exact);
    CHECK(rec.consistent);

    const auto zero = measure_report(make_family({.family = Family::const0, .n = 3}));
    const auto zrec = derived_theorem4_report(zero);
    CHECK(zrec.two_deg_cubed == 0);
    CHECK(zrec.sixteen_qe_lower_cubed == 0);
    CHECK(zrec.consistent);

    const auto or3 = measure_report(make_family({.family = Family::or_fn, .n = 3}));
    const auto orec = derived_theorem4_report(or3);
    CHECK(orec.d == 3);
    CHECK(orec.two_deg_cubed == 54);
    CHECK_FALSE(orec.exact);  // odd degree: 16*2^3 = 128 > 54
    CHECK(orec.consistent);
}

TEST_CASE("failure entries carry a serialized counterexample") {
    // Force a bogus failure by flipping a pass condition is not possible from
    // outside; instead check the report JSON shape stays parseable and stable.
    SweepConfig cfg;
    cfg.mode = SweepConfig::Mode::exhaustive;
    cfg.n = 2;
    const auto j = findings_to_json(run_sweep(cfg));
    CHECK(j["failures"].is_array());
    CHECK(j["failures"].empty());
    CHECK(j["config"]["mode"] == "exhaustive");
    CHECK(j["config"]["n"] == 2);
    CHECK(j["stats"].contains("max_d_over_deg3"));
}
