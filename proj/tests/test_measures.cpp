#include <catch2/catch_amalgamated.hpp>

#include "bfc/families.hpp"
#include "bfc/measures.hpp"

using namespace bfc;

namespace {

// Independent set-packing enumerator: tries every sensitive block (minimal
// or not) recursively. Shares no code with the submask DP.
int packing_oracle(const TruthTable& tt, Point x, Mask available) {
    int best = 0;
    for (Mask b = available; b; b = (b - 1) & available)
        if (tt(flip(x, b)) != tt(x))
            best = std::max(best, 1 + packing_oracle(tt, x, available & ~b));
    return best;
}

// Unmemoized minimax depth recursion.
int depth_reference(const std::vector<std::uint8_t>& table, int m) {
    bool constant = true;
    for (auto b : table)
        if (b != table[0]) constant = false;
    if (constant) return 0;
    int best = m + 1;
    std::vector<std::uint8_t> t0(table.size() / 2), t1(table.size() / 2);
    for (int i = 0; i < m; ++i) {
        bool live = false;
        for (std::size_t j = 0; j < t0.size(); ++j) {
            const std::size_t lo = j & ((std::size_t{1} << i) - 1);
            const std::size_t idx = lo | ((j >> i) << (i + 1));
            t0[j] = table[idx];
            t1[j] = table[idx | (std::size_t{1} << i)];
            live |= t0[j] != t1[j];
        }
        if (live)
            best = std::min(best, 1 + std::max(depth_reference(t0, m - 1),
                                               depth_reference(t1, m - 1)));
    }
    return best;
}

}  // namespace

TEST_CASE("block sensitivity at a point: named cases") {
    for (int n = 1; n <= 6; ++n) {
        const auto orn = make_family({.family = Family::or_fn, .n = n});
        const auto at_zero = block_sensitivity_at(orn, 0);
        CHECK(at_zero.value == n);
        CHECK(at_zero.blocks.size() == static_cast<std::size_t>(n));
        for (Mask b : at_zero.blocks) CHECK(popcount(b) == 1);
    }

    const auto const1 = make_family({.family = Family::const1, .n = 3});
    for (Point x = 0; x < 8; ++x)
        CHECK(block_sensitivity_at(const1, x).value == 0);

    // OR2 at (1,1): only the joint flip to (0,0) changes the value
    const auto or2 = make_family({.family = Family::or_fn, .n = 2});
    CHECK(block_sensitivity_at(or2, 0b11).value == 1);
}

TEST_CASE("block sensitivity witnesses verify independently") {
    for (std::uint32_t idx = 0; idx < 256; ++idx) {
        const auto tt = TruthTable::from_index(3, idx);
        for (Point x = 0; x < 8; ++x) {
            const auto r = block_sensitivity_at(tt, x);
            CHECK(r.blocks.size() == static_cast<std::size_t>(r.value));
            Mask used = 0;
            for (Mask b : r.blocks) {
                CHECK(b != 0);
                CHECK((b & used) == 0);  // pairwise disjoint
                used |= b;
                CHECK(tt(flip(x, b)) != tt(x));
            }
        }
    }
}

TEST_CASE("block sensitivity equals the set-packing oracle on all n=3 functions") {
    for (std::uint32_t idx = 0; idx < 256; ++idx) {
        const auto tt = TruthTable::from_index(3, idx);
        for (Point x = 0; x < 8; ++x)
            CHECK(block_sensitivity_at(tt, x).value == packing_oracle(tt, x, 0b111));
    }
}

TEST_CASE("block sensitivity maximum") {
    for (int n = 1; n <= 6; ++n) {
        const auto parity = make_family({.family = Family::parity, .n = n});
        CHECK(block_sensitivity(parity).value == n);
    }
    CHECK(block_sensitivity(make_family({.family = Family::const0, .n = 4})).value == 0);
}

TEST_CASE("block sensitivity respects the arity cap") {
    const auto tt = make_family({.family = Family::parity, .n = 4});
    CHECK_THROWS_AS(block_sensitivity_at(tt, 0, 3), CapExceeded);
    CHECK_THROWS_AS(block_sensitivity(tt, 3), CapExceeded);
}

TEST_CASE("decision tree depth: named cases") {
    CHECK(decision_tree_depth(make_family({.family = Family::const0, .n = 3})) == 0);
    CHECK(decision_tree_depth(make_family({.family = Family::const1, .n = 5})) == 0);
    for (int n = 1; n <= 5; ++n)
        CHECK(decision_tree_depth(make_family({.family = Family::dictator, .n = n})) == 1);
    CHECK(decision_tree_depth(make_family({.family = Family::or_fn, .n = 2})) == 2);
    for (int n = 1; n <= 6; ++n)
        CHECK(decision_tree_depth(make_family({.family = Family::parity, .n = n})) == n);
}

TEST_CASE("memoized depth equals unmemoized reference on all n=3 functions") {
    DecisionTreeDepthSolver solver;
    for (std::uint32_t idx = 0; idx < 256; ++idx) {
        const auto tt = TruthTable::from_index(3, idx);
        CHECK(solver.depth(tt) == depth_reference(tt.bits(), 3));
    }
}

TEST_CASE("decision tree depth cap and budget") {
    const auto tt = make_family({.family = Family::parity, .n = 5});
    CHECK_THROWS_AS(decision_tree_depth(tt, 4), CapExceeded);
    DecisionTreeDepthSolver tiny(10, 3);
    CHECK_THROWS_AS(tiny.depth(tt), BudgetExceeded);
}

TEST_CASE("measure report: parity 4") {
    const auto r = measure_report(make_family({.family = Family::parity, .n = 4}));
    CHECK(r.deg == 4);
    CHECK(r.bs == 4);
    CHECK(r.d == 4);
    CHECK(r.qe_lower == 2);
    CHECK(r.slack_theorem2 == 28);   // 2*16 - 4
    CHECK(r.slack_deg_bs == 12);     // 16 - 4
    CHECK(r.slack_theorem3 == 124);  // 128 - 4
}

TEST_CASE("measure report: constant 0") {
    const auto r = measure_report(make_family({.family = Family::const0, .n = 3}));
    CHECK(r.deg == 0);
    CHECK(r.bs == 0);
    CHECK(r.d == 0);
    CHECK(r.ndeg == 0);
    CHECK(r.qe_lower == 0);
    CHECK(r.slack_bs_ndeg == 0);
}

TEST_CASE("measure report: OR3 makes the de Wolf bound tight") {
    const auto r = measure_report(make_family({.family = Family::or_fn, .n = 3}));
    CHECK(r.deg == 3);
    CHECK(r.bs == 3);
    CHECK(r.d == 3);
    CHECK(r.ndeg == 1);
    CHECK(r.slack_bs_ndeg == 0);  // D = bs * ndeg
}

TEST_CASE("measure report leaves capped fields empty") {
    const auto tt = make_family({.family = Family::parity, .n = 5});
    const auto r = measure_report(tt, MeasureCaps{.bs_cap = 4, .d_cap = 4, .ndeg_cap = 4});
    CHECK(r.deg == 5);
    CHECK_FALSE(r.bs.has_value());
    CHECK_FALSE(r.d.has_value());
    CHECK_FALSE(r.ndeg.has_value());
    CHECK_FALSE(r.slack_theorem2.has_value());
}

TEST_CASE("bound slacks are nonnegative on all n=3 functions") {
    for (std::uint32_t idx = 0; idx < 256; ++idx) {
        const auto r = measure_report(TruthTable::from_index(3, idx));
        CHECK(*r.slack_theorem2 >= 0);
        CHECK(*r.slack_deg_bs >= 0);
        CHECK(*r.slack_theorem3 >= 0);
        CHECK(*r.slack_bs_ndeg >= 0);
        CHECK(*r.ndeg <= r.deg);
        CHECK(r.deg <= *r.d);
    }
}

TEST_CASE("bs profile is emitted on request") {
    const auto tt = make_family({.family = Family::or_fn, .n = 3});
    const auto r = measure_report(tt, {}, /*with_profile=*/true);
    REQUIRE(r.bs_profile.has_value());
    CHECK((*r.bs_profile)[0] == 3);
    CHECK((*r.bs_profile)[0b111] == 1);
}
