#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "bfc/errors.hpp"
#include "bfc/ndeg.hpp"
#include "bfc/poly.hpp"
#include "bfc/truth_table.hpp"

namespace bfc {

struct BlockSensitivityResult {
    int value = 0;
    std::vector<Mask> blocks;  // pairwise disjoint, each sensitive at x
};

// bs_x(f): maximum cardinality of a family of pairwise disjoint blocks B
// with f(x^B) != f(x), plus one witness family. Dynamic program over
// variable-subset masks; only inclusion-minimal sensitive blocks can appear
// in a maximum packing, so only those enter the DP.
inline BlockSensitivityResult block_sensitivity_at(const TruthTable& tt,
                                                   Point x, int n_cap = 12) {
    const int n = tt.n();
    if (n > n_cap)
        throw CapExceeded("block sensitivity cap is n <= " + std::to_string(n_cap) +
                          ", got n = " + std::to_string(n));
    const Mask full = static_cast<Mask>((std::uint64_t{1} << n) - 1);
    const int fx = tt(x);

    std::vector<std::uint8_t> sensitive(full + 1, 0);
    for (Mask b = 1; b <= full; ++b)
        sensitive[b] = tt(flip(x, b)) != fx;

    // has_sensitive_proper_subset via subset-closure over one-bit removals.
    std::vector<std::uint8_t> dominated(full + 1, 0);
    for (Mask b = 1; b <= full; ++b)
        for (int i = 0; i < n; ++i)
            if (b & (Mask{1} << i)) {
                const Mask sub = b ^ (Mask{1} << i);
                if (sub && (sensitive[sub] || dominated[sub])) { dominated[b] = 1; break; }
            }

    // Minimal sensitive blocks, grouped by lowest set bit.
    std::vector<std::vector<Mask>> by_low_bit(n);
    for (Mask b = 1; b <= full; ++b)
        if (sensitive[b] && !dominated[b])
            by_low_bit[__builtin_ctz(b)].push_back(b);

    // dp[mask] = max packing using variables inside mask; choice remembers
    // the block taken (0 = lowest variable skipped).
    std::vector<int> dp(full + 1, 0);
    std::vector<Mask> choice(full + 1, 0);
    for (Mask mask = 1; mask <= full; ++mask) {
        const int low = __builtin_ctz(mask);
        dp[mask] = dp[mask ^ (Mask{1} << low)];
        for (Mask b : by_low_bit[low])
            if ((b & mask) == b && 1 + dp[mask ^ b] > dp[mask]) {
                dp[mask] = 1 + dp[mask ^ b];
                choice[mask] = b;
            }
    }

    BlockSensitivityResult out;
    out.value = dp[full];
    for (Mask mask = full; mask;) {
        if (choice[mask]) {
            out.blocks.push_back(choice[mask]);
            mask ^= choice[mask];
        } else {
            mask ^= Mask{1} << __builtin_ctz(mask);
        }
    }
    return out;
}

struct BlockSensitivityMax {
    int value = 0;
    Point argmax = 0;
};

inline BlockSensitivityMax block_sensitivity(const TruthTable& tt, int n_cap = 12) {
    BlockSensitivityMax out;
    for (Point x = 0; x < tt.size(); ++x) {
        const int v = block_sensitivity_at(tt, x, n_cap).value;
        if (v > out.value) { out.value = v; out.argmax = x; }
    }
    return out;
}

// Exact deterministic decision-tree depth via the minimax recursion
//   D(const) = 0,  D(f) = min over live i of 1 + max(D(f|x_i=0), D(f|x_i=1)),
// memoized on subfunction tables with remaining variables compacted to a
// contiguous range. The memo may be shared across calls.
class DecisionTreeDepthSolver {
public:
    explicit DecisionTreeDepthSolver(int n_cap = 10,
                                     std::uint64_t work_budget = std::uint64_t{1} << 26)
        : n_cap_(n_cap), budget_(work_budget) {}

    int depth(const TruthTable& tt) {
        if (tt.n() > n_cap_)
            throw CapExceeded("decision tree depth cap is n <= " +
                              std::to_string(n_cap_) + ", got n = " +
                              std::to_string(tt.n()));
        work_ = 0;
        return solve(tt.bits(), tt.n());
    }

private:
    int solve(const std::vector<std::uint8_t>& table, int m) {
        if (++work_ > budget_)
            throw BudgetExceeded("decision tree depth work budget exhausted");
        bool constant = true;
        for (auto b : table)
            if (b != table[0]) { constant = false; break; }
        if (constant) return 0;

        const std::string key = pack(table, m);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

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
            if (!live) continue;
            const int d = 1 + std::max(solve(t0, m - 1), solve(t1, m - 1));
            best = std::min(best, d);
        }
        memo_.emplace(key, best);
        return best;
    }

    static std::string pack(const std::vector<std::uint8_t>& table, int m) {
        std::string key(1 + (table.size() + 7) / 8, '\0');
        key[0] = static_cast<char>(m);
        for (std::size_t i = 0; i < table.size(); ++i)
            key[1 + i / 8] |= static_cast<char>(table[i] << (i % 8));
        return key;
    }

    int n_cap_;
    std::uint64_t budget_;
    std::uint64_t work_ = 0;
    std::unordered_map<std::string, int> memo_;
};

inline int decision_tree_depth(const TruthTable& tt, int n_cap = 10) {
    DecisionTreeDepthSolver solver(n_cap);
    return solver.depth(tt);
}

struct MeasureCaps {
    int bs_cap = 12;
    int d_cap = 10;
    int ndeg_cap = 10;
};

// deg, bs, D, ndeg and the paper's bound slacks for one function. Fields a
// cap or budget blocked are left empty, along with the slacks needing them.
struct MeasureReport {
    int n = 0;
    int deg = 0;
    int qe_lower = 0;  // ceil(deg/2), the only quantum quantity reported
    std::optional<int> bs;
    std::optional<Point> bs_witness_point;
    std::optional<std::vector<int>> bs_profile;
    std::optional<int> d;
    std::optional<int> ndeg;
    std::optional<std::int64_t> slack_theorem2;  // 2 deg^2 - bs
    std::optional<std::int64_t> slack_deg_bs;    // deg*bs - D
    std::optional<std::int64_t> slack_theorem3;  // 2 deg^3 - D
    std::optional<std::int64_t> slack_bs_ndeg;   // bs*ndeg - D
};

inline MeasureReport measure_report(const TruthTable& tt,
                                    const MeasureCaps& caps = {},
                                    bool with_profile = false) {
    MeasureReport r;
    r.n = tt.n();
    r.deg = MultilinearPoly::from_truth_table(tt).degree();
    r.qe_lower = (r.deg + 1) / 2;
    const std::int64_t deg = r.deg;

    try {
        const auto bs = block_sensitivity(tt, caps.bs_cap);
        r.bs = bs.value;
        r.bs_witness_point = bs.argmax;
        r.slack_theorem2 = 2 * deg * deg - bs.value;
        if (with_profile) {
            std::vector<int> profile(tt.size());
            for (Point x = 0; x < tt.size(); ++x)
                profile[x] = block_sensitivity_at(tt, x, caps.bs_cap).value;
            r.bs_profile = std::move(profile);
        }
    } catch (const CapExceeded&) {}

    try {
        r.d = decision_tree_depth(tt, caps.d_cap);
        r.slack_theorem3 = 2 * deg * deg * deg - *r.d;
        if (r.bs) r.slack_deg_bs = deg * *r.bs - *r.d;
    } catch (const CapExceeded&) {
    } catch (const BudgetExceeded&) {}

    try {
        r.ndeg = ndeg(tt, caps.ndeg_cap);
        if (r.bs && r.d)
            r.slack_bs_ndeg = std::int64_t{*r.bs} * *r.ndeg - *r.d;
    } catch (const CapExceeded&) {}

    return r;
}

inline nlohmann::json report_to_json(const MeasureReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["deg"] = r.deg;
    j["qe_lower"] = r.qe_lower;
    auto put = [&](const char* name, const auto& opt) {
        if (opt) j[name] = *opt; else j[name] = nullptr;
    };
    put("bs", r.bs);
    put("bs_witness_point", r.bs_witness_point);
    put("bs_profile", r.bs_profile);
    put("d", r.d);
    put("ndeg", r.ndeg);
    put("slack_theorem2", r.slack_theorem2);
    put("slack_deg_bs", r.slack_deg_bs);
    put("slack_theorem3", r.slack_theorem3);
    put("slack_bs_ndeg", r.slack_bs_ndeg);
    return j;
}

}  // namespace bfc
