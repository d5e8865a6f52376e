#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bfc/errors.hpp"
#include "bfc/poly.hpp"
#include "bfc/truth_table.hpp"

namespace bfc {

// Adaptive access to the input word. Each index may be queried at most once
// per run; the evaluator never needs a repeat.
class QueryOracle {
public:
    virtual ~QueryOracle() = default;

    int query(int i) {
        if (i < 0 || i >= kMaxVariables)
            throw OracleError("query index out of range: " + std::to_string(i));
        const Mask bit = Mask{1} << i;
        if (queried_ & bit)
            throw OracleError("variable x" + std::to_string(i) + " queried twice");
        queried_ |= bit;
        ++count_;
        const int v = do_query(i);
        if (v != 0 && v != 1)
            throw OracleError("oracle answered outside {0,1}");
        return v;
    }

    int queries_made() const { return count_; }
    Mask queried_mask() const { return queried_; }

private:
    virtual int do_query(int i) = 0;

    Mask queried_ = 0;
    int count_ = 0;
};

// Answers from a fixed n-bit word.
class FixedWordOracle : public QueryOracle {
public:
    FixedWordOracle(int n, Point word) : n_(n), word_(word) {
        if (word >= Point{1} << n)
            throw InvalidParams("oracle word has more than n bits");
    }

private:
    int do_query(int i) override {
        if (i >= n_) throw OracleError("query beyond oracle arity");
        return (word_ >> i) & 1;
    }

    int n_;
    Point word_;
};

struct QueryRound {
    Mask maxonomial = 0;
    int degree_before = 0;
    std::vector<std::pair<int, int>> queries;  // (variable, answered bit)
    int degree_after = 0;
};

struct QueryTrace {
    std::vector<QueryRound> rounds;
    int result = 0;
    int total_queries = 0;
};

// The maxonomial evaluator: while p is not constant, pick the first
// maxonomial, query all of its variables, substitute the answers. The final
// constant is the function value.
inline std::pair<int, QueryTrace> run_algorithm_a(const MultilinearPoly& f,
                                                  QueryOracle& oracle) {
    MultilinearPoly p = f;
    QueryTrace trace;
    while (!p.is_constant()) {
        QueryRound round;
        round.maxonomial = p.first_maxonomial();
        round.degree_before = p.degree();
        PartialAssignment a;
        for (int i = 0; i < p.n(); ++i)
            if (round.maxonomial & (Mask{1} << i)) {
                const int v = oracle.query(i);
                round.queries.emplace_back(i, v);
                a.bind(i, v);
            }
        p = p.restricted(a);
        round.degree_after = p.degree();
        trace.total_queries += static_cast<int>(round.queries.size());
        trace.rounds.push_back(std::move(round));
    }
    const std::int64_t value = p.constant_value();
    if (value != 0 && value != 1)
        throw NonBooleanPolynomial(
            "evaluator finished on constant " + std::to_string(value) +
            "; input polynomial does not represent a Boolean function", 0);
    trace.result = static_cast<int>(value);
    return {trace.result, trace};
}

// A nonempty block inside the maxonomial M to which p is sensitive at w,
// found by brute force over the 2^|M|-1 nonempty subsets in mask order.
// Always exists when M is a maxonomial of a Boolean-valued p: restricting
// everything outside M leaves M itself as a surviving monomial, so the
// restricted function is not constant.
inline Mask lemma1_witness(const MultilinearPoly& p, Point w, Mask maxonomial) {
    if (p.coefficient(maxonomial) == 0 ||
        popcount(maxonomial) != p.degree() || p.degree() == 0)
        throw InvalidParams("mask is not a maxonomial of the polynomial");
    const std::int64_t base = p.evaluate(w);
    for (Mask b = 1; b <= maxonomial; ++b) {
        if ((b & maxonomial) != b) continue;
        if (p.evaluate(flip(w, b)) != base) return b;
    }
    throw WitnessNotFound(
        "no sensitive block inside maxonomial " + std::to_string(maxonomial) +
        " at point " + std::to_string(w) +
        "; implementation bug or non-Boolean polynomial");
}

inline nlohmann::json trace_to_json(const QueryTrace& trace, int n) {
    nlohmann::json rounds = nlohmann::json::array();
    for (const auto& r : trace.rounds) {
        nlohmann::json queries = nlohmann::json::array();
        for (auto [var, value] : r.queries)
            queries.push_back({{"var", var}, {"value", value}});
        rounds.push_back({{"maxonomial", r.maxonomial},
                          {"degree_before", r.degree_before},
                          {"queries", queries},
                          {"degree_after", r.degree_after}});
    }
    return {{"n", n},
            {"rounds", rounds},
            {"result", trace.result},
            {"total_queries", trace.total_queries}};
}

}  // namespace bfc
