#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bfc/errors.hpp"
#include "bfc/truth_table.hpp"

namespace bfc {

// A map from variable index to a fixed bit value.
class PartialAssignment {
public:
    PartialAssignment() = default;

    void bind(int var, int value) {
        if (value != 0 && value != 1)
            throw InvalidParams("assignment value must be 0 or 1");
        if (var < 0 || var >= kMaxVariables)
            throw InvalidParams("variable index out of range: " + std::to_string(var));
        if (bindings_.count(var))
            throw InvalidParams("variable x" + std::to_string(var) + " bound twice");
        bindings_.emplace(var, value);
    }

    const std::map<int, int>& bindings() const { return bindings_; }
    bool empty() const { return bindings_.empty(); }

    Mask bound_mask() const {
        Mask m = 0;
        for (auto [var, value] : bindings_) m |= Mask{1} << var;
        return m;
    }

private:
    std::map<int, int> bindings_;
};

// Sparse multilinear polynomial with exact integer coefficients; the unique
// polynomial representing a Boolean function when built from a truth table.
// Term keys are monomial masks (bit i set <=> variable x_i present).
class MultilinearPoly {
public:
    explicit MultilinearPoly(int n) : n_(n) {
        if (n < 1 || n > kMaxVariables)
            throw InvalidParams("variable count must be in 1.." +
                                std::to_string(kMaxVariables));
    }

    MultilinearPoly(int n, std::map<Mask, std::int64_t> terms)
        : MultilinearPoly(n) {
        for (auto& [mask, coeff] : terms) {
            if (mask >= Mask{1} << n)
                throw InvalidParams("monomial mask exceeds variable range");
            if (coeff != 0) terms_.emplace(mask, coeff);
        }
    }

    // Mobius inversion over the subset lattice: c_S = sum over T subseteq S
    // of (-1)^{|S|-|T|} f(T).
    static MultilinearPoly from_truth_table(const TruthTable& tt) {
        const int n = tt.n();
        std::vector<std::int64_t> c(tt.bits().begin(), tt.bits().end());
        for (int i = 0; i < n; ++i)
            for (std::size_t mask = 0; mask < c.size(); ++mask)
                if (mask & (std::size_t{1} << i))
                    c[mask] -= c[mask ^ (std::size_t{1} << i)];
        MultilinearPoly p(n);
        for (std::size_t mask = 0; mask < c.size(); ++mask)
            if (c[mask] != 0) p.terms_.emplace(static_cast<Mask>(mask), c[mask]);
        return p;
    }

    int n() const { return n_; }
    const std::map<Mask, std::int64_t>& terms() const { return terms_; }

    std::int64_t coefficient(Mask mask) const {
        auto it = terms_.find(mask);
        return it == terms_.end() ? 0 : it->second;
    }

    // Value at a Boolean point: a monomial contributes iff its variables are
    // all 1 in x.
    std::int64_t evaluate(Point x) const {
        std::int64_t sum = 0;
        for (auto [mask, coeff] : terms_)
            if ((mask & x) == mask) sum += coeff;
        return sum;
    }

    // Substitutes the assigned variables: x_i = 1 folds c_S into c_{S\{i}},
    // x_i = 0 drops terms containing i. Degree never increases.
    MultilinearPoly restricted(const PartialAssignment& a) const {
        for (auto [var, value] : a.bindings())
            if (var >= n_)
                throw InvalidParams("assigned variable x" + std::to_string(var) +
                                    " outside polynomial arity " + std::to_string(n_));
        const Mask bound = a.bound_mask();
        Mask ones = 0;
        for (auto [var, value] : a.bindings())
            if (value == 1) ones |= Mask{1} << var;

        MultilinearPoly out(n_);
        for (auto [mask, coeff] : terms_) {
            if ((mask & bound & ~ones) != 0) continue;  // killed by a zero
            const Mask reduced = mask & ~bound;
            auto [it, inserted] = out.terms_.try_emplace(reduced, coeff);
            if (!inserted && (it->second += coeff) == 0) out.terms_.erase(it);
        }
        return out;
    }

    // Degree 0 for constants, including the zero polynomial.
    int degree() const {
        int d = 0;
        for (auto [mask, coeff] : terms_) d = std::max(d, popcount(mask));
        return d;
    }

    bool is_constant() const { return degree() == 0; }

    std::int64_t constant_value() const {
        if (!is_constant())
            throw InvalidParams("polynomial is not constant");
        return terms_.empty() ? 0 : terms_.begin()->second;
    }

    // Smallest mask among the terms of maximal degree; the fixed order used
    // everywhere a maxonomial is picked.
    Mask first_maxonomial() const {
        const int d = degree();
        if (d == 0)
            throw ConstantPolynomial("constant polynomial has no maxonomial");
        for (auto [mask, coeff] : terms_)
            if (popcount(mask) == d) return mask;
        throw ConstantPolynomial("unreachable");  // degree > 0 implies a term
    }

    // Checks Boolean-valuedness on the whole cube; reports a witness if not.
    TruthTable to_truth_table() const {
        std::vector<std::uint8_t> bits(std::size_t{1} << n_);
        for (Point x = 0; x < bits.size(); ++x) {
            const std::int64_t v = evaluate(x);
            if (v != 0 && v != 1)
                throw NonBooleanPolynomial(
                    "polynomial evaluates to " + std::to_string(v) +
                    " at point " + std::to_string(x), x);
            bits[x] = static_cast<std::uint8_t>(v);
        }
        return TruthTable(n_, std::move(bits));
    }

    bool operator==(const MultilinearPoly& other) const = default;

private:
    int n_;
    std::map<Mask, std::int64_t> terms_;
};

}  // namespace bfc
