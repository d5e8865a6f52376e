#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bfc/errors.hpp"
#include "bfc/truth_table.hpp"

namespace bfc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

namespace detail {

inline std::vector<Mask> monomials_up_to_degree(int n, int d) {
    std::vector<Mask> out;
    for (Mask m = 0; m < Mask{1} << n; ++m)
        if (popcount(m) <= d) out.push_back(m);
    return out;
}

// Reduced row echelon form in place; returns pivot column per row.
inline std::vector<int> rref(std::vector<std::vector<BigRational>>& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    const std::size_t cols = a[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t sel = row;
        while (sel < a.size() && a[sel][col] == 0) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[row], a[sel]);
        const BigRational inv = a[row][col];
        for (std::size_t j = col; j < cols; ++j) a[row][j] /= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][col] == 0) continue;
            const BigRational factor = a[i][col];
            for (std::size_t j = col; j < cols; ++j)
                a[i][j] -= factor * a[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    a.resize(row);  // drop zero rows
    return pivots;
}

// Basis of the nullspace of the monomial-evaluation matrix on f's 0-inputs,
// one integer-scaled vector per free column (coordinates follow `monomials`).
inline std::vector<std::vector<BigInt>> vanishing_space_basis(
    const TruthTable& tt, const std::vector<Mask>& monomials) {
    std::vector<std::vector<BigRational>> a;
    for (Point x = 0; x < tt.size(); ++x) {
        if (tt(x) != 0) continue;
        std::vector<BigRational> row(monomials.size());
        for (std::size_t j = 0; j < monomials.size(); ++j)
            row[j] = (monomials[j] & x) == monomials[j] ? 1 : 0;
        a.push_back(std::move(row));
    }

    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(monomials.size(), false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<std::vector<BigInt>> basis;
    for (std::size_t free_col = 0; free_col < monomials.size(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<BigRational> v(monomials.size());
        v[free_col] = 1;
        for (std::size_t r = 0; r < a.size(); ++r)
            v[pivots[r]] = -a[r][free_col];
        BigInt scale = 1;
        for (const auto& q : v)
            scale = boost::multiprecision::lcm(scale, denominator(q));
        std::vector<BigInt> w(v.size());
        for (std::size_t j = 0; j < v.size(); ++j)
            w[j] = numerator(v[j]) * (scale / denominator(v[j]));
        basis.push_back(std::move(w));
    }
    return basis;
}

inline BigInt evaluate_vector(const std::vector<BigInt>& coeffs,
                              const std::vector<Mask>& monomials, Point x) {
    BigInt sum = 0;
    for (std::size_t j = 0; j < monomials.size(); ++j)
        if ((monomials[j] & x) == monomials[j]) sum += coeffs[j];
    return sum;
}

}  // namespace detail

// True iff some polynomial spanned by degree-<=d monomials vanishes on every
// 0-input of f and is nonzero on every 1-input. Over the rationals a finite
// union of proper subspaces cannot cover the vanishing space, so it suffices
// that each 1-input sees some basis element nonzero.
inline bool ndeg_degree_feasible(const TruthTable& tt, int d) {
    const auto monomials = detail::monomials_up_to_degree(tt.n(), d);
    const auto basis = detail::vanishing_space_basis(tt, monomials);
    for (Point y = 0; y < tt.size(); ++y) {
        if (tt(y) != 1) continue;
        bool hit = false;
        for (const auto& b : basis)
            if (detail::evaluate_vector(b, monomials, y) != 0) { hit = true; break; }
        if (!hit) return false;
    }
    return true;
}

// Smallest d such that ndeg_degree_feasible holds. Constant 0 gets 0 (the
// zero polynomial satisfies the condition vacuously); the representing
// polynomial itself certifies d = deg(f), so the scan terminates.
inline int ndeg(const TruthTable& tt, int n_cap = 10) {
    if (tt.n() > n_cap)
        throw CapExceeded("ndeg cap is n <= " + std::to_string(n_cap) +
                          ", got n = " + std::to_string(tt.n()));
    for (int d = 0; d <= tt.n(); ++d)
        if (ndeg_degree_feasible(tt, d)) return d;
    throw WitnessNotFound("no nondeterministic polynomial up to full degree");
}

struct NdegWitness {
    int degree = 0;
    // Integer-coefficient polynomial vanishing on all 0-inputs and nonzero
    // on all 1-inputs; empty map for constant 0.
    std::map<Mask, BigInt> certificate;
    bool lower_degree_refuted = false;  // degree-1 fails the nullspace test
    int attempts = 0;
};

// Builds a concrete certificate at the accepted degree by drawing random
// integer combinations of the vanishing-space basis until one is nonzero on
// every 1-input.
inline NdegWitness ndeg_with_witness(const TruthTable& tt,
                                     std::uint64_t seed = 1,
                                     int n_cap = 10) {
    NdegWitness out;
    out.degree = ndeg(tt, n_cap);
    out.lower_degree_refuted =
        out.degree == 0 || !ndeg_degree_feasible(tt, out.degree - 1);

    const auto monomials = detail::monomials_up_to_degree(tt.n(), out.degree);
    const auto basis = detail::vanishing_space_basis(tt, monomials);

    std::vector<Point> ones;
    for (Point y = 0; y < tt.size(); ++y)
        if (tt(y) == 1) ones.push_back(y);
    if (ones.empty()) return out;  // constant 0: zero polynomial

    std::mt19937_64 rng(seed);
    for (int attempt = 1; attempt <= 64; ++attempt) {
        out.attempts = attempt;
        const std::int64_t range = 4 * attempt;
        std::uniform_int_distribution<std::int64_t> coeff(-range, range);
        std::vector<BigInt> combo(monomials.size());
        for (const auto& b : basis) {
            const std::int64_t r = coeff(rng);
            if (r == 0) continue;
            for (std::size_t j = 0; j < combo.size(); ++j) combo[j] += r * b[j];
        }
        bool ok = true;
        for (Point y : ones)
            if (detail::evaluate_vector(combo, monomials, y) == 0) { ok = false; break; }
        if (!ok) continue;
        for (std::size_t j = 0; j < monomials.size(); ++j)
            if (combo[j] != 0) out.certificate.emplace(monomials[j], combo[j]);
        return out;
    }
    throw WitnessNotFound("no certificate after 64 random combinations");
}

}  // namespace bfc
