#pragma once

#include <cstdint>
#include <vector>

#include "bfc/errors.hpp"

namespace bfc {

// Variable x_i (0-based) lives at bit i of every mask and point in this
// library; truth-table index i encodes the point whose j-th bit is x_j.
inline constexpr int kMaxVariables = 20;

using Point = std::uint32_t;
using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }

// x with all variables in B flipped. Involution.
inline Point flip(Point x, Mask block) { return x ^ block; }

// Full specification of a total Boolean function on n variables.
class TruthTable {
public:
    TruthTable(int n, std::vector<std::uint8_t> bits)
        : n_(n), bits_(std::move(bits)) {
        if (n < 1 || n > kMaxVariables)
            throw InvalidParams("variable count must be in 1.." +
                                std::to_string(kMaxVariables) + ", got " +
                                std::to_string(n));
        if (bits_.size() != std::size_t{1} << n)
            throw InvalidParams("truth table for n=" + std::to_string(n) +
                                " needs " + std::to_string(std::size_t{1} << n) +
                                " bits, got " + std::to_string(bits_.size()));
        for (auto b : bits_)
            if (b > 1) throw InvalidParams("truth table entries must be 0 or 1");
    }

    // Table read off the low 2^n bits of an integer; handy for exhaustive
    // enumeration of all functions at small n.
    static TruthTable from_index(int n, std::uint64_t function_index) {
        std::vector<std::uint8_t> bits(std::size_t{1} << n);
        for (std::size_t i = 0; i < bits.size(); ++i)
            bits[i] = static_cast<std::uint8_t>((function_index >> i) & 1);
        return TruthTable(n, std::move(bits));
    }

    int n() const { return n_; }
    std::size_t size() const { return bits_.size(); }
    int operator()(Point x) const { return bits_[x]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    bool is_constant() const {
        for (auto b : bits_)
            if (b != bits_[0]) return false;
        return true;
    }

    bool operator==(const TruthTable& other) const = default;

private:
    int n_;
    std::vector<std::uint8_t> bits_;
};

}  // namespace bfc
