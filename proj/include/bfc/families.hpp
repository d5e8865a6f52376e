#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bfc/errors.hpp"
#include "bfc/truth_table.hpp"

namespace bfc {

enum class Family { const0, const1, dictator, and_fn, or_fn, parity, majority, address };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::const0: return "const0";
        case Family::const1: return "const1";
        case Family::dictator: return "dictator";
        case Family::and_fn: return "and";
        case Family::or_fn: return "or";
        case Family::parity: return "parity";
        case Family::majority: return "majority";
        case Family::address: return "address";
    }
    return "?";
}

inline std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::const0, Family::const1, Family::dictator,
                     Family::and_fn, Family::or_fn, Family::parity,
                     Family::majority, Family::address})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

// address takes k address variables x_0..x_{k-1} selecting one of 2^k data
// variables; n = k + 2^k.
struct FamilySpec {
    Family family;
    int n = 0;
    int k = 0;  // address only
};

inline TruthTable make_family(const FamilySpec& spec) {
    int n = spec.n;
    if (spec.family == Family::address) {
        if (spec.k < 1 || spec.k > 4)
            throw InvalidParams("address selector width k must be in 1..4");
        n = spec.k + (1 << spec.k);
        if (spec.n != 0 && spec.n != n)
            throw InvalidParams("address with k=" + std::to_string(spec.k) +
                                " has n=" + std::to_string(n));
    }
    if (n < 1 || n > kMaxVariables)
        throw InvalidParams("family arity out of range: n=" + std::to_string(n));
    if (spec.family == Family::majority && n % 2 == 0)
        throw InvalidParams("majority is defined for odd n only");

    std::vector<std::uint8_t> bits(std::size_t{1} << n);
    for (Point x = 0; x < bits.size(); ++x) {
        const int weight = popcount(x);
        switch (spec.family) {
            case Family::const0: bits[x] = 0; break;
            case Family::const1: bits[x] = 1; break;
            case Family::dictator: bits[x] = x & 1; break;
            case Family::and_fn: bits[x] = weight == n; break;
            case Family::or_fn: bits[x] = weight > 0; break;
            case Family::parity: bits[x] = weight % 2; break;
            case Family::majority: bits[x] = 2 * weight > n; break;
            case Family::address: {
                const Point addr = x & ((Point{1} << spec.k) - 1);
                bits[x] = (x >> (spec.k + addr)) & 1;
                break;
            }
        }
    }
    return TruthTable(n, std::move(bits));
}

// Closed-form measures where they are known; unset fields mean no closed
// form is claimed (majority and address).
struct ExpectedMeasures {
    std::optional<int> deg, bs, d, ndeg;
};

inline ExpectedMeasures expected_measures(const FamilySpec& spec) {
    ExpectedMeasures e;
    switch (spec.family) {
        case Family::const0:
        case Family::const1:
            e.deg = e.bs = e.d = e.ndeg = 0;
            break;
        case Family::dictator:
            e.deg = e.bs = e.d = e.ndeg = 1;
            break;
        case Family::parity:
            e.deg = e.bs = e.d = spec.n;
            break;
        case Family::or_fn:
            e.deg = e.bs = e.d = spec.n;
            e.ndeg = 1;  // x_0 + ... + x_{n-1} vanishes only at 0^n
            break;
        case Family::and_fn:
            e.deg = e.bs = e.d = spec.n;
            e.ndeg = spec.n;
            break;
        case Family::majority:
        case Family::address:
            break;
    }
    return e;
}

}  // namespace bfc
