#pragma once

#include <stdexcept>
#include <string>

namespace bfc {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidParams : std::runtime_error {
    explicit InvalidParams(const std::string& msg) : std::runtime_error(msg) {}
};

// A polynomial evaluated outside {0,1} on the Boolean cube where a
// function-representing polynomial was required.
struct NonBooleanPolynomial : std::runtime_error {
    std::uint32_t witness_point;
    NonBooleanPolynomial(const std::string& msg, std::uint32_t point)
        : std::runtime_error(msg), witness_point(point) {}
};

struct ConstantPolynomial : std::runtime_error {
    explicit ConstantPolynomial(const std::string& msg) : std::runtime_error(msg) {}
};

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// Signals an implementation bug: a maxonomial of a Boolean-valued polynomial
// always admits a sensitive block inside itself.
struct WitnessNotFound : std::logic_error {
    explicit WitnessNotFound(const std::string& msg) : std::logic_error(msg) {}
};

struct OracleError : std::runtime_error {
    explicit OracleError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace bfc
