#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nfarith {

// Usage/contract violations (bad arguments, mismatched moduli, parse errors).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A splitting type was requested at a bad prime with no family rule or override.
struct UnknownSplittingError : std::runtime_error {
    uint64_t prime;
    explicit UnknownSplittingError(uint64_t p, const std::string& field)
        : std::runtime_error("no splitting rule or override for prime " + std::to_string(p) +
                             " in field " + field),
          prime(p) {}
};

// factor_degree_profile requires squarefree input.
struct NotSquarefreeError : std::runtime_error {
    explicit NotSquarefreeError(uint64_t p)
        : std::runtime_error("polynomial is not squarefree mod " + std::to_string(p)) {}
};

struct NonCoprimeDiscriminantsError : std::runtime_error {
    NonCoprimeDiscriminantsError()
        : std::runtime_error("field discriminants are not coprime") {}
};

struct CompositumDegreeMismatchError : std::runtime_error {
    CompositumDegreeMismatchError()
        : std::runtime_error("no shift constant c <= 20 yields a squarefree compositum polynomial") {}
};

struct ZeroLeadingCoefficientError : std::runtime_error {
    ZeroLeadingCoefficientError()
        : std::runtime_error("Dirichlet series inversion requires c_1 != 0") {}
};

// Resource errors report what was needed so callers can adjust budgets.
struct MemoryBudgetError : std::runtime_error {
    uint64_t required_bytes;
    uint64_t available_bytes;
    MemoryBudgetError(uint64_t need, uint64_t have)
        : std::runtime_error("memory budget exceeded: need " + std::to_string(need) +
                             " bytes, budget " + std::to_string(have) + " bytes"),
          required_bytes(need),
          available_bytes(have) {}
};

}  // namespace nfarith
