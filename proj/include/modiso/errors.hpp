#pragma once

#include <stdexcept>
#include <string>

namespace modiso {

/// Malformed input: bad dimensions, out-of-range coordinates, parse failures.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A structural axiom failed (well-definedness, associativity, unit law, ...).
/// `axiom` names the failing law for diagnostics.
struct ValidationError : std::runtime_error {
    ValidationError(std::string axiom_name, const std::string& msg)
        : std::runtime_error(msg), axiom(std::move(axiom_name)) {}
    std::string axiom;
};

/// An oracle was asked to run past its enumeration budget.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A proven-impossible state was reached; indicates a bug, not bad input.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

inline void check_internal(bool cond, const char* msg) {
    if (!cond) throw InternalError(msg);
}

}  // namespace modiso
