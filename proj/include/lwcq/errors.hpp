#ifndef LWCQ_ERRORS_HPP
#define LWCQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lwcq {

// Malformed textual input (indices, rationals, symbols, words).
struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A nested sum that cannot converge was requested.
struct DivergenceError : std::runtime_error {
    explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// A symbolic expansion exceeded its configured term budget.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lwcq

#endif
