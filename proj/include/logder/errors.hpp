#ifndef LOGDER_ERRORS_HPP
#define LOGDER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace logder {

// Invalid value for an operation (zero denominator, gcd(0,0), ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input violates the hypotheses required by the construction
// (orders, characteristic, weight condition, ...).
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The ideal is the whole ring: the input pair admits no common solution.
struct EmptyVarietyError : DomainError {
    using DomainError::DomainError;
};

struct ParseError : std::runtime_error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace logder

#endif
