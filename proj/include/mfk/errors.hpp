#pragma once

#include <stdexcept>
#include <string>

namespace mfk {

// Bad input data or a violated precondition: wrong ring, inhomogeneous input,
// malformed document, out-of-range parameter.  CLI maps this to exit code 2.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input exceeds a documented desk-scale resource cap (matrix rank, search
// space, variable count).  CLI maps this to exit code 3.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Text syntax error with 1-based position information.
struct parse_error : std::runtime_error {
    parse_error(const std::string& msg, int line, int column)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line;
    int column;
};

} // namespace mfk
