#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lenard {

/// Base class for all errors raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Syntax or lexical error while reading an expression or a spec file.
/// `pos` is a byte offset into the source handed to the parser; `line` and
/// `col` are 1-based and only meaningful when the source is a whole file.
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg), pos(pos) {}
    parse_error(const std::string& msg, std::size_t pos, std::size_t line, std::size_t col)
        : error(msg), pos(pos), line(line), col(col) {}
    std::size_t pos = 0;
    std::size_t line = 0;
    std::size_t col = 0;
};

/// Division by an expression that is identically zero.
struct division_by_zero : error {
    using error::error;
};

/// A denominator vanished at the evaluation point.
struct pole_error : error {
    using error::error;
};

/// Monomial exponent left the machine-word range.
struct exponent_overflow : error {
    using error::error;
};

/// Two values living on different charts were combined.
struct chart_mismatch : error {
    using error::error;
};

/// A matrix that must be invertible over the rational-function field is not.
struct singular_matrix : error {
    using error::error;
};

/// Structurally invalid input data (bad dimensions, broken symmetry, ...).
struct invalid_value : error {
    using error::error;
};

}  // namespace lenard
