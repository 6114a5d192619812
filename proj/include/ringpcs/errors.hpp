#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringpcs {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands built for a different ring, or vectors/matrices of the wrong shape.
class RingMismatch : public Error {
public:
    using Error::Error;
};

// An exhaustive scan would exceed the configured element budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class InternalInconsistency : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string &what, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace ringpcs
