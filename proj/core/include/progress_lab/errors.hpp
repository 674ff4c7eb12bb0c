#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace progress_lab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed `.litmus` input. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& reason)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + reason),
          line_(line),
          column_(column),
          reason_(reason) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string reason_;
};

/// A caller broke an operation's precondition (stepping a finished thread,
/// an out-of-range workgroup id, an invalid configuration).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// Exploration or simulation hit a configured resource bound.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

}  // namespace progress_lab
