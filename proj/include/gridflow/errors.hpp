#pragma once

#include <stdexcept>
#include <string>

namespace gridflow {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised by the case parser; carries the 1-based source position.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& msg)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line(line), column(column) {}

    int line;
    int column;
};

/// Raised when a numerical routine cannot produce a solution
/// (non-convergence, singular system, infeasible continuation, ...).
class SolveError : public Error {
public:
    using Error::Error;
};

} // namespace gridflow
