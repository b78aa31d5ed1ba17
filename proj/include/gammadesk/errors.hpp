#pragma once

#include <stdexcept>
#include <string>

namespace gammadesk {

// Enumeration request exceeds a configured hard limit (refuse up front, do not
// start a computation that cannot finish).
class EnumLimitError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A recurrence step produced a non-exact division or otherwise inconsistent
// state.  Exact divisibility is part of the contract; any remainder means the
// implementation (or the input table) is wrong, so computation must stop.
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A persisted table file failed validation.  line() is the 1-based offending
// line number (0 when the error is not tied to a specific line).
class PersistenceError : public std::runtime_error {
public:
    PersistenceError(const std::string& msg, long line_no)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg
                                         : msg),
          line_(line_no) {}
    long line() const { return line_; }

private:
    long line_;
};

// A fixed-point series solver did not reach an exact solution (residual
// nonzero after the guaranteed number of iterations).
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gammadesk
