#ifndef THETALA_ERRORS_HPP
#define THETALA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace thetala {

// Precondition violations on specs and construction parameters.
class InvalidSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class LengthMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A merge or spec would create a loop or a parallel edge.
class SimplicityViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class MissingLabel : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The input labeling does not have the shape a construction consumes.
class PatternViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidBase : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class StructureViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what)
        , line_(line)
        , column_(column)
    {
    }

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

} // namespace thetala

#endif
