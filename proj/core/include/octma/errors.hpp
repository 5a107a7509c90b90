#pragma once

#include <stdexcept>
#include <string>

namespace octma {

// Base class for all library errors so callers can catch everything at once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic on degenerate input: inverting zero, dividing by a singular
// matrix, exact square root of a non-square, and the like.
struct ArithmeticError : Error {
    using Error::Error;
};

struct DivisionByZero : ArithmeticError {
    DivisionByZero() : ArithmeticError("division by zero") {}
};

struct SingularMatrix : ArithmeticError {
    SingularMatrix() : ArithmeticError("matrix is singular") {}
};

struct InexactSqrt : ArithmeticError {
    InexactSqrt() : ArithmeticError("square root is not exact in this scalar type") {}
};

// A precondition stated by an operation's contract was violated
// (non-traceless generator, zero vector where a line was expected, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// Positivity certificates: reported when a matrix required to be positive
// definite fails the leading-minor test.
struct NotPositiveDefinite : PreconditionError {
    explicit NotPositiveDefinite(const std::string& what = "matrix is not positive definite")
        : PreconditionError(what) {}
};

struct NotTraceless : PreconditionError {
    NotTraceless() : PreconditionError("matrix is not traceless") {}
};

struct ZeroVector : PreconditionError {
    ZeroVector() : PreconditionError("zero vector where a nonzero vector is required") {}
};

struct NotUnit : PreconditionError {
    NotUnit() : PreconditionError("vector is not a unit vector") {}
};

struct NotQuadratic : PreconditionError {
    NotQuadratic() : PreconditionError("polynomial is not homogeneous quadratic") {}
};

struct NoRealCoordinate : PreconditionError {
    NoRealCoordinate() : PreconditionError("line direction has no real coordinate") {}
};

// Text-format errors carry 1-based line/column of the offending token.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " at line " + std::to_string(line_) + ", column " + std::to_string(column_)),
          line(line_), column(column_) {}
};

// Iterative solver failures (Newton divergence, singular linearization, ...).
struct SolverError : Error {
    using Error::Error;
};

struct MaxIterations : SolverError {
    explicit MaxIterations(const std::string& what = "iteration limit reached")
        : SolverError(what) {}
};

struct SingularNewtonSystem : SolverError {
    explicit SingularNewtonSystem(const std::string& what = "Newton system is singular")
        : SolverError(what) {}
};

} // namespace octma
