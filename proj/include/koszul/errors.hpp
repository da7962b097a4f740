#pragma once

#include <stdexcept>
#include <string>

namespace koszul {

// Exit-code categories used by the CLI:
//   1 = a mathematical assertion failed (a theorem the engine must satisfy),
//   2 = bad input (syntax, mismatched rings, inhomogeneous data, ...),
//   3 = internal limit or invariant of the engine itself.
enum class ErrorKind { MathAssertion = 1, Input = 2, Internal = 3 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string what) : std::runtime_error(std::move(what)), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct InputError : Error {
    explicit InputError(const std::string& w) : Error(ErrorKind::Input, w) {}
};

struct MathAssertionError : Error {
    explicit MathAssertionError(const std::string& w) : Error(ErrorKind::MathAssertion, w) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& w) : Error(ErrorKind::Internal, w) {}
};

struct DivisionByZero : InputError {
    DivisionByZero() : InputError("division by zero in prime field") {}
};

struct FieldMismatch : InputError {
    FieldMismatch() : InputError("operands belong to fields of different characteristic") {}
};

struct RingMismatch : InputError {
    RingMismatch() : InputError("operands belong to different polynomial rings") {}
};

struct NotHomogeneous : InputError {
    explicit NotHomogeneous(const std::string& w = "element is not homogeneous") : InputError(w) {}
};

struct SyntaxError : InputError {
    explicit SyntaxError(const std::string& w) : InputError(w) {}
};

struct UndeclaredName : InputError {
    explicit UndeclaredName(const std::string& w) : InputError(w) {}
};

struct ZeroDivisorArgument : InputError {
    ZeroDivisorArgument() : InputError("colon by the zero polynomial") {}
};

struct NotFiniteLength : InputError {
    NotFiniteLength() : InputError("module does not have finite length") {}
};

struct EmptyModule : InputError {
    EmptyModule() : InputError("operation undefined on the zero module") {}
};

struct UnsupportedQuotient : InputError {
    explicit UnsupportedQuotient(const std::string& w = "quotient ring not supported here")
        : InputError(w) {}
};

struct DifferentQuotients : InputError {
    DifferentQuotients() : InputError("modules live over different quotient rings") {}
};

struct NotAComplex : InputError {
    NotAComplex() : InputError("consecutive maps do not compose to zero") {}
};

struct NotContained : InputError {
    explicit NotContained(const std::string& w = "denominator is not contained in numerator")
        : InputError(w) {}
};

struct EmptyIndexSet : InputError {
    EmptyIndexSet() : InputError("index set must be nonempty") {}
};

struct InvalidParameter : InputError {
    explicit InvalidParameter(const std::string& w) : InputError(w) {}
};

struct NotSurjective : InputError {
    NotSurjective() : InputError("map is not surjective") {}
};

struct NotASandwich : InputError {
    explicit NotASandwich(const std::string& w) : InputError(w) {}
};

struct FilterRegularityViolated : InputError {
    explicit FilterRegularityViolated(const std::string& w) : InputError(w) {}
};

struct NoFilterRegularFound : MathAssertionError {
    explicit NoFilterRegularFound(int tries)
        : MathAssertionError("no filter-regular linear form found in " + std::to_string(tries) +
                             " tries") {}
};

struct EqualityFailed : MathAssertionError {
    explicit EqualityFailed(const std::string& w) : MathAssertionError(w) {}
};

struct BoundViolated : MathAssertionError {
    explicit BoundViolated(const std::string& w) : MathAssertionError(w) {}
};

struct CheckFailed : MathAssertionError {
    explicit CheckFailed(const std::string& w) : MathAssertionError(w) {}
};

struct AssertionFailed : MathAssertionError {
    explicit AssertionFailed(const std::string& w) : MathAssertionError(w) {}
};

struct InternalBoundExceeded : InternalError {
    explicit InternalBoundExceeded(const std::string& w) : InternalError(w) {}
};

} // namespace koszul
