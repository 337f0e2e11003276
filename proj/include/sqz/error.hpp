#pragma once

#include <stdexcept>
#include <string>

namespace sqz {

enum class ErrorKind {
    MissingDivisor,
    MissingVariable,
    MissingOne,
    BadArity,
    NotArtinian,
    ConventionViolation,
    NotShifted,
    NotStronglyStable,
    VertexOutOfRange,
    NotPure,
    NotAFace,
    NoRidges,
    BudgetExceeded,
    CapExceeded,
    DegreeExceedsD,
    TOutOfRange,
    NotShiftedComplex,
    UnknownSuite,
    ParseError,
    ModeDisagreement,
    BadInput,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace sqz
