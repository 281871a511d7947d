#ifndef CUTFACET_ERROR_HPP
#define CUTFACET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cutfacet {

enum class ErrorCode {
    InvalidArgument = 1,
    // validate_gh
    MatchingViolation,
    EdgeCountMismatch,
    MissingCrossEdge,
    DuplicateCrossEdge,
    IntraComponentEdge,
    // cycles
    NotACycle,
    CycleNodeTooHigh,
    NotOnCycle,
    // inequalities
    AmbientMismatch,
    UnsupportedCoefficient,
    NotValid,
    TooLarge,
    NotBijection,
    SameNode,
    NotAnEdge,
    NotCommonNeighbor,
    RhsNotZero,
    MalformedWitness,
    // families
    SumNotOne,
    BadParameters,
    // facet theory
    ConditionNotMet,
    NoDegenerateNode,
    MalformedFamily,
    // io
    ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message)
{
    throw Error(code, std::string(error_code_name(code)) + ": " + message);
}

} // namespace cutfacet

#endif
