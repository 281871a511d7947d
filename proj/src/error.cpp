#include "cutfacet/error.hpp"

namespace cutfacet {

const char* error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MatchingViolation: return "MatchingViolation";
    case ErrorCode::EdgeCountMismatch: return "EdgeCountMismatch";
    case ErrorCode::MissingCrossEdge: return "MissingCrossEdge";
    case ErrorCode::DuplicateCrossEdge: return "DuplicateCrossEdge";
    case ErrorCode::IntraComponentEdge: return "IntraComponentEdge";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::CycleNodeTooHigh: return "CycleNodeTooHigh";
    case ErrorCode::NotOnCycle: return "NotOnCycle";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::UnsupportedCoefficient: return "UnsupportedCoefficient";
    case ErrorCode::NotValid: return "NotValid";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotBijection: return "NotBijection";
    case ErrorCode::SameNode: return "SameNode";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::NotCommonNeighbor: return "NotCommonNeighbor";
    case ErrorCode::RhsNotZero: return "RhsNotZero";
    case ErrorCode::MalformedWitness: return "MalformedWitness";
    case ErrorCode::SumNotOne: return "SumNotOne";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::ConditionNotMet: return "ConditionNotMet";
    case ErrorCode::NoDegenerateNode: return "NoDegenerateNode";
    case ErrorCode::MalformedFamily: return "MalformedFamily";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace cutfacet
