#include "tropdiff/errors.hpp"

namespace tropdiff {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::VariableIndex: return "VariableIndexError";
    case ErrorKind::VariableCountMismatch: return "VariableCountMismatch";
    case ErrorKind::NegativePowerOfT: return "NegativePowerOfT";
    case ErrorKind::EmptyPrecision: return "EmptyPrecision";
    case ErrorKind::UncertifiedValuation: return "UncertifiedValuation";
    case ErrorKind::MissingWeight: return "MissingWeight";
    case ErrorKind::InternalInvariant: return "InternalInvariantViolation";
    case ErrorKind::InfiniteTropValue: return "InfiniteTropValue";
    case ErrorKind::PostconditionFailure: return "PostconditionFailure";
    case ErrorKind::NotASolution: return "NotASolution";
    case ErrorKind::UniverseMismatch: return "UniverseMismatch";
    case ErrorKind::NotLinearForm: return "NotLinearForm";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::BadPair: return "BadPair";
    case ErrorKind::NaturalPole: return "NaturalPole";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
    }
    return "Error";
}

} // namespace tropdiff
