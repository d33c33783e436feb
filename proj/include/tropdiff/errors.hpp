#pragma once

#include <stdexcept>
#include <string>

namespace tropdiff {

// Every recoverable failure in the library is one of these kinds. The C API
// maps them 1:1 onto TD_ERR_* codes; the CLI maps Syntax to exit 2 and the
// rest to exit 1.
enum class ErrorKind {
    Syntax,
    VariableIndex,
    VariableCountMismatch,
    NegativePowerOfT,
    EmptyPrecision,
    UncertifiedValuation,
    MissingWeight,
    InternalInvariant,
    InfiniteTropValue,
    PostconditionFailure,
    NotASolution,
    UniverseMismatch,
    NotLinearForm,
    BadDimension,
    BadPair,
    NaturalPole,
    UnknownCommand,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace tropdiff
