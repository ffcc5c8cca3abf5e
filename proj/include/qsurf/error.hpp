#pragma once

#include <stdexcept>
#include <string>

namespace qsurf {

enum class ErrorCode {
    RankMismatch,
    NonExactDivision,
    NotNormalizable,
    NotSkew,
    NotCompatible,
    NonPositiveD,
    IndexOutOfRange,
    InvalidTriangulation,
    NoCompatibleLambda,
    NotComposable,
    NotReduced,
    RelationViolated,
    ParseError,
    NotCrossingSequence,
    CannotTwist,
    BijectionViolation,
    InconsistentValuation,
    UnreachableSubmodule,
    UnmatchedCase,
    AmbiguousConnector,
    NoSolution,
    AmbiguousSolution,
    Mismatch,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

} // namespace qsurf
