#pragma once
// Validation errors raised by jitterlab operations. Every condition a caller
// can trigger with bad input carries a stable ErrorKind so frontends (CLI,
// python) can map it to an exit code or exception class without string
// matching.

#include <stdexcept>
#include <string>

namespace jitterlab {

enum class ErrorKind {
  // ingestion / alignment
  MissingExample,
  UnknownExample,
  DuplicateId,
  EmptyEvalSet,
  UnknownLabel,
  LengthMismatch,
  // metrics
  NeedAtLeastTwoRuns,
  KeyMismatch,
  // cdu
  DropTooLarge,
  DropTooSmall,
  ClassEmptied,
  // analysis
  EmptyMemberList,
  IndexOutOfRange,
  EvalSetMismatch,
  TooFewPoints,
  ZeroVariance,
  // simulator
  InfeasibleSpec,
  InstanceTooLarge,
  // report
  EmptyInput,
  // io
  ParseError,
  IoError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  const char* kind_name() const { return error_kind_name(kind_); }

private:
  ErrorKind kind_;
};

}  // namespace jitterlab
