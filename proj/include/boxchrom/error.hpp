#pragma once

#include <stdexcept>
#include <string>

namespace bxc {

enum class ErrorCode {
  OverlappingBoxes,
  EmptyRegion,
  DomainError,
  MissingVertex,
  Timeout,
  SizeLimit,
  PreconditionViolated,
  InternalError,
  RealizationError,
  StructureError,
  ParseError,
  SolverCrash,
  Infeasible,
};

const char* to_string(ErrorCode code);

/// Exception carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bxc
