#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace snarklab {

enum class ErrorCode {
  NotCubic,
  NotSimple,
  Inconsistent,
  SyntaxError,
  DuplicateEdge,
  MalformedGraph6,
  NonAdjacentPair,
  OverlappingCycles,
  SizeCapExceeded,
  NotAHist,
  InvalidAnchors,
  NoValidAnchors,
  ElementAbsent,
  VerificationFailed,
  NotAdmissible,
  ConstructionFailed,
  UnknownFixture,
  FixtureCorrupt,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace snarklab
