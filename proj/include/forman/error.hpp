#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace forman {

// Every failure the library reports carries one of these codes. The CLI maps
// each code onto a process exit status (see error_category()).
enum class ErrorCode {
  kNonPositiveWeight,
  kDuplicateEdge,
  kSelfLoop,
  kIndexOutOfRange,
  kLengthMismatch,
  kMismatchedVertexCounts,
  kEmptyLayerList,
  kEdgeNotFound,
  kNotAnInterEdge,
  kNotACompileGraph,
  kVertexNotOnEdge,
  kSameEdge,
  kNoEdges,
  kInvalidSpec,
  kInvalidArgument,
  kDegenerateGraph,
  kSyntaxError,
  kValidationError,
  kIoError,
  kUsageError,
};

std::string_view error_code_name(ErrorCode code);

// Coarse grouping used for CLI exit codes: usage, io, syntax, validation, domain.
std::string_view error_category(ErrorCode code);
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace forman
