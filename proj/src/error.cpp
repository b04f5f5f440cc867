#include "forman/error.hpp"

namespace forman {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kMismatchedVertexCounts: return "MismatchedVertexCounts";
    case ErrorCode::kEmptyLayerList: return "EmptyLayerList";
    case ErrorCode::kEdgeNotFound: return "EdgeNotFound";
    case ErrorCode::kNotAnInterEdge: return "NotAnInterEdge";
    case ErrorCode::kNotACompileGraph: return "NotACompileGraph";
    case ErrorCode::kVertexNotOnEdge: return "VertexNotOnEdge";
    case ErrorCode::kSameEdge: return "SameEdge";
    case ErrorCode::kNoEdges: return "NoEdges";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDegenerateGraph: return "DegenerateGraph";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kUsageError: return "UsageError";
  }
  return "Unknown";
}

std::string_view error_category(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsageError:
    case ErrorCode::kInvalidSpec:
      return "usage";
    case ErrorCode::kIoError:
      return "io";
    case ErrorCode::kSyntaxError:
      return "syntax";
    case ErrorCode::kValidationError:
    case ErrorCode::kNonPositiveWeight:
    case ErrorCode::kDuplicateEdge:
    case ErrorCode::kSelfLoop:
    case ErrorCode::kIndexOutOfRange:
    case ErrorCode::kLengthMismatch:
    case ErrorCode::kMismatchedVertexCounts:
    case ErrorCode::kEmptyLayerList:
      return "validation";
    default:
      return "domain";
  }
}

int exit_status(ErrorCode code) {
  const auto category = error_category(code);
  if (category == "usage") return 2;
  if (category == "io") return 3;
  if (category == "syntax") return 4;
  if (category == "validation") return 5;
  return 6;
}

}  // namespace forman
