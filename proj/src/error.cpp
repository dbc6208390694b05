#include "polylab/error.hpp"

namespace polylab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNonRegular: return "NonRegular";
    case ErrorCode::kNotABRegular: return "NotABRegular";
    case ErrorCode::kInvalidPair: return "InvalidPair";
    case ErrorCode::kGirthTooSmall: return "GirthTooSmall";
    case ErrorCode::kBipartiteBase: return "BipartiteBase";
    case ErrorCode::kWrongS: return "WrongS";
    case ErrorCode::kZeroNotInS: return "ZeroNotInS";
    case ErrorCode::kCenterUndefined: return "CenterUndefined";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kDegenerate: return "Degenerate";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kSizeLimit: return "SizeLimit";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kExhaustedTries: return "ExhaustedTries";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace polylab
