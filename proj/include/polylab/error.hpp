#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polylab {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kSelfLoop,
  kDuplicateEdge,
  kIndexOutOfRange,
  kNonRegular,
  kNotABRegular,
  kInvalidPair,
  kGirthTooSmall,
  kBipartiteBase,
  kWrongS,
  kZeroNotInS,
  kCenterUndefined,
  kDisconnected,
  kDomainError,
  kDegenerate,
  kOverflow,
  kSizeLimit,
  kTooLarge,
  kExhaustedTries,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace polylab
