#pragma once

#include <stdexcept>
#include <string>

namespace bng {

enum class ErrorCode {
  InvalidArgument,
  SlopeOutOfRange,
  InvalidQuotientRank,
  ThresholdViolated,
  OutOfStrip,
  RankOne,
  EmptyLocus,
  InvalidK,
  InvalidTuple,
  Parse,
  Io,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bng
