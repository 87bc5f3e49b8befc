#pragma once

#include <stdexcept>
#include <string>

namespace plg {

enum class ErrorCode {
  EmptyWord,
  PureBPower,
  NotMixedSign,
  MissingGenerator,
  SyllableOverflow,
  NotIntertwined,
  OverlappingNeighborhoods,
  SearchExhausted,
  InvalidCertificate,
  InvalidArgument,
  MalformedInput,
};

const char* error_code_name(ErrorCode code);

/// Domain error raised by the library; `code()` identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace plg
