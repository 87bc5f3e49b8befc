#include "plg/error.hpp"

namespace plg {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::PureBPower: return "PureBPower";
    case ErrorCode::NotMixedSign: return "NotMixedSign";
    case ErrorCode::MissingGenerator: return "MissingGenerator";
    case ErrorCode::SyllableOverflow: return "SyllableOverflow";
    case ErrorCode::NotIntertwined: return "NotIntertwined";
    case ErrorCode::OverlappingNeighborhoods: return "OverlappingNeighborhoods";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::InvalidCertificate: return "InvalidCertificate";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace plg
