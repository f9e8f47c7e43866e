#include "strb/error.hpp"

namespace strb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo: return "io-error";
    case ErrorKind::kDecode: return "decode-error";
    case ErrorKind::kInvalidDimension: return "invalid-dimension";
    case ErrorKind::kInvalidKernel: return "invalid-kernel";
    case ErrorKind::kDimensionMismatch: return "dimension-mismatch";
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kParse: return "parse-error";
    case ErrorKind::kConfidenceOutOfRange: return "confidence-out-of-range";
    case ErrorKind::kFormatIncompatible: return "format-incompatible";
    case ErrorKind::kEmptyPool: return "empty-pool";
    case ErrorKind::kIncompleteGrid: return "incomplete-grid";
    case ErrorKind::kDivisionByZeroClean: return "division-by-zero-clean";
  }
  return "unknown-error";
}

}  // namespace strb
