#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tda {

/// Failure categories raised by the library. The CLI maps them onto exit codes.
enum class ErrorCode {
  FiltrationViolation,
  MissingFace,
  MissingVertexValue,
  MissingTopCellValue,
  UnsortedComplex,
  AsymmetricMatrix,
  NegativeEntry,
  SizeMismatch,
  BadProbability,
  EmptyPointCloud,
  BadBandwidth,
  WindowTooLarge,
  DanglingEdge,
  DisconnectedGraph,
  MixedEssential,
  BadInterval,
  BadExponent,
  EmptyInput,
  UnequalSampleSizes,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::FiltrationViolation: return "FiltrationViolation";
    case ErrorCode::MissingFace: return "MissingFace";
    case ErrorCode::MissingVertexValue: return "MissingVertexValue";
    case ErrorCode::MissingTopCellValue: return "MissingTopCellValue";
    case ErrorCode::UnsortedComplex: return "UnsortedComplex";
    case ErrorCode::AsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::BadProbability: return "BadProbability";
    case ErrorCode::EmptyPointCloud: return "EmptyPointCloud";
    case ErrorCode::BadBandwidth: return "BadBandwidth";
    case ErrorCode::WindowTooLarge: return "WindowTooLarge";
    case ErrorCode::DanglingEdge: return "DanglingEdge";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::MixedEssential: return "MixedEssential";
    case ErrorCode::BadInterval: return "BadInterval";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::UnequalSampleSizes: return "UnequalSampleSizes";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace tda
