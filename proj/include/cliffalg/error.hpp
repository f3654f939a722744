#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cliffalg {

enum class ErrorCode {
  Singular,
  FactorizationLimit,
  ShapeMismatch,
  ResourceCap,
  DegreeOverflow,
  NotGraded,
  OutsideSubalgebra,
  NoNondegenerateSolution,
  Degenerate,
  ZeroParameter,
  NotInvertible,
  InvalidAntiaut,
  NoInvertibleSkew,
  WrongDimension,
  NotCommutative,
  Parse,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::FactorizationLimit: return "FactorizationLimit";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ResourceCap: return "ResourceCap";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::OutsideSubalgebra: return "OutsideSubalgebra";
    case ErrorCode::NoNondegenerateSolution: return "NoNondegenerateSolution";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::InvalidAntiaut: return "InvalidAntiaut";
    case ErrorCode::NoInvertibleSkew: return "NoInvertibleSkew";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can report it by name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace cliffalg
