#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gradix {

enum class Errc {
  // input / plumbing
  ParseError,
  ValidationError,
  DimensionMismatch,
  NotPrime,
  DivisionByZero,
  // groups
  NonAssociativeTable,
  MissingIdentity,
  MissingInverse,
  NotNormal,
  // algebra
  NotUnital,
  BadInvolution,
  ExactModeUnavailable,
  BudgetExceeded,
  // graded
  IncompatibleTensor,
  UnitNotInIdentityComponent,
  NotHomogeneous,
  // crossed
  NotAutomorphism,
  AlphaNotNuclearUnit,
  N1Violation,
  N2Violation,
  N3Violation,
  NoNuclearUnit,
  // laurent
  NonCommutingAutomorphisms,
  UnboundedSearch,
  // cayley
  MuZero,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotPrime: return "NotPrime";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NonAssociativeTable: return "NonAssociativeTable";
    case Errc::MissingIdentity: return "MissingIdentity";
    case Errc::MissingInverse: return "MissingInverse";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotUnital: return "NotUnital";
    case Errc::BadInvolution: return "BadInvolution";
    case Errc::ExactModeUnavailable: return "ExactModeUnavailable";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::IncompatibleTensor: return "IncompatibleTensor";
    case Errc::UnitNotInIdentityComponent: return "UnitNotInIdentityComponent";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::AlphaNotNuclearUnit: return "AlphaNotNuclearUnit";
    case Errc::N1Violation: return "N1Violation";
    case Errc::N2Violation: return "N2Violation";
    case Errc::N3Violation: return "N3Violation";
    case Errc::NoNuclearUnit: return "NoNuclearUnit";
    case Errc::NonCommutingAutomorphisms: return "NonCommutingAutomorphisms";
    case Errc::UnboundedSearch: return "UnboundedSearch";
    case Errc::MuZero: return "MuZero";
  }
  return "Unknown";
}

/// Every failure raised by the library. The message always starts with the
/// error name, followed by the offending tuple or value when there is one.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) +
                           (detail.empty() ? "" : ": " + detail)),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gradix
