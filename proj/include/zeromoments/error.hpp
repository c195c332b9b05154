#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zm {

enum class Errc {
  EmptyInput,
  InvalidDegree,
  ZeroLeadingCoefficient,
  InvalidParameter,
  NormalizationUndefined,
  NotDefiniteParity,
  VanishingZero,
  SeedTooShort,
  UnsupportedFamily,
  DomainError,
  OrderTooSmall,
  GammaPoleAmbiguity,
  InconsistentDegenerateStep,
  PoleHit,
  QuadratureFailure,
  IllConditioned,
  NearZeroRoot,
};

constexpr std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::InvalidDegree: return "InvalidDegree";
    case Errc::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::NormalizationUndefined: return "NormalizationUndefined";
    case Errc::NotDefiniteParity: return "NotDefiniteParity";
    case Errc::VanishingZero: return "VanishingZero";
    case Errc::SeedTooShort: return "SeedTooShort";
    case Errc::UnsupportedFamily: return "UnsupportedFamily";
    case Errc::DomainError: return "DomainError";
    case Errc::OrderTooSmall: return "OrderTooSmall";
    case Errc::GammaPoleAmbiguity: return "GammaPoleAmbiguity";
    case Errc::InconsistentDegenerateStep: return "InconsistentDegenerateStep";
    case Errc::PoleHit: return "PoleHit";
    case Errc::QuadratureFailure: return "QuadratureFailure";
    case Errc::IllConditioned: return "IllConditioned";
    case Errc::NearZeroRoot: return "NearZeroRoot";
  }
  return "Unknown";
}

/// True for failures of a numerical procedure on valid input; false for
/// input that violates an operation's preconditions.
constexpr bool is_numeric_failure(Errc code) noexcept {
  switch (code) {
    case Errc::GammaPoleAmbiguity:
    case Errc::InconsistentDegenerateStep:
    case Errc::PoleHit:
    case Errc::QuadratureFailure:
    case Errc::IllConditioned:
    case Errc::NearZeroRoot:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace zm
