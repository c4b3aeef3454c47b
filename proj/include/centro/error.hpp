#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace centro {

enum class Errc {
  InvalidInput,
  ParseError,
  NotConjugateClosed,
  ObstructedList,
  DimensionMismatch,
  NotCentrosymmetric,
  NotAnEigenvector,
  NotEigenvectors,
  RankDeficientX,
  PerronVectorNotSymmetric,
  ZeroPerronComponent,
  ConvergenceFailure,
  CompanionNotNonnegative,
  DiagonalSumMismatch,
  NegativeEntryInList,
  PerronNotStrict,
  NotRealizable4x4,
  NotRealizableRealCentro,
  NotStrictlyComplex,
  ConditionViolation,
  MiddleBlockParityMismatch,
  NoApplicableConstruction,
  CardinalityMismatch,
  UnknownFixture,
};

constexpr std::string_view errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::ParseError: return "ParseError";
    case Errc::NotConjugateClosed: return "NotConjugateClosed";
    case Errc::ObstructedList: return "ObstructedList";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotCentrosymmetric: return "NotCentrosymmetric";
    case Errc::NotAnEigenvector: return "NotAnEigenvector";
    case Errc::NotEigenvectors: return "NotEigenvectors";
    case Errc::RankDeficientX: return "RankDeficientX";
    case Errc::PerronVectorNotSymmetric: return "PerronVectorNotSymmetric";
    case Errc::ZeroPerronComponent: return "ZeroPerronComponent";
    case Errc::ConvergenceFailure: return "ConvergenceFailure";
    case Errc::CompanionNotNonnegative: return "CompanionNotNonnegative";
    case Errc::DiagonalSumMismatch: return "DiagonalSumMismatch";
    case Errc::NegativeEntryInList: return "NegativeEntryInList";
    case Errc::PerronNotStrict: return "PerronNotStrict";
    case Errc::NotRealizable4x4: return "NotRealizable4x4";
    case Errc::NotRealizableRealCentro: return "NotRealizableRealCentro";
    case Errc::NotStrictlyComplex: return "NotStrictlyComplex";
    case Errc::ConditionViolation: return "ConditionViolation";
    case Errc::MiddleBlockParityMismatch: return "MiddleBlockParityMismatch";
    case Errc::NoApplicableConstruction: return "NoApplicableConstruction";
    case Errc::CardinalityMismatch: return "CardinalityMismatch";
    case Errc::UnknownFixture: return "UnknownFixture";
  }
  return "Unknown";
}

/// Library-wide exception. `detail` carries a machine-readable qualifier,
/// e.g. the label of the violated condition ("iii") for ConditionViolation.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::string detail = {})
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        detail_(std::move(detail)) {}

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message, std::string detail = {}) {
  throw Error(code, message, std::move(detail));
}

}  // namespace centro
