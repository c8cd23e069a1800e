#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eigenkit {

enum class Errc {
  InvalidArgument,
  InvalidContext,
  ContextMismatch,
  DivisionByZeroToPrecision,
  ZeroResidue,
  NotOneUnit,
  ExponentNotIntegral,
  OutsideConvergenceDomain,
  NonUnitConstantTerm,
  AllCoefficientsZero,
  NonUnitArgument,
  UnrepresentableExponent,
  NotWAnalytic,
  NonUnitTorusPoint,
  IndexOutOfRange,
  NonIntegralPairing,
  TruncationTooSmall,
  NotAnEigenvector,
  TailBoundMissing,
  PrefixTooShort,
  SlopeOnBoundary,
  InsufficientPrecision,
  PrecisionLoss,
  SpecializationOutsideDomain,
  RamifiedPoint,
  DivergentIteration,
  NonCommutingInput,
  UnsupportedChart,
  NonContracting,
  NonInvertibleTransition,
  PrecisionExhausted,
};

std::string_view to_string(Errc code);

// True for the error kinds that signal exhausted p-adic precision rather than bad input.
bool is_precision_error(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace eigenkit
