#include "eigenkit/error.hpp"

namespace eigenkit {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidContext: return "InvalidContext";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::DivisionByZeroToPrecision: return "DivisionByZeroToPrecision";
    case Errc::ZeroResidue: return "ZeroResidue";
    case Errc::NotOneUnit: return "NotOneUnit";
    case Errc::ExponentNotIntegral: return "ExponentNotIntegral";
    case Errc::OutsideConvergenceDomain: return "OutsideConvergenceDomain";
    case Errc::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case Errc::AllCoefficientsZero: return "AllCoefficientsZero";
    case Errc::NonUnitArgument: return "NonUnitArgument";
    case Errc::UnrepresentableExponent: return "UnrepresentableExponent";
    case Errc::NotWAnalytic: return "NotWAnalytic";
    case Errc::NonUnitTorusPoint: return "NonUnitTorusPoint";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NonIntegralPairing: return "NonIntegralPairing";
    case Errc::TruncationTooSmall: return "TruncationTooSmall";
    case Errc::NotAnEigenvector: return "NotAnEigenvector";
    case Errc::TailBoundMissing: return "TailBoundMissing";
    case Errc::PrefixTooShort: return "PrefixTooShort";
    case Errc::SlopeOnBoundary: return "SlopeOnBoundary";
    case Errc::InsufficientPrecision: return "InsufficientPrecision";
    case Errc::PrecisionLoss: return "PrecisionLoss";
    case Errc::SpecializationOutsideDomain: return "SpecializationOutsideDomain";
    case Errc::RamifiedPoint: return "RamifiedPoint";
    case Errc::DivergentIteration: return "DivergentIteration";
    case Errc::NonCommutingInput: return "NonCommutingInput";
    case Errc::UnsupportedChart: return "UnsupportedChart";
    case Errc::NonContracting: return "NonContracting";
    case Errc::NonInvertibleTransition: return "NonInvertibleTransition";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
  }
  return "Unknown";
}

bool is_precision_error(Errc code) {
  switch (code) {
    case Errc::DivisionByZeroToPrecision:
    case Errc::InsufficientPrecision:
    case Errc::PrecisionLoss:
    case Errc::PrecisionExhausted:
    case Errc::TruncationTooSmall:
    case Errc::PrefixTooShort:
    case Errc::DivergentIteration:
      return true;
    default:
      return false;
  }
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace eigenkit
