#include "projconst/error.hpp"

namespace projconst {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::OddLength: return "OddLength";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::STooLarge: return "STooLarge";
    case Errc::BadArgs: return "BadArgs";
    case Errc::DegenerateDenominator: return "DegenerateDenominator";
    case Errc::DimMismatch: return "DimMismatch";
    case Errc::NotUniformSpectrum: return "NotUniformSpectrum";
    case Errc::PropertyFailure: return "PropertyFailure";
    case Errc::NotUnbiasedPair: return "NotUnbiasedPair";
    case Errc::NotFeasible: return "NotFeasible";
    case Errc::AmbiguousSign: return "AmbiguousSign";
    case Errc::Parse: return "Parse";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace projconst
