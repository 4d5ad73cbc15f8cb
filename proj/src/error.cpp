#include "csg/error.hpp"

namespace csg {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::zero_ray: return "ZeroRay";
    case Errc::parallel_rays: return "ParallelRays";
    case Errc::unsupported_cone: return "UnsupportedCone";
    case Errc::negative_entry: return "NegativeEntry";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::not_in_cone: return "NotInCone";
    case Errc::rank_deficient: return "RankDeficient";
    case Errc::non_positive_primary_weight: return "NonPositivePrimaryWeight";
    case Errc::gap_not_in_cone: return "GapNotInCone";
    case Errc::zero_gap: return "ZeroGap";
    case Errc::not_closed: return "NotClosed";
    case Errc::not_special_gap: return "NotSpecialGap";
    case Errc::not_minimal_generator: return "NotMinimalGenerator";
    case Errc::full_cone: return "FullCone";
    case Errc::not_full_cone: return "NotFullCone";
    case Errc::bad_genus: return "BadGenus";
    case Errc::bad_parameters: return "BadParameters";
    case Errc::frobenius_mismatch: return "FrobeniusMismatch";
    case Errc::not_n2_deglex: return "NotN2Deglex";
    case Errc::zero_conductor: return "ZeroConductor";
    case Errc::zero_multiplicity: return "ZeroMultiplicity";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

static std::string format_error(Errc code, const std::string& witness) {
  std::string s = errc_name(code);
  if (!witness.empty()) {
    s += ": ";
    s += witness;
  }
  return s;
}

Error::Error(Errc code, std::string witness)
    : std::runtime_error(format_error(code, witness)),
      code_(code),
      witness_(std::move(witness)) {}

void fail(Errc code, std::string witness) { throw Error(code, std::move(witness)); }

}  // namespace csg
