#include "qortho/error.hpp"

namespace qortho {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_base: return "InvalidBase";
    case Errc::param_error: return "ParamError";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::divergent_series: return "DivergentSeries";
    case Errc::pole_proximity: return "PoleProximity";
    case Errc::overflow: return "Overflow";
    case Errc::sqrt_branch: return "SqrtBranch";
    case Errc::degenerate_step: return "DegenerateStep";
    case Errc::degenerate_derivative: return "DegenerateDerivative";
    case Errc::representation_inadmissible: return "RepresentationInadmissible";
    case Errc::all_representations_inadmissible: return "AllRepresentationsInadmissible";
    case Errc::c_equals_d: return "CEqualsD";
    case Errc::scan_exhausted: return "ScanExhausted";
    case Errc::bad_beta: return "BadBeta";
    case Errc::insufficient_zeros: return "InsufficientZeros";
  }
  return "Unknown";
}

bool is_numerical(Errc code) noexcept {
  switch (code) {
    case Errc::no_convergence:
    case Errc::divergent_series:
    case Errc::pole_proximity:
    case Errc::overflow:
    case Errc::degenerate_step:
    case Errc::degenerate_derivative:
    case Errc::representation_inadmissible:
    case Errc::all_representations_inadmissible:
    case Errc::scan_exhausted:
    case Errc::insufficient_zeros:
      return true;
    default:
      return false;
  }
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace qortho
