#pragma once

#include <stdexcept>
#include <string>

namespace qortho {

enum class Errc {
  invalid_base,
  param_error,
  no_convergence,
  divergent_series,
  pole_proximity,
  overflow,
  sqrt_branch,
  degenerate_step,
  degenerate_derivative,
  representation_inadmissible,
  all_representations_inadmissible,
  c_equals_d,
  scan_exhausted,
  bad_beta,
  insufficient_zeros,
};

const char* to_string(Errc code) noexcept;

// True for failures of a numerical kernel (as opposed to bad input).
bool is_numerical(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qortho
