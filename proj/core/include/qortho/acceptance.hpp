#pragma once

// The acceptance suite: twelve end-to-end checks at the reference parameters.

#include <optional>
#include <string>
#include <vector>

#include "qortho/qcore.hpp"

namespace qortho {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  Real measured = 0;
  Real tolerance = 0;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  // Run only criteria whose name or id matches one of these; empty runs all.
  std::vector<std::string> only;
  // Replaces the stated tolerance of every criterion that has one.
  std::optional<Real> tol_override;
  unsigned threads = 0;
};

// Names in id order.
std::vector<std::string> acceptance_names();

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});

}  // namespace qortho
