#pragma once

#include <ostream>

#include "config.hpp"

namespace qortho::cli {

// Each command writes its table or report to out and returns the exit code
// (0, or 1 for a failed verification). Library errors propagate as
// qortho::Error, configuration problems as ConfigError.
int cmd_eval(const Config& cfg, Format fmt, std::ostream& out);
int cmd_zeros(const Config& cfg, Format fmt, std::ostream& out);
int cmd_verify(const Config& cfg, Format fmt, std::ostream& out, std::ostream& err);
int cmd_wronskian(const Config& cfg, Format fmt, std::ostream& out);
int cmd_norm(const Config& cfg, Format fmt, std::ostream& out);

}  // namespace qortho::cli
