// qortho: evaluation tables, zero reports and verification runs for the
// 8phi7 orthogonal functions.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or config error,
// 3 numerical error (no convergence, pole proximity, ...).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "qortho/quad.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

}  // namespace

int main(int argc, char** argv) {
  using namespace qortho::cli;

  CLI::App app{"Orthogonal very-well-poised 8phi7 functions: tables, zeros and checks", "qortho"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string config_path, out_path, format;
  double tol = 0;
  int threads = -1;
  std::vector<std::string> only;
  app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
  auto* tol_opt = app.add_option("--tol", tol, "Tolerance (series, scan, quadrature, or criterion)")
                      ->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "Write output here instead of stdout");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", threads, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--only", only, "verify: run only these criteria (name or id)")->delimiter(',');

  auto* eval = app.add_subcommand("eval", "Table of function values on a grid");
  auto* zeros = app.add_subcommand("zeros", "Zeros of the boundary function and interlacing");
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  auto* wronsk = app.add_subcommand("wronskian", "Wronskian closed form against the lattice value");
  auto* norm = app.add_subcommand("norm", "Squared norms: closed form, limit form, quadrature");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Config cfg = config_path.empty() ? parse_config("{}") : load_config(config_path);
    if (*tol_opt) cfg.tol = tol;
    if (!format.empty()) cfg.format = format == "json" ? Format::json : Format::csv;
    if (threads >= 0) cfg.threads = static_cast<unsigned>(threads);
    if (!only.empty()) cfg.only = only;
    if (!cfg.only.empty() && !verify->parsed())
      throw ConfigError("--only applies to the verify subcommand");
    qortho::set_default_threads(cfg.threads);

    std::ostringstream buf;
    int rc = kExitOk;
    if (eval->parsed()) {
      rc = cmd_eval(cfg, cfg.format.value_or(Format::csv), buf);
    } else if (zeros->parsed()) {
      rc = cmd_zeros(cfg, cfg.format.value_or(Format::csv), buf);
    } else if (verify->parsed()) {
      rc = cmd_verify(cfg, cfg.format.value_or(Format::json), buf, std::cerr);
    } else if (wronsk->parsed()) {
      rc = cmd_wronskian(cfg, cfg.format.value_or(Format::csv), buf);
    } else if (norm->parsed()) {
      rc = cmd_norm(cfg, cfg.format.value_or(Format::csv), buf);
    }

    if (out_path.empty()) {
      std::cout << buf.str();
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw ConfigError("cannot write '" + out_path + "'");
      f << buf.str();
    }
    return rc;
  } catch (const ConfigError& e) {
    std::cerr << "qortho: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qortho::Error& e) {
    std::cerr << "qortho: " << e.what() << '\n';
    return qortho::is_numerical(e.code()) ? kExitNumerical : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qortho: " << e.what() << '\n';
    return kExitNumerical;
  }
}
