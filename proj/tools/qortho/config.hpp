#pragma once

// Run configuration for the qortho tool: one JSON document, overridden by
// command-line flags. Every default lives in kDefaults below.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "qortho/lattice.hpp"
#include "qortho/u8.hpp"

namespace qortho::cli {

// Defaults table. README.md reproduces it; keep the two in sync.
//
//   field            default                         used by
//   family           "u8"                            eval
//   params           q=0.5 a=0.3 b=0.2 c=0.1         all
//                    d=2.2 alpha=0.8
//   nu_list          [0, 0.5, 1.7]                   eval, wronskian, norm
//   n_list           [0, 1, 2, 3]                    eval (askey_wilson)
//   theta_grid       8 points, (k + 1/2) pi / 8      eval, wronskian
//   r_grid           [0.25, 0.5, 1, 2]               eval (qbessel)
//   omega_list       [0.5, 1, 2]                     eval (qtrig)
//   output           "u"                             eval (u8)
//   representation   "auto"                          eval (u8)
//   tol              1e-18 (series), 1e-12 (scan,    all
//                    quadrature)
//   n_zeros          6                               zeros, norm (no nu_list)
//   beta             sqrt(q)                         zeros
//   scan_step        0.05                            zeros, norm
//   wronskian c, d   0.15, 2.5                       wronskian
//   format           csv (json for verify)           all
//   threads          0 = hardware concurrency        all
struct Defaults {
  Real q = 0.5L, a = 0.3L, b = 0.2L, c = 0.1L, d = 2.2L, alpha = 0.8L;
  std::vector<Real> nu_list{0.0L, 0.5L, 1.7L};
  std::vector<int> n_list{0, 1, 2, 3};
  int theta_points = 8;
  std::vector<Real> r_grid{0.25L, 0.5L, 1.0L, 2.0L};
  std::vector<Real> omega_list{0.5L, 1.0L, 2.0L};
  Real series_tol = kDefaultTol;
  Real scan_tol = 1e-12L;
  Real quad_tol = 1e-12L;
  int n_zeros = 6;
  Real scan_step = 0.05L;
  Real wronskian_c = 0.15L, wronskian_d = 2.5L;
};
inline const Defaults kDefaults{};

// Configuration or usage problem; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { csv, json };

struct Config {
  std::string family = "u8";
  // Complex parameters; the real part only for q.
  Real q = kDefaults.q;
  Complex a{kDefaults.a}, b{kDefaults.b}, c{kDefaults.c}, d{kDefaults.d}, alpha{kDefaults.alpha};
  // Which of a..alpha the document set explicitly (wronskian swaps in its own c, d).
  bool c_given = false, d_given = false;
  std::optional<std::vector<Real>> nu_list;
  std::vector<int> n_list = kDefaults.n_list;
  std::vector<Real> theta_grid;
  std::vector<Complex> r_grid;
  std::vector<Real> omega_list = kDefaults.omega_list;
  std::string output = "u";
  Representation representation = Representation::Auto;
  std::optional<Real> tol;
  // Unset means the per-command default.
  std::optional<int> n_zeros;
  std::optional<Real> beta;
  Real scan_step = kDefaults.scan_step;
  std::optional<Format> format;
  unsigned threads = 0;
  std::vector<std::string> only;

  QParams params() const;
};

// Parses a JSON document; errors name the line and column for syntax
// problems and the field path for type or range problems.
Config parse_config(const std::string& text);
Config load_config(const std::string& path);

// "auto", "A".."D" or the long names printed by to_string(Representation).
Representation parse_representation(const std::string& s);

}  // namespace qortho::cli
