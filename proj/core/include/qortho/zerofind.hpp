#pragma once

// Real nu-zeros of the boundary function and of its lattice derivative,
// and the checks built on them.

#include <functional>
#include <utility>
#include <vector>

#include "qortho/lattice.hpp"

namespace qortho {

struct ScanOptions {
  Real step = 0.05L;
  Real tol = 1e-12L;
  // 0 uses quad's process default.
  unsigned threads = 0;
};

struct Root {
  Real x = 0;
  Real lo = 0, hi = 0;  // final bisection bracket
  Real fx = 0;
  Real scale = 0;  // max |f| at the ends of the scan cell
};

// First max_roots sign changes of f on [start, cap] at the given step, each
// bisected to width tol and finished with one secant step.
std::vector<Root> scan_roots(const std::function<Real(Real)>& f, Real start, Real cap,
                             int max_roots, const ScanOptions& opt = {});

struct ZeroRecord {
  int index = 0;
  Real nu = 0;
  std::pair<Real, Real> bracket;
  Real f_residual = 0;
  Real predicted = 0;
  int g_sign = 0;
};

// omega_0 + k for k = 0..n_max, q^{omega_0} = beta.
std::vector<Real> test_points(Real beta, int n_max, const QBase& base);

// n_zeros + 5 + |log(alpha d)/log q|.
Real scan_cap(int n_zeros, const QParams& params);

std::vector<ZeroRecord> find_zeros(const QParams& params, int n_zeros, const ScanOptions& opt = {});

// Zeros of the lattice derivative g.
std::vector<Real> find_g_zeros(const QParams& params, int n_zeros, const ScanOptions& opt = {});

struct InterlacingReport {
  std::vector<Real> nu;  // zeros of f
  std::vector<Real> mu;  // zeros of g in (0, nu_n]
  // Exactly one zero of g between consecutive zeros of f.
  bool interlaced = true;
  // Reported only; the ordering of the first pair is not asserted.
  bool mu1_below_nu1 = false;
  bool g_signs_alternate = true;
};

InterlacingReport interlacing_report(const QParams& params, int n_zeros,
                                     const ScanOptions& opt = {});

struct JensenReport {
  int n = 0;
  Real radius = 0;
  int count = 0;
  Real lower = 0, upper = 0;
  bool within = false;
};

// Counts located zeros with |q^{-nu} + abcd q^{nu-1}| < R_n and compares with
// n - 1 - log(g)/log(1/q) < count < n - log(g)/log(1/q), g = |alpha beta d|.
JensenReport jensen_count_check(const QParams& params, Real beta, int n,
                                const std::vector<ZeroRecord>& zeros);

}  // namespace qortho
