#include "qortho/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <limits>
#include <random>
#include <sstream>

#include "qortho/aw.hpp"
#include "qortho/norms.hpp"
#include "qortho/quad.hpp"
#include "qortho/special.hpp"
#include "qortho/u8.hpp"
#include "qortho/zerofind.hpp"

namespace qortho {

namespace {

Real rel(Complex x, Complex y) {
  const Real s = std::max({std::abs(x), std::abs(y), Real(1e-300L)});
  return std::abs(x - y) / s;
}

struct Outcome {
  Real measured = 0;
  bool passed = false;
  std::string detail;
};

using Check = std::function<Outcome(Real tol, unsigned threads)>;

struct Criterion {
  int id;
  const char* name;
  Real tolerance;  // 0 for pass/fail criteria without a numeric tolerance
  Check run;
};

std::string fmt(Real x) {
  std::ostringstream os;
  os.precision(6);
  os << static_cast<double>(x);
  return os.str();
}

QuadOptions quad_opts(unsigned threads) {
  QuadOptions o;
  o.tol = 1e-13L;
  o.threads = threads;
  return o;
}

Outcome aw_orthogonality(Real tol, unsigned threads) {
  const QParams p0 = reference_params();
  const QParams s(p0.base, p0.a, p0.b, p0.c, p0.alpha, p0.alpha);
  constexpr int N = 7;
  std::vector<std::function<Real(Real)>> fns;
  for (int n = 0; n < N; ++n) {
    fns.emplace_back([n, &s](Real t) { return aw_poly(n, std::cos(t), s); });
  }
  const auto g = gram_matrix(fns, [&s](Real t) { return aw_weight(t, s); }, quad_opts(threads));
  Real off = 0, diag = 0;
  for (int n = 0; n < N; ++n) {
    for (int m = 0; m < N; ++m) {
      if (n == m) {
        diag = std::max(diag, rel(g[n][n], aw_norm(n, n, s)));
      } else {
        off = std::max(off, std::abs(g[n][m]) / std::sqrt(aw_norm(n, n, s) * aw_norm(m, m, s)));
      }
    }
  }
  const Real worst = std::max(off, diag);
  return {worst, worst <= tol, "max offdiag/sqrt(norms)=" + fmt(off) + " max diag rel=" + fmt(diag)};
}

Outcome polynomial_reduction(Real tol, unsigned) {
  const QParams s = reference_params();
  const QBase& B = s.base;
  const Real q = s.q();
  Real worst = 0;
  for (int n = 0; n <= 6; ++n) {
    const Complex scale = pinf(s.b * s.c * std::pow(q, n), B) * pinf(std::pow(q, 1 - n) / (s.a * s.d), B) /
                          pinf({s.b * s.c, q / (s.a * s.d)}, B) * std::pow(s.a, Real(n)) /
                          pn({s.a * s.b, s.a * s.c, s.a * s.d}, B, n);
    for (int k = 0; k < 10; ++k) {
      const Real theta = 0.1L + k * (std::numbers::pi_v<Real> - 0.2L) / 9;
      const LatticePoint p = point_from_theta(theta, B);
      const Complex ref = scale * aw_poly(n, std::cos(theta), s);
      for (Representation r : {Representation::A_87, Representation::B_43pair,
                               Representation::C_sym, Representation::D_asym}) {
        if (!admissible(r, n, p, s)) continue;
        worst = std::max(worst, rel(u_nu(n, p, s, r), ref));
      }
    }
  }
  return {worst, worst <= tol, "n=0..6, 10 theta, every admissible representation"};
}

std::vector<QParams> equivalence_sets() {
  return {reference_params(), QParams(QBase(0.5L), 0.3L, 0.2L, 0.15L, 2.5L, 0.8L),
          QParams(QBase(0.6L), 0.25L, Complex(0.2L, 0.3L), Complex(0.2L, -0.3L), 1.9L, 0.85L)};
}

Outcome representation_equivalence(Real tol, unsigned) {
  Real worst = 0;
  int pairs = 0;
  for (const QParams& s : equivalence_sets()) {
    for (Real nu : {0.5L, 1.7L, 3.3L}) {
      for (int k = 0; k < 5; ++k) {
        const Real theta = 0.2L + k * 0.65L;
        const LatticePoint p = point_from_theta(theta, s.base);
        std::vector<Complex> vals;
        for (Representation r : {Representation::A_87, Representation::B_43pair,
                                 Representation::C_sym, Representation::D_asym}) {
          if (admissible(r, nu, p, s)) vals.push_back(u_nu(nu, p, s, r));
        }
        for (std::size_t i = 0; i < vals.size(); ++i) {
          for (std::size_t j = i + 1; j < vals.size(); ++j) {
            worst = std::max(worst, rel(vals[i], vals[j]));
            ++pairs;
          }
        }
      }
    }
  }
  return {worst, worst <= tol, std::to_string(pairs) + " pairwise comparisons"};
}

Outcome six_phi_five(Real tol, unsigned) {
  const QParams s = reference_params();
  const QBase& B = s.base;
  const Real q = s.q();
  const Complex a = s.a, b = s.b, c = s.c, al = s.alpha;
  const Complex A = a * b * c / (q * al);
  const std::vector<Complex> extras = {a / al, b / al, c / al};
  const Complex direct = w_series(A, extras, B, al * al).value;
  const Complex closed = pinf({al * a, al * b, al * c, a * b * c / al}, B) /
                         pinf({a * b, a * c, b * c, al * al}, B);
  const Real r = rel(direct, closed);
  return {r, r <= tol, "sum=" + fmt(direct.real()) + " product=" + fmt(closed.real())};
}

Outcome main_identity_check(Real tol, unsigned threads) {
  const QParams s = reference_params();
  Real worst = 0;
  const std::pair<Real, Real> pairs[] = {{0, 1.3L}, {0.5L, 2.2L}, {1, 2}, {0.3L, 3.7L}, {2.5L, 4.1L}};
  for (auto [mu, nu] : pairs) {
    worst = std::max(worst, main_identity(mu, nu, s, quad_opts(threads)).residual);
  }
  return {worst, worst <= tol, "5 (mu, nu) pairs, quadrature vs boundary Wronskian"};
}

Outcome orthogonality_at_zeros(Real tol, unsigned threads) {
  const QParams s = reference_params();
  ScanOptions so;
  so.threads = threads;
  const auto zeros = find_zeros(s, 4, so);
  std::vector<Real> nus;
  for (const auto& z : zeros) nus.push_back(z.nu);
  const auto g = gram_matrix(nus, s, quad_opts(threads));
  Real off = 0, closed = 0, rhs = 0;
  for (std::size_t i = 0; i < nus.size(); ++i) {
    for (std::size_t j = 0; j < nus.size(); ++j) {
      if (i != j) off = std::max(off, std::abs(g[i][j]) / std::sqrt(g[i][i] * g[j][j]));
    }
    closed = std::max(closed, rel(g[i][i], norm_sq_closed(nus[i], s)));
    rhs = std::max(rhs, rel(g[i][i], norm_sq_rhs(nus[i], s)));
  }
  // The derivative route carries its own, looser tolerance (10x).
  const bool ok = off <= tol && closed <= tol && rhs <= 10 * tol;
  return {std::max({off, closed, rhs / 10}), ok,
          "offdiag=" + fmt(off) + " closed-form rel=" + fmt(closed) + " limit-form rel=" + fmt(rhs) +
              " (limit-form tolerance 10x)"};
}

Outcome wronskian_check(Real tol, unsigned) {
  const QParams s(QBase(0.5L), 0.3L, 0.2L, 0.15L, 2.5L, 0.8L);
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> dnu(0.1, 6.0), dth(0.1, 3.04);
  Real worst = 0;
  for (int k = 0; k < 20; ++k) {
    const Real nu = dnu(rng), th = dth(rng);
    worst = std::max(worst, wronskian_identity_residual(nu, point_from_theta(th, s.base), s));
  }
  return {worst, worst <= tol, "20 seeded (nu, theta) draws"};
}

Outcome zero_asymptotics(Real tol, unsigned threads) {
  const QParams s = reference_params();
  ScanOptions so;
  so.threads = threads;
  const auto zeros = find_zeros(s, 12, so);
  bool monotone = true;
  std::string devs;
  for (int n = 6; n <= 12; ++n) {
    const Real d = std::abs(zeros[n - 1].nu - zeros[n - 1].predicted);
    devs += (n > 6 ? "," : "") + fmt(d);
    if (n > 6 && !(d < std::abs(zeros[n - 2].nu - zeros[n - 2].predicted))) monotone = false;
  }
  const Real last = std::abs(zeros[11].nu - zeros[11].predicted);
  return {last, monotone && last <= tol,
          std::string("deviations n=6..12: ") + devs + (monotone ? " (decreasing)" : " (NOT decreasing)")};
}

Outcome interlacing_check(Real, unsigned threads) {
  const QParams s = reference_params();
  ScanOptions so;
  so.threads = threads;
  const auto rep = interlacing_report(s, 6, so);
  std::string d = "nu1=" + fmt(rep.nu.front()) +
                  (rep.mu.empty() ? std::string(" no g-zero located")
                                  : " first g-zero=" + fmt(rep.mu.front())) +
                  (rep.mu1_below_nu1 ? " (g-zero precedes nu1)" : " (no g-zero below nu1; reported only)");
  return {rep.interlaced ? Real(0) : Real(1), rep.interlaced, d};
}

Outcome jensen_check(Real, unsigned threads) {
  const QParams s = reference_params();
  ScanOptions so;
  so.threads = threads;
  const auto zeros = find_zeros(s, 14, so);
  int bad = 0;
  std::string d;
  for (int n = 6; n <= 10; ++n) {
    const auto r = jensen_count_check(s, std::sqrt(s.q()), n, zeros);
    if (!r.within) ++bad;
    d += "n=" + std::to_string(n) + ":" + std::to_string(r.count) + " in (" + fmt(r.lower) + "," +
         fmt(r.upper) + ") ";
  }
  return {Real(bad), bad == 0, d};
}

Real ratio_spread(const std::vector<Complex>& r) {
  Real lo = r[0].real(), hi = r[0].real(), mean = 0;
  for (const Complex& x : r) {
    lo = std::min(lo, x.real());
    hi = std::max(hi, x.real());
    mean += x.real();
  }
  mean /= static_cast<Real>(r.size());
  return (hi - lo) / std::abs(mean);
}

Outcome special_ladder(Real tol, unsigned) {
  const QBase B(0.5L);
  const Complex a = 0.3L, b = 0.2L, c = 2.2L;
  constexpr Real kSmall = 1e-6L;
  const Real nu = 1.7L;
  Real cont = 0, zero = 0, spread = 0;
  for (Real th : {0.4L, 1.3L, 2.5L}) {
    const LatticePoint p = point_from_theta(th, B);
    const QParams parent(B, a, b, kSmall, c, 0.8L);
    cont = std::max(cont, rel(u_nu(nu, p, parent), dual_qhahn_u(nu, p, a, b, c, B)));
    cont = std::max(cont, rel(dual_qhahn_u(nu, p, a, kSmall, c, B), al_salam_chihara_u(nu, p, a, c, B)));
    cont = std::max(cont, rel(al_salam_chihara_u(nu, p, kSmall, c, B), big_qhermite_u(nu, p, c, B)));
    zero = std::max({zero, std::abs(dual_qhahn_u(0, p, a, b, c, B) - Real(1)),
                     std::abs(al_salam_chihara_u(0, p, a, c, B) - Real(1)),
                     std::abs(big_qhermite_u(0, p, c, B) - Real(1)),
                     std::abs(qhermite_H(0, p, B) - Real(1))});
  }
  std::vector<Complex> rd, ra, rb, rh;
  for (Real th : {0.3L, 1.2L, 2.4L}) {
    const LatticePoint p = point_from_theta(th, B);
    rd.push_back(dual_qhahn_u(2, p, a, b, c, B) / dual_qhahn_poly(2, p, a, b, c, B));
    ra.push_back(al_salam_chihara_u(2, p, a, c, B) / al_salam_chihara_poly(2, p, a, c, B));
    rb.push_back(big_qhermite_u(3, p, c, B) / big_qhermite_poly(3, p, c, B));
    rh.push_back(qhermite_H(4, p, B) / qhermite_poly(4, p, B));
  }
  spread = std::max({ratio_spread(rd), ratio_spread(ra), ratio_spread(rb), ratio_spread(rh)});
  const bool ok = cont <= tol && zero <= 1e-9L && spread <= 1e-8L;
  return {cont, ok,
          "continuity rel=" + fmt(cont) + " nu=0 dev=" + fmt(zero) + " (<=1e-9) ratio spread=" +
              fmt(spread) + " (<=1e-8)"};
}

Outcome qtrig_diagonal_check(Real tol, unsigned threads) {
  const QBase B(0.5L);
  const auto roots = qtrig_roots(2, B);
  Real worst = 0;
  std::string d;
  for (Real om : roots) {
    const Real quad =
        integrate(
            [&](Real t) {
              const Real cv = qtrig_C_at(point_from_theta(t, B), om, B).real();
              return cv * cv * qtrig_weight(t, B);
            },
            quad_opts(threads))
            .value;
    const Real closed = qtrig_diagonal(om, B);
    worst = std::max(worst, rel(quad, closed));
    d += "omega=" + fmt(om) + " ";
  }
  return {worst, worst <= tol, d + "closed form vs quadrature"};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "aw_orthogonality", 1e-8L, aw_orthogonality},
      {2, "polynomial_reduction", 1e-10L, polynomial_reduction},
      {3, "representation_equivalence", 1e-8L, representation_equivalence},
      {4, "six_phi_five", 1e-12L, six_phi_five},
      {5, "main_identity", 1e-6L, main_identity_check},
      {6, "orthogonality_at_zeros", 1e-6L, orthogonality_at_zeros},
      {7, "wronskian", 1e-8L, wronskian_check},
      {8, "zero_asymptotics", 0.02L, zero_asymptotics},
      {9, "interlacing", 0, interlacing_check},
      {10, "jensen", 0, jensen_check},
      {11, "special_ladder", 1e-3L, special_ladder},
      {12, "qtrig_diagonal", 1e-6L, qtrig_diagonal_check},
  };
  return list;
}

bool selected(const Criterion& c, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  return std::any_of(only.begin(), only.end(), [&](const std::string& s) {
    return s == c.name || s == std::to_string(c.id);
  });
}

}  // namespace

std::vector<std::string> acceptance_names() {
  std::vector<std::string> out;
  for (const auto& c : criteria()) out.emplace_back(c.name);
  return out;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    if (!selected(c, opt.only)) continue;
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    r.tolerance = (opt.tol_override && c.tolerance > 0) ? *opt.tol_override : c.tolerance;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const Outcome o = c.run(r.tolerance, opt.threads);
      r.passed = o.passed;
      r.measured = o.measured;
      r.detail = o.detail;
    } catch (const Error& e) {
      r.passed = false;
      r.measured = std::numeric_limits<Real>::quiet_NaN();
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace qortho
