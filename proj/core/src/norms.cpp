#include "qortho/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/constants/constants.hpp>

#include "qortho/extended.hpp"
#include "qortho/u8.hpp"

namespace qortho {

namespace {

constexpr int kOuterCap = 500;

Complex phi54(std::vector<Complex> num, std::vector<Complex> den, const QBase& B, Real tol) {
  SeriesSpec sp;
  sp.base = B;
  sp.numerator_params = std::move(num);
  sp.denominator_params = std::move(den);
  sp.argument = B.q();
  return phi(sp, tol).value;
}

// One of the two a<->b mirror terms of i_n_gamma.
Complex i_n_term(int n, Complex g, Complex nu, Complex a, Complex b, const QParams& s, Real tol) {
  const QBase& B = s.base;
  const Real q = s.q();
  const Complex c = s.c, d = s.d, al = s.alpha;
  const Complex qn = B.pow(nu), qmn = B.pow(-nu);
  const Real two_pi = 2 * std::numbers::pi_v<Real>;
  const Complex pre = two_pi * pinf({q * a / d, q * qmn / (a * d), b * c * qn, a * g * q}, B) /
                      pinf({Complex(q), Complex(q), a * b, b * c, b / a, al * a, q * a / al, al * g,
                            q * g / al, a * g},
                           B);
  const Complex fin = pn({al * g, q * g / al, a * g}, B, n) / pn({a * g * q}, B, n);
  const Complex qpn = B.pow(Real(n));
  const Complex ser = phi54({a * g * qpn, a * c * qn, q * qmn / (b * d), al * a, q * a / al},
                            {a * g * qpn * q, a * c, q * a / b, q * a / d}, B, tol);
  return pre * fin * ser;
}

// The four-term norm cancels heavily: at the sixth zero of the reference set
// the pieces reach 1e20 against a result near 1e6. It is therefore summed in
// 50-digit arithmetic.
using extended::Complex50;
using extended::Real50;

const Real50 kWideTol("1e-34");

Complex50 widen(Complex z) { return Complex50(Real50(z.real()), Real50(z.imag())); }

struct Wide {
  Real50 q;
  Real50 log_q;

  Complex50 pow(const Complex50& nu) const { return exp(nu * log_q); }
  Complex50 pinf(std::initializer_list<Complex50> ps) const {
    Complex50 r(1);
    for (const auto& p : ps) r *= extended::qpoch_inf(p, q, kWideTol);
    return r;
  }
  Complex50 pn(std::initializer_list<Complex50> ps, int n) const {
    Complex50 r(1);
    for (const auto& p : ps) r *= extended::qpoch(p, q, n);
    return r;
  }
  Complex50 phi54(std::vector<Complex50> num, std::vector<Complex50> den) const {
    return extended::phi(num, den, Complex50(q), q, kWideTol);
  }
};

// Sum over n >= 0 of term(n); three consecutive negligible terms stop it.
Complex50 outer_sum(const std::function<Complex50(int)>& term) {
  Complex50 s(0);
  int small = 0;
  for (int n = 0; n < kOuterCap; ++n) {
    const Complex50 t = term(n);
    s += t;
    if (abs(t) < kWideTol * (1 + abs(s))) {
      if (++small >= 3) return s;
    } else {
      small = 0;
    }
  }
  throw Error(Errc::no_convergence, "norm_sq_closed: outer sum did not converge");
}

// First and third terms of the closed-form norm; the other two are these with
// a and b exchanged.
Complex50 norm_pair(const Complex50& nu, const Complex50& a, const Complex50& b, const QParams& s) {
  const Wide W{Real50(s.q()), log(Real50(s.q()))};
  const Real50 q = W.q;
  const Complex50 c = widen(s.c), d = widen(s.d), al = widen(s.alpha);
  const Complex50 one(1), Q(q);
  const Complex50 qn = W.pow(nu), qmn = W.pow(-nu);
  const Complex50 abcd = a * b * c * d;
  const Real50 two_pi = 2 * boost::math::constants::pi<Real50>();
  const Complex50 qab = W.pinf({Q, a * b});

  const Complex50 pre1 =
      two_pi / ((one - a * c) * qab * qab) *
      W.pinf({q * a / d, a * b * qn, b * c * qn, q * qmn / (a * d), q * qmn / (c * d)}) /
      W.pinf({b * c, b / a, q / (c * d), al * a, q * a / al, al * c, q * c / al});
  const Complex50 s1 = outer_sum([&](int n) {
    const Complex50 qpn(pow(q, n));
    return qpn * W.pn({qmn, abcd * qn / q, al * c, q * c / al}, n) /
           W.pn({Q, a * c * q, b * c, c * d}, n) *
           W.phi54({a * c * qpn, a * c * qn, q * qmn / (b * d), al * a, q * a / al},
                   {a * c * qpn * q, a * c, q * a / b, q * a / d});
  });

  const Complex50 qad = W.pinf({q * a / d});
  const Complex50 qabbc = W.pinf({Q, a * b, b * c});
  const Complex50 pre3 =
      two_pi * qad * qad / ((one - q * a / d) * qabbc * qabbc) *
      W.pinf({qmn, abcd * qn / q, q * qmn / (a * d), b * c * qn, q * b / d}) /
      W.pinf({a * c, b / a, c * d / q, al * a, q * a / al, q * al / d, q * q / (al * d)});
  Complex50 s3(0);
  if (abs(pre3) != 0) {
    s3 = outer_sum([&](int n) {
      const Complex50 qpn(pow(q, n));
      return qpn * W.pn({a * b * qn, q * qmn / (c * d), q * al / d, q * q / (al * d)}, n) /
             W.pn({Q, q * b / d, q * q * a / d, q * q / (c * d)}, n) *
             W.phi54({a * qpn * q / d, a * c * qn, q * qmn / (b * d), al * a, q * a / al},
                     {a * qpn * q * q / d, a * c, q * a / b, q * a / d});
    });
  }
  return pre1 * s1 + pre3 * s3;
}

Real derivative(const std::function<Real(Real)>& f, Real x, Real h) {
  auto central = [&](Real step) { return (f(x + step) - f(x - step)) / (2 * step); };
  return (4 * central(h / 2) - central(h)) / 3;
}

}  // namespace

Complex i_n_gamma(int n, Complex gamma, Complex nu, const QParams& s, Real tol) {
  if (n < 0) throw Error(Errc::param_error, "i_n_gamma: n must be >= 0");
  return i_n_term(n, gamma, nu, s.a, s.b, s, tol) + i_n_term(n, gamma, nu, s.b, s.a, s, tol);
}

Real i_n_gamma_quad(int n, Real gamma, Real nu, const QParams& s, const QuadOptions& opt) {
  const QBase& B = s.base;
  const Real q = s.q();
  const Real gn = gamma * std::pow(q, n);
  return integrate(
             [&](Real t) {
               const LatticePoint p = point_from_theta(t, B);
               const Complex e = p.qz, ei = Real(1) / p.qz;
               Complex den(1);
               for (Complex c : {s.a, s.b, Complex(gn), s.alpha, q / s.alpha})
                 den *= pinf({c * e, c * ei}, B);
               const Complex w = pinf({e * e, ei * ei}, B) / den;
               return (v_nu(nu, p, s) * w).real();
             },
             opt)
      .value;
}

Real norm_sq_closed(Complex nu, const QParams& s) {
  const Complex50 n50 = widen(nu), a = widen(s.a), b = widen(s.b);
  const Complex50 total = norm_pair(n50, a, b, s) + norm_pair(n50, b, a, s);
  return static_cast<Real>(total.real());
}

Real identity_prefactor(const QParams& s) {
  const QBase& B = s.base;
  const Real q = s.q();
  const Complex a = s.a, b = s.b, c = s.c, d = s.d, al = s.alpha;
  const Complex K = pinf({Complex(q), Complex(q), al * a, q * a / al, al * b, q * b / al, al * c,
                          q * c / al, q * al / d, q * q / (al * d)},
                         B);
  const Complex pre = -4 * std::numbers::pi_v<Real> * std::sqrt(q) * d / ((1 - q) * K);
  return pre.real();
}

Real norm_sq_rhs(Real nu, const QParams& s, Real dnu, Real tol) {
  const Real dlam = lambda_nu(nu, s).dlambda_dnu.real();
  if (std::abs(dlam) < 1e-14L) {
    throw Error(Errc::degenerate_derivative, "norm_sq_rhs: d lambda / d nu vanishes");
  }
  auto f = [&](Real x) { return boundary_f_value(x, s, tol); };
  auto g = [&](Real x) { return boundary_g(x, s, tol); };
  const Real fv = f(nu), gv = g(nu);
  const Real fp = derivative(f, nu, dnu), gp = derivative(g, nu, dnu);
  return identity_prefactor(s) * (fp * gv - fv * gp) / dlam;
}

Complex wronskian_closed(Complex nu, const LatticePoint& p, const QParams& s) {
  if (std::abs(s.c - s.d) < 1e-10L) {
    throw Error(Errc::c_equals_d, "wronskian identity degenerates when c == d");
  }
  const QBase& B = s.base;
  const Real q = s.q();
  const Complex a = s.a, b = s.b, c = s.c, d = s.d, w = p.qz;
  const Complex qn = B.pow(nu), qmn = B.pow(-nu);
  const Complex num = pinf({c / d, q * d / c, qmn, s.abcd() * qn / q, a * b * qn, q * qmn / (c * d)}, B);
  const Complex den = (1 - q) * c * pinf({a * b, a * b, a * c, a * d, b * c, b * d}, B);
  const Complex lat = pinf({a * w, a * q / w, b * w, b * q / w}, B) /
                      pinf({w / c, q / (w * c), w / d, q / (w * d)}, B);
  return Real(2) * q * num / den * lat;
}

Real wronskian_identity_residual(Complex nu, const LatticePoint& p, const QParams& s) {
  const Complex closed = wronskian_closed(nu, p, s);
  // The lattice Wronskian cancels by up to 1e10 for nu near 6, beyond what
  // hardware-float u values can resolve; it is formed in 50 digits.
  const QParams sw = s.with_cd_swapped();
  const LatticePoint pm = p.shifted(Real(-1), s.base);
  const Complex50 u0 = extended::u_nu_pair(nu, p, s), u1 = extended::u_nu_pair(nu, pm, s);
  const Complex50 v0 = extended::u_nu_pair(nu, p, sw), v1 = extended::u_nu_pair(nu, pm, sw);
  const Complex50 w0 = widen(p.qz), w1 = widen(pm.qz);
  const Complex50 dx = (w0 + Complex50(1) / w0 - w1 - Complex50(1) / w1) / 2;
  if (abs(dx) < Real50("1e-14")) throw Error(Errc::degenerate_step, "wronskian: x(z) == x(z-1)");
  const Complex50 lat50 = (v0 * u1 - u0 * v1) / dx;
  const Complex lattice(static_cast<Real>(lat50.real()), static_cast<Real>(lat50.imag()));
  const Real scale = std::max(std::abs(closed), std::abs(lattice));
  if (scale < 1e-12L) return scale;
  return std::abs(lattice - closed) / scale;
}

Real main_identity_rhs(Real mu, Real nu, const QParams& s, Real tol) {
  const Complex dl = lambda_nu(mu, s).lambda - lambda_nu(nu, s).lambda;
  if (std::abs(dl) < 1e-14L) {
    throw Error(Errc::param_error, "main identity: lambda_mu == lambda_nu");
  }
  const auto [x0, x1] = boundary_abscissae(s);
  const Real fm = boundary_f_value(mu, s, tol), fn = boundary_f_value(nu, s, tol);
  const Real lm = boundary_f_lower(mu, s, tol), ln = boundary_f_lower(nu, s, tol);
  const Real w = (fn * lm - fm * ln) / (x0 - x1);
  return identity_prefactor(s) * w / dl.real();
}

IdentityCheck main_identity(Real mu, Real nu, const QParams& s, const QuadOptions& opt) {
  IdentityCheck r;
  r.rhs = main_identity_rhs(mu, nu, s);
  r.lhs = ortho_integral(mu, nu, s, opt).value;
  r.residual = std::abs(r.lhs - r.rhs) / std::max(std::abs(r.rhs), Real(1e-300L));
  return r;
}

Real main_identity_residual(Real mu, Real nu, const QParams& s, const QuadOptions& opt) {
  return main_identity(mu, nu, s, opt).residual;
}

}  // namespace qortho
