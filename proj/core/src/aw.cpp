#include "qortho/aw.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qortho/extended.hpp"

namespace qortho {

Complex aw_poly_at(int n, const LatticePoint& p, const QParams& s) {
  if (n < 0) throw Error(Errc::param_error, "aw_poly: n must be nonnegative");
  if (n == 0) return 1;
  if (s.a == Complex(0)) throw Error(Errc::param_error, "aw_poly: a = 0 with n >= 1");
  const QBase& B = s.base;
  const Real q = s.q();
  SeriesSpec spec;
  spec.base = B;
  spec.argument = q;
  spec.numerator_params = {B.pow(Real(-n)), s.abcd() * B.pow(Real(n - 1)), s.a * p.qz,
                           s.a / p.qz};
  spec.denominator_params = {s.a * s.b, s.a * s.c, s.a * s.d};
  const Complex pre = std::pow(s.a, -n) * pn({s.a * s.b, s.a * s.c, s.a * s.d}, B, n);
  // The n + 1 terms cancel by up to 1e9 at n = 6 for the reference set, so
  // they are summed in 50 digits.
  const extended::Complex50 sum = extended::phi(spec, extended::Real50("1e-40"));
  return pre * Complex(static_cast<Real>(sum.real()), static_cast<Real>(sum.imag()));
}

Real aw_poly(int n, Real x, const QParams& s) {
  const LatticePoint p = point_from_theta(std::acos(x), s.base);
  const Complex v = aw_poly_at(n, p, s);
  if (std::abs(v.imag()) > 1e-12L * std::max(Real(1), std::abs(v))) {
    throw Error(Errc::param_error, "aw_poly: value not real; parameters violate reality");
  }
  return v.real();
}

Real aw_weight(Real theta, const QParams& s, Real tol) {
  const QBase& B = s.base;
  const Complex e = std::polar(Real(1), theta);
  const Complex ei = std::conj(e);
  const Complex num = qpoch_inf(e * e, B, tol).value * qpoch_inf(ei * ei, B, tol).value;
  Complex den(1);
  for (const Complex& p : {s.a, s.b, s.c, s.d}) {
    den *= qpoch_inf(p * e, B, tol).value * qpoch_inf(p * ei, B, tol).value;
  }
  if (std::abs(den) < 1e-300L) throw Error(Errc::pole_proximity, "aw_weight: denominator underflow");
  return (num / den).real();
}

Real aw_norm(int n, int m, const QParams& s) {
  if (n < 0 || m < 0) throw Error(Errc::param_error, "aw_norm: negative degree");
  if (n != m) return 0;
  const QBase& B = s.base;
  const Complex a = s.a, b = s.b, c = s.c, d = s.d;
  const Complex abcd = s.abcd();
  const Real q = s.q();
  const Complex h0 = Real(2) * std::numbers::pi_v<Real> * pinf(abcd, B) /
                     pinf({Complex(q), a * b, a * c, a * d, b * c, b * d, c * d}, B);
  const Complex ratio = (Real(1) - abcd / q) *
                        pn({Complex(q), a * b, a * c, a * d, b * c, b * d, c * d}, B, n) /
                        ((Real(1) - abcd * std::pow(q, 2 * n - 1)) * qpoch(abcd / q, B, n));
  return (h0 * ratio).real();
}

}  // namespace qortho
