#include "qortho/extended.hpp"

#include <cmath>
#include <string>

#include "qortho/detail/series_kernel.hpp"

namespace qortho::extended {

Complex50 qpoch(const Complex50& a, const Real50& q, int n) {
  Complex50 r(1);
  Real50 qk(1);
  for (int k = 0; k < n; ++k) {
    r *= Complex50(1) - a * qk;
    qk *= q;
  }
  return r;
}

Complex50 qpoch_inf(const Complex50& a, const Real50& q, const Real50& tol) {
  const Real50 m = abs(a);
  Complex50 r(1);
  Real50 qk(1);
  while (m * qk / (1 - q) >= tol / 4) {
    r *= Complex50(1) - a * qk;
    qk *= q;
  }
  return r;
}

Complex50 phi(const std::vector<Complex50>& num, const std::vector<Complex50>& den,
              const Complex50& t, const Real50& q, const Real50& tol, int max_terms) {
  std::optional<int> last;
  for (const Complex50& a : num) {
    auto k = detail::qpower_index(a, q, 1e-30, max_terms);
    if (k && (!last || *k < *last)) last = k;
  }
  auto res = detail::phi_sum<Complex50, Real50>(num, den, t, q, tol, max_terms, last);
  if (!res.converged) {
    throw Error(Errc::no_convergence,
                "extended::phi: stopping rule not met within " + std::to_string(max_terms) + " terms");
  }
  return res.value;
}

Complex50 phi(const SeriesSpec& spec, const Real50& tol, int max_terms) {
  auto widen = [](const Complex& z) {
    return Complex50(Real50(z.real()), Real50(z.imag()));
  };
  const Real50 q(spec.base.q());
  std::vector<Complex50> num, den;
  for (const Complex& a : spec.numerator_params) {
    // Snap terminating parameters to the exact power so the wide sum stops too.
    if (auto k = detail::qpower_index(a, spec.base.q(), 1e-14, max_terms)) {
      num.push_back(Complex50(pow(q, -*k)));
    } else {
      num.push_back(widen(a));
    }
  }
  for (const Complex& b : spec.denominator_params) den.push_back(widen(b));
  return phi(num, den, widen(spec.argument), q, tol, max_terms);
}

namespace {

Complex50 widen(const Complex& z) { return Complex50(Real50(z.real()), Real50(z.imag())); }

const Real50 kWideTol("1e-40");

Complex50 pinf50(std::initializer_list<Complex50> ps, const Real50& q) {
  Complex50 r(1);
  for (const auto& p : ps) r *= qpoch_inf(p, q, kWideTol);
  return r;
}

}  // namespace

Complex50 u_nu_pair(Complex nu_in, const LatticePoint& point, const QParams& s) {
  const Real50 q(s.q());
  const Real50 lq = log(q);
  bool integer = false;
  Complex50 nu = widen(nu_in);
  const Real n = std::round(nu_in.real());
  if (n >= 0 && std::abs(nu_in - Complex(n)) < 1e-8L) {
    nu = Complex50(Real50(n));
    integer = true;
  }
  const Complex50 qn = exp(nu * lq), qmn = exp(-nu * lq);
  const Complex50 a = widen(s.a), b = widen(s.b), c = widen(s.c), d = widen(s.d);
  const Complex50 w = widen(point.qz);
  const Complex50 abcd = a * b * c * d;
  const Complex50 Q(q);

  const Complex50 first = phi({qmn, abcd * qn / q, a * w, a / w}, {a * b, a * c, a * d}, Q, q,
                              kWideTol);
  const Complex50 t1 =
      pinf50({b * c * qn, q * qmn / (a * d)}, q) / pinf50({b * c, q / (a * d)}, q) * first;
  if (integer) return t1;

  const Complex50 second = phi({q * qmn / (a * d), b * c * qn, q * w / d, q / (w * d)},
                               {q * b / d, q * c / d, q * q / (a * d)}, Q, q, kWideTol);
  const Complex50 t2 = pinf50({qmn, abcd * qn / q, q * b / d, q * c / d}, q) /
                       pinf50({a * b, a * c, b * c, a * d / q}, q) * pinf50({a * w, a / w}, q) *
                       second;
  const Complex50 poles = pinf50({q * w / d, q / (w * d)}, q);
  if (abs(poles) < Real50("1e-300"))
    throw Error(Errc::pole_proximity, "u_nu_pair: point on the q^{1+-z}/d pole lattice");
  return t1 + t2 / poles;
}

}  // namespace qortho::extended
