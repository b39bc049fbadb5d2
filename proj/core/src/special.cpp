#include "qortho/special.hpp"

#include <cmath>
#include <numbers>

namespace qortho {

namespace {

constexpr Real kPoleGuard = 1e-13L;

Complex guarded(Complex v, const char* where) {
  if (std::abs(v) < kPoleGuard) throw Error(Errc::pole_proximity, where);
  return v;
}

Complex series(std::vector<Complex> num, std::vector<Complex> den, Complex t, const QBase& B,
               Real tol) {
  SeriesSpec sp;
  sp.base = B;
  sp.numerator_params = std::move(num);
  sp.denominator_params = std::move(den);
  sp.argument = t;
  return phi(sp, tol).value;
}

// Exact sum of a terminating series; no stopping rule involved.
Complex terminating(int n, std::vector<Complex> num, std::vector<Complex> den, Complex t,
                    const QBase& B) {
  const Real q = B.q();
  Complex term(1), sum(1);
  const Complex qn = B.pow(Real(-n));
  const int s = static_cast<int>(den.size()), r = static_cast<int>(num.size()) + 1;
  for (int k = 0; k < n; ++k) {
    const Real qk = std::pow(q, k);
    Complex ratio = (Real(1) - qn * qk) * t / (Real(1) - qk * q);
    for (const Complex& a : num) ratio *= Real(1) - a * qk;
    for (const Complex& b : den) ratio /= Real(1) - b * qk;
    for (int e = 0; e < 1 + s - r; ++e) ratio *= -qk;
    term *= ratio;
    sum += term;
  }
  return sum;
}

// (t)_inf 2phi1(A, B; C; q, t) through Heine's transformation:
//   (B)_inf/(C)_inf sum_n (C/B, t)_n/(q)_n (A t q^n)_inf B^n.
Complex heine(Complex A, Complex Bp, Complex C, Complex t, const QBase& base, Real tol) {
  AbsorbedSeries sp;
  sp.numerators = {C / Bp, t};
  sp.absorbed = {A * t};
  sp.argument = Bp;
  return pinf(Bp, base) / guarded(pinf(C, base), "heine: (C)_inf near zero") *
         absorbed_sum(sp, base, tol).value;
}

Complex point_from_x(Real x) {
  if (std::abs(x) <= 1) return Complex(x, std::sqrt(1 - x * x));
  return Complex(x + std::copysign(std::sqrt(x * x - 1), x), 0);
}

}  // namespace

// ---- dual q-Hahn ----

Complex dual_qhahn_u(Complex nu, const LatticePoint& p, Complex a, Complex b, Complex c,
                     const QBase& B, Real tol) {
  const Real q = B.q();
  const Complex w = p.qz, qn = B.pow(nu), qmn = B.pow(-nu);
  if (!(std::abs(a * b * qn) < 1)) {
    throw Error(Errc::representation_inadmissible, "dual_qhahn_u: needs |ab q^nu| < 1");
  }
  const Complex pre = pinf({a * b * qn, q * qmn * w / c, q * qmn / (w * c)}, B) /
                      guarded(pinf({a * b, q * w / c, q / (w * c)}, B), "dual_qhahn_u: pole");
  return pre * series({qmn, q * qmn / (a * c), q * qmn / (b * c)},
                      {q * qmn * w / c, q * qmn / (w * c)}, a * b * qn, B, tol);
}

Complex dual_qhahn_u_pair(Complex nu, const LatticePoint& p, Complex a, Complex b, Complex c,
                          const QBase& B, Real tol) {
  const Real q = B.q();
  const Complex w = p.qz, qmn = B.pow(-nu);
  const Complex t1 = pinf(q * qmn / (a * c), B) / guarded(pinf(q / (a * c), B), "dual_qhahn_u_pair: pole") *
                     series({qmn, a * w, a / w}, {a * b, a * c}, q, B, tol);
  const Complex pre2 = pinf({qmn, q * b / c, a * w, a / w}, B);
  if (std::abs(pre2) == 0) return t1;
  const Complex t2 = pre2 /
                     guarded(pinf({a * b, a * c / q, q * w / c, q / (w * c)}, B), "dual_qhahn_u_pair: pole") *
                     series({q * qmn / (a * c), q * w / c, q / (w * c)}, {q * b / c, q * q / (a * c)}, q, B, tol);
  return t1 + t2;
}

Real dual_qhahn_boundary(Real nu, Complex a, Complex b, Complex c, Real alpha, const QBase& B,
                         Real tol) {
  const Real q = B.q();
  const Complex qmn = B.pow(Complex(-nu));
  AbsorbedSeries sp;
  sp.numerators = {qmn, a / alpha, b / alpha};
  sp.denominators = {a * b};
  sp.absorbed = {q * qmn / (alpha * c)};
  sp.argument = q * alpha / c;
  return (pinf(q * alpha / c, B) * absorbed_sum(sp, B, tol).value).real();
}

Complex dual_qhahn_poly(int n, const LatticePoint& p, Complex a, Complex b, Complex c,
                        const QBase& B) {
  return std::pow(a, Real(-n)) * pn({a * b, a * c}, B, n) *
         terminating(n, {p.qz * a, a / p.qz}, {a * b, a * c}, B.q(), B);
}

// ---- Al-Salam–Chihara ----

Complex al_salam_chihara_u(Complex nu, const LatticePoint& p, Complex a, Complex b, const QBase& B,
                           Real tol) {
  const Real q = B.q();
  const Complex w = p.qz, qmn = B.pow(-nu);
  const Complex pre = pinf({q * qmn * w / b, q * qmn / (w * b)}, B) /
                      guarded(pinf({q * w / b, q / (w * b)}, B), "al_salam_chihara_u: pole");
  return pre * series({qmn, q * qmn / (a * b)}, {q * qmn * w / b, q * qmn / (w * b)}, q * a / b, B, tol);
}

Complex al_salam_chihara_u_pair(Complex nu, const LatticePoint& p, Complex a, Complex b,
                                const QBase& B, Real tol) {
  const Real q = B.q();
  const Complex w = p.qz, qmn = B.pow(-nu);
  const Complex t1 = pinf(q * qmn / (a * b), B) /
                     guarded(pinf(q / (a * b), B), "al_salam_chihara_u_pair: pole") *
                     series({qmn, a * w, a / w}, {a * b, Complex(0)}, q, B, tol);
  const Complex pre2 = pinf({qmn, a * w, a / w}, B);
  if (std::abs(pre2) == 0) return t1;
  const Complex t2 = pre2 /
                     guarded(pinf({a * b / q, q * w / b, q / (w * b)}, B), "al_salam_chihara_u_pair: pole") *
                     series({q * qmn / (a * b), q * w / b, q / (w * b)}, {q * q / (a * b), Complex(0)}, q, B, tol);
  return t1 + t2;
}

Real al_salam_chihara_boundary(Real nu, Complex a, Complex b, Real alpha, const QBase& B, Real tol) {
  const Real q = B.q();
  const Complex qmn = B.pow(Complex(-nu));
  AbsorbedSeries sp;
  sp.numerators = {qmn, a / alpha};
  sp.absorbed = {q * qmn / (alpha * b)};
  sp.argument = q * alpha / b;
  return (pinf(q * alpha / b, B) * absorbed_sum(sp, B, tol).value).real();
}

Complex al_salam_chihara_poly(int n, const LatticePoint& p, Complex a, Complex b, const QBase& B) {
  return std::pow(a, Real(-n)) * pn({a * b}, B, n) *
         terminating(n, {p.qz * a, a / p.qz}, {a * b, Complex(0)}, B.q(), B);
}

// ---- big q-Hermite ----

Complex big_qhermite_u(Complex nu, const LatticePoint& p, Complex a, const QBase& B, Real tol) {
  const Real q = B.q();
  const Complex w = p.qz, qmn = B.pow(-nu);
  const Complex pre = pinf({q * qmn * w / a, q * qmn / (w * a)}, B) /
                      guarded(pinf({q * w / a, q / (w * a)}, B), "big_qhermite_u: pole");
  return pre * series({qmn}, {q * qmn * w / a, q * qmn / (w * a)}, q * q * qmn / (a * a), B, tol);
}

Real big_qhermite_boundary(Real nu, Complex a, Real alpha, const QBase& B, Real tol) {
  const Real q = B.q();
  const Complex qmn = B.pow(Complex(-nu));
  const Complex den = q * qmn / (alpha * a);
  return (pinf(den, B) * series({q / (alpha * a)}, {den}, q * qmn * alpha / a, B, tol)).real();
}

Complex big_qhermite_poly(int n, const LatticePoint& p, Complex a, const QBase& B) {
  return std::pow(a, Real(-n)) *
         terminating(n, {p.qz * a, a / p.qz}, {Complex(0), Complex(0)}, B.q(), B);
}

// ---- q-Hermite ----

Complex qhermite_H(Complex nu, const LatticePoint& p, const QBase& B, Real tol) {
  const Real q = B.q();
  const QBase B2 = B.squared();
  const Complex w2 = p.qz * p.qz, qmn = B.pow(-nu);
  const Complex pre = pinf({-q * qmn * w2, -q * qmn / w2}, B2) /
                      guarded(pinf({-q * w2, -q / w2}, B2), "qhermite_H: pole");
  return pre * series({qmn, q * qmn}, {-q * qmn * w2, -q * qmn / w2}, q, B2, tol);
}

Complex qhermite_poly(int n, const LatticePoint& p, const QBase& B) {
  Complex s(0);
  const Complex qn = qpoch(B.q(), B, n);
  for (int k = 0; k <= n; ++k) {
    s += qn / (qpoch(B.q(), B, k) * qpoch(B.q(), B, n - k)) * std::pow(p.qz, Real(n - 2 * k));
  }
  return s;
}

// ---- q-Bessel ----

Complex qbessel_J_t(Complex nu, const LatticePoint& p, Complex t, const QBase& B, Real tol) {
  const Real q = B.q();
  const Complex s = B.pow((nu + Real(1)) / Real(2));
  const Complex C = q * B.pow(nu);
  return pinf(C, B) / pinf(q, B) * heine(s * p.qz, s / p.qz, C, t, B, tol);
}

Complex qbessel_J_t_direct(Complex nu, const LatticePoint& p, Complex t, const QBase& B, Real tol) {
  const Real q = B.q();
  const Complex s = B.pow((nu + Real(1)) / Real(2));
  const Complex C = q * B.pow(nu);
  return pinf({C, t}, B) / pinf(q, B) * series({s * p.qz, s / p.qz}, {C}, t, B, tol);
}

Complex qbessel_J(Complex nu, const LatticePoint& p, Complex r, const QBase& B, Real tol) {
  const Complex t = -r * r / Real(4);
  const Complex lead = r == Complex(0) ? (nu == Complex(0) ? Complex(1) : Complex(0))
                                       : std::pow(r / Real(2), nu);
  return lead * qbessel_J_t(nu, p, t, B, tol);
}

Real qbessel_weight(Real theta, Real nu, Real alpha, const QBase& B, Real tol) {
  if (!(theta > 0 && theta < std::numbers::pi_v<Real>)) {
    throw Error(Errc::pole_proximity, "qbessel_weight: theta must lie in (0, pi)");
  }
  const Real q = B.q();
  const Complex e = std::polar(Real(1), theta), ei = std::conj(e);
  auto pr = [&](Complex c) {
    return qpoch_inf(c * e, B, tol).value * qpoch_inf(c * ei, B, tol).value;
  };
  const Complex s = B.pow(Complex((nu + 1) / 2));
  const Complex num = qpoch_inf(e * e, B, tol).value * qpoch_inf(ei * ei, B, tol).value;
  const Complex sp = pr(s);
  return (num / (pr(std::pow(q, alpha)) * pr(std::pow(q, 1 - alpha)) * sp * sp)).real();
}

// ---- q-trigonometric ----

Complex qtrig_C_at(const LatticePoint& p, Real omega, const QBase& B, Real tol) {
  const Real q = B.q();
  const QBase B2 = B.squared();
  const Complex w2 = p.qz * p.qz;
  const Real o2 = omega * omega;
  return heine(-q * w2, -q / w2, q, -o2, B2, tol) / pinf(-q * o2, B2);
}

Complex qtrig_S_at(const LatticePoint& p, Real omega, const QBase& B, Real tol) {
  const Real q = B.q();
  const QBase B2 = B.squared();
  const Complex w2 = p.qz * p.qz;
  const Real o2 = omega * omega;
  return heine(-q * q * w2, -q * q / w2, q * q * q, -o2, B2, tol) / pinf(-q * o2, B2) *
         (2 * std::pow(q, Real(0.25)) / (1 - q) * omega) * p.x;
}

Real qtrig_C(Real x, Real omega, const QBase& B, Real tol) {
  return qtrig_C_at(LatticePoint::from_qz(point_from_x(x), B), omega, B, tol).real();
}

Real qtrig_S(Real x, Real omega, const QBase& B, Real tol) {
  return qtrig_S_at(LatticePoint::from_qz(point_from_x(x), B), omega, B, tol).real();
}

Real qtrig_weight(Real theta, const QBase& B, Real tol) {
  if (!(theta > 0 && theta < std::numbers::pi_v<Real>)) {
    throw Error(Errc::pole_proximity, "qtrig_weight: theta must lie in (0, pi)");
  }
  const Complex e2 = std::polar(Real(1), 2 * theta), e2i = std::conj(e2);
  const Real sq = std::sqrt(B.q());
  auto pi = [&](Complex c) { return qpoch_inf(c, B, tol).value; };
  return (pi(e2) * pi(e2i) / (pi(sq * e2) * pi(sq * e2i))).real();
}

Real qtrig_boundary_x(const QBase& B) {
  const Real r = std::pow(B.q(), Real(0.25));
  return (r + 1 / r) / 2;
}

std::vector<Real> qtrig_roots(int n, const QBase& B, const ScanOptions& opt) {
  const LatticePoint p = LatticePoint::from_qz(std::pow(B.q(), Real(0.25)), B);
  auto f = [&](Real omega) { return qtrig_S_at(p, omega, B).real(); };
  std::vector<Real> out;
  // Roots grow roughly like q^{-k}; the cap only bounds a runaway scan.
  for (const Root& r : scan_roots(f, opt.step, 4 * std::pow(B.q(), -Real(n)) + 4, n, opt)) {
    out.push_back(r.x);
  }
  if (static_cast<int>(out.size()) < n) {
    throw Error(Errc::scan_exhausted, "qtrig_roots: fewer roots than requested");
  }
  return out;
}

Real qtrig_diagonal(Real omega, const QBase& B, Real tol) {
  const Real q = B.q();
  const QBase B2 = B.squared();
  const Real sq = std::sqrt(q), o2 = omega * omega;
  const Complex a = std::numbers::pi_v<Real> * pinf({Complex(sq), Complex(-sq * o2)}, B) /
                    pinf({Complex(q), Complex(-o2)}, B);
  const Complex b = pinf(-o2, B2) / pinf(-q * o2, B2);
  const Complex f = series({Complex(sq), Complex(-o2)}, {Complex(-sq * o2)}, q, B, tol);
  return (a * b * f).real();
}

}  // namespace qortho
