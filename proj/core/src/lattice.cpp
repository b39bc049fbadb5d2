#include "qortho/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace qortho {

namespace {

constexpr Real kPoleGuard = 1e-13L;

bool is_real(const Complex& z) { return std::abs(z.imag()) <= 1e-14L * (1 + std::abs(z)); }

bool conjugate_pair(const Complex& u, const Complex& v) {
  return std::abs(u - std::conj(v)) <= 1e-14L * (1 + std::abs(u));
}

Complex guarded_denominator(std::initializer_list<Complex> params, const QBase& base,
                            Real tol, const char* where) {
  Complex r(1);
  for (const Complex& p : params) {
    const Complex f = qpoch_inf(p, base, tol).value;
    if (std::abs(f) < kPoleGuard) throw Error(Errc::pole_proximity, where);
    r *= f;
  }
  return r;
}

}  // namespace

QParams::QParams(QBase base_, Complex a_, Complex b_, Complex c_, Complex d_, Complex alpha_)
    : base(base_), a(a_), b(b_), c(c_), d(d_), alpha(alpha_) {
  if (alpha == Complex(0)) throw Error(Errc::param_error, "alpha must be nonzero");
  if (d == Complex(0)) throw Error(Errc::param_error, "d must be nonzero");
}

bool QParams::satisfies_orthogonality() const {
  const Real m = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(q() / d)});
  if (!(m < 1)) return false;
  if (!is_real(d) || !is_real(alpha)) return false;
  const bool ra = is_real(a), rb = is_real(b), rc = is_real(c);
  if (ra && rb && rc) return true;
  if (ra && !rb && !rc) return conjugate_pair(b, c);
  if (rb && !ra && !rc) return conjugate_pair(a, c);
  if (rc && !ra && !rb) return conjugate_pair(a, b);
  return false;
}

void QParams::check_orthogonality() const {
  if (!satisfies_orthogonality()) {
    throw Error(Errc::param_error,
                "parameters violate max(|a|,|b|,|c|,|q/d|)<1 or the reality condition");
  }
}

QParams reference_params() {
  return QParams(QBase(0.5L), 0.3L, 0.2L, 0.1L, 2.2L, 0.8L);
}

LatticePoint LatticePoint::from_qz(Complex qz, const QBase& base) {
  return LatticePoint{std::log(qz) / base.log_q(), qz, (qz + Real(1) / qz) / Real(2)};
}

LatticePoint LatticePoint::from_z(Complex z, const QBase& base) {
  const Complex qz = base.pow(z);
  return LatticePoint{z, qz, (qz + Real(1) / qz) / Real(2)};
}

LatticePoint LatticePoint::shifted(Real dz, const QBase& base) const {
  const Complex w = qz * base.pow(dz);
  return LatticePoint{z + dz, w, (w + Real(1) / w) / Real(2)};
}

LatticePoint point_from_theta(Real theta, const QBase& base) {
  const Complex qz = std::polar(Real(1), theta);
  return LatticePoint{Complex(0, theta / base.log_q()), qz, Complex(std::cos(theta), 0)};
}

Complex sigma(const LatticePoint& p, const QParams& s) {
  const Complex w = p.qz;
  return (w - s.a) * (w - s.b) * (w - s.c) * (w - s.d) / (w * w);
}

Complex tau(Complex x, const QParams& s) {
  const Real q = s.q();
  const Complex abc = s.a * s.b * s.c, abd = s.a * s.b * s.d, acd = s.a * s.c * s.d,
                bcd = s.b * s.c * s.d;
  return Real(2) * std::sqrt(q) / (1 - q) *
         (abc + abd + acd + bcd - s.a - s.b - s.c - s.d + Real(2) * (Real(1) - s.abcd()) * x);
}

Eigenvalue lambda_nu(Complex nu, const QParams& s) {
  const Real q = s.q();
  const Real cst = 4 * q * std::sqrt(q) / ((1 - q) * (1 - q));
  const Complex qmn = s.base.pow(-nu);
  const Complex e = s.abcd() * s.base.pow(nu - Real(1));
  const Complex lam = cst * (Real(1) - qmn) * (Real(1) - e);
  const Complex dlam = cst * s.base.log_q() * (qmn * (Real(1) - e) - (Real(1) - qmn) * e);
  return Eigenvalue{nu, lam, dlam};
}

Complex nabla_x1(const LatticePoint& p, const QBase& base) {
  const Real sq = std::sqrt(base.q());
  return (sq - 1 / sq) * (p.qz - Real(1) / p.qz) / Real(2);
}

Complex pearson_rho(const LatticePoint& p, const QParams& s, Real tol) {
  const QBase& B = s.base;
  const Real q = s.q();
  const Complex w = p.qz, wi = Real(1) / p.qz;
  const Complex diff = w - wi;
  if (std::abs(diff) < kPoleGuard) throw Error(Errc::pole_proximity, "pearson_rho: q^z = +-1");
  const Complex num = qpoch_inf(w * w, B, tol).value * qpoch_inf(wi * wi, B, tol).value *
                      qpoch_inf(q * w / s.d, B, tol).value * qpoch_inf(q * wi / s.d, B, tol).value;
  const Complex den = guarded_denominator(
      {s.alpha * w, s.alpha * wi, q * w / s.alpha, q * wi / s.alpha, s.a * w, s.a * wi, s.b * w,
       s.b * wi, s.c * w, s.c * wi},
      B, tol, "pearson_rho: denominator product near zero");
  return num / (diff * den);
}

Complex pearson_rho_sec7(const LatticePoint& p, const QParams& s, Real tol) {
  const QBase& B = s.base;
  const Real q = s.q();
  const Complex w = p.qz, wi = Real(1) / p.qz;
  const Complex num = qpoch_inf(q * w / s.c, B, tol).value * qpoch_inf(q * wi / s.c, B, tol).value *
                      qpoch_inf(q * w / s.d, B, tol).value * qpoch_inf(q * wi / s.d, B, tol).value;
  const Complex den = guarded_denominator({s.a * w, s.a * wi, s.b * w, s.b * wi}, B, tol,
                                          "pearson_rho_sec7: denominator product near zero");
  return num / den;
}

Complex wronskian(Complex u_z, Complex u_zm1, Complex v_z, Complex v_zm1, Complex x_z,
                  Complex x_zm1) {
  const Complex dx = x_z - x_zm1;
  if (std::abs(dx) < 1e-14L) throw Error(Errc::degenerate_step, "wronskian: x(z) == x(z-1)");
  return (v_z * u_zm1 - u_z * v_zm1) / dx;
}

}  // namespace qortho
