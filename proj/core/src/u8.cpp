#include "qortho/u8.hpp"

#include <cmath>
#include <optional>

#include "qortho/extended.hpp"

namespace qortho {

namespace {

constexpr Real kPoleGuard = 1e-13L;
constexpr Real kIntegerSnap = 1e-8L;
constexpr Real kAdLatticeStrict = 1e-8L;
constexpr Real kAdLatticeAuto = 1e-6L;
// The B pair cancels like q^{-nu^2/2} on the contour: 1e-16 relative at
// nu = 3, 1e-12 at 5.5, 1e-5 at 8.5. Past this Auto prefers C, D, A.
constexpr Real kAutoBMaxNu = 3;
constexpr Real kAutoMargin = 0.9L;

Complex guarded(Complex v, const char* where) {
  if (std::abs(v) < kPoleGuard) throw Error(Errc::pole_proximity, where);
  return v;
}

std::optional<int> near_nonnegative_integer(Complex nu) {
  const Real n = std::round(nu.real());
  if (n < 0) return std::nullopt;
  if (std::abs(nu - Complex(n)) < kIntegerSnap) return static_cast<int>(n);
  return std::nullopt;
}

// ad within rel of some integer power of q, where (q/ad)_inf or (ad/q)_inf vanishes.
bool near_ad_lattice(const QParams& s, Real rel) {
  const Complex ad = s.a * s.d;
  const Real m = std::abs(ad);
  if (m == 0) return true;
  const Real k = std::round(std::log(m) / s.base.log_q());
  return std::abs(ad * s.base.pow(-k) - Real(1)) < rel;
}

// The argument of C is q/(w d); evaluating at whichever of w, 1/w has the
// larger modulus gives the smaller argument (the function is symmetric).
Complex c_orientation(Complex w) { return std::abs(w) >= 1 ? w : Real(1) / w; }

Complex pole_pair(Complex w, const QParams& s) {
  const Real q = s.q();
  return pinf({q * w / s.d, q / (w * s.d)}, s.base);
}

Complex v_a(Complex nu, Complex w, const QParams& s, Real tol) {
  const QBase& B = s.base;
  const Real q = s.q();
  const Complex qn = B.pow(nu), qmn = B.pow(-nu);
  const Complex a = s.a, b = s.b, c = s.c, d = s.d;
  const Complex A = a * qmn / d;
  AbsorbedSeries sp;
  sp.numerators = {A, qmn, q * qmn / (b * d), q * qmn / (c * d), a * w, a / w};
  sp.denominators = {a * b, a * c};
  sp.absorbed = {q * a / d, q * qmn * w / d, q * qmn / (w * d)};
  sp.well_poised = true;
  sp.wp_param = A;
  sp.argument = b * c * qn;
  const Complex pre = pinf(b * c * qn, B) /
                      (guarded(pinf(q * qmn * a / d, B), "u_nu(A): (q^{1-nu} a/d)_inf near zero") *
                       pinf(b * c, B));
  return pre * absorbed_sum(sp, B, tol).value;
}

Complex narrow(const extended::Complex50& z) {
  return {static_cast<Real>(z.real()), static_cast<Real>(z.imag())};
}

Complex v_b(Complex nu, Complex w, const QParams& s, Real tol) {
  const QBase& B = s.base;
  const Real q = s.q();
  const Complex qn = B.pow(nu), qmn = B.pow(-nu);
  const Complex a = s.a, b = s.b, c = s.c, d = s.d;
  const Complex abcd = s.abcd();

  SeriesSpec first;
  first.base = B;
  first.argument = q;
  first.numerator_params = {qmn, abcd * qn / q, a * w, a / w};
  first.denominator_params = {a * b, a * c, a * d};
  const bool integer = near_nonnegative_integer(nu).has_value();
  // At integer nu the first series terminates and its terms cancel by several
  // orders of magnitude, so it is summed in 50 digits.
  const Complex series =
      integer ? narrow(extended::phi(first, extended::Real50("1e-40"))) : phi(first, tol).value;
  const Complex t1 =
      pinf({b * c * qn, q * qmn / (a * d)}, B) / pinf({b * c, q / (a * d)}, B) * series;
  Complex v = pole_pair(w, s) * t1;
  if (integer) return v;

  SeriesSpec second;
  second.base = B;
  second.argument = q;
  second.numerator_params = {q * qmn / (a * d), b * c * qn, q * w / d, q / (w * d)};
  second.denominator_params = {q * b / d, q * c / d, q * q / (a * d)};
  const Complex t2 = pinf({qmn, abcd * qn / q, q * b / d, q * c / d}, B) /
                     pinf({a * b, a * c, b * c, a * d / q}, B) * pinf({a * w, a / w}, B) *
                     phi(second, tol).value;
  return v + t2;
}

Complex v_c(Complex nu, Complex w0, const QParams& s, Real tol) {
  const QBase& B = s.base;
  const Real q = s.q();
  const Complex w = c_orientation(w0);
  const Complex qn = B.pow(nu), qmn = B.pow(-nu);
  const Complex a = s.a, b = s.b, c = s.c, d = s.d;
  const Complex abc = a * b * c;
  const Complex A = abc * w / q;
  AbsorbedSeries sp;
  sp.numerators = {A, qmn, s.abcd() * qn / q, a * w, b * w, c * w};
  sp.denominators = {b * c, a * c, a * b};
  sp.absorbed = {abc * w * qn, q * qmn * w / d};
  sp.well_poised = true;
  sp.wp_param = A;
  sp.argument = q / (w * d);
  const Complex pre =
      pinf(q / (w * d), B) / guarded(pinf(abc * w, B), "u_nu(C): (abc q^z)_inf near zero");
  return pre * absorbed_sum(sp, B, tol).value;
}

Complex v_d_half(Complex nu, Complex w, const QParams& s, Real tol) {
  const QBase& B = s.base;
  const Real q = s.q();
  const Complex qn = B.pow(nu), qmn = B.pow(-nu);
  const Complex a = s.a, b = s.b, c = s.c, d = s.d;
  const Complex A = b * c * qn * w * w;
  AbsorbedSeries sp;
  sp.numerators = {A, b * c * qn, b * w, c * w, q * w / a, q * w / d};
  sp.denominators = {q * w * w};
  sp.absorbed = {b * q * qn * w, c * q * qn * w, a * b * c * qn * w, b * c * d * qn * w};
  sp.well_poised = true;
  sp.wp_param = A;
  sp.argument = a * d * qn;
  const Complex num = pinf({q / (w * d), d * qn / w, a / w, b / w, c / w, q * qmn * w / d}, B);
  const Complex den = guarded(pinf({q * qn, b * d * qn, c * d * qn, b * c * q * qn * w * w, a * b,
                                    a * c, b * c, Real(1) / (w * w)},
                                   B),
                              "u_nu(D): denominator product near zero");
  return num / den * absorbed_sum(sp, B, tol).value;
}

Complex v_d(Complex nu, Complex w, const QParams& s, Real tol) {
  return v_d_half(nu, w, s, tol) + v_d_half(nu, Real(1) / w, s, tol);
}

Complex v_dispatch(Representation rep, Complex nu, Complex w, const QParams& s, Real tol) {
  switch (rep) {
    case Representation::A_87: return v_a(nu, w, s, tol);
    case Representation::B_43pair: return v_b(nu, w, s, tol);
    case Representation::C_sym: return v_c(nu, w, s, tol);
    case Representation::D_asym: return v_d(nu, w, s, tol);
    case Representation::Auto: break;
  }
  throw Error(Errc::param_error, "v_nu: unresolved representation");
}

Representation resolve(Representation rep, Complex nu, const LatticePoint& p, const QParams& s) {
  if (rep == Representation::Auto) return select_representation(nu, p, s);
  if (!admissible(rep, nu, p, s)) {
    throw Error(Errc::representation_inadmissible,
                std::string("u_nu: representation ") + to_string(rep) + " not admissible here");
  }
  return rep;
}

Complex boundary_value(Real nu, Complex w, const QParams& s, Real tol, Representation* used) {
  const LatticePoint p = LatticePoint::from_qz(w, s.base);
  for (Representation r :
       {Representation::C_sym, Representation::A_87, Representation::D_asym}) {
    if (admissible(r, nu, p, s)) {
      if (used) *used = r;
      return v_dispatch(r, nu, w, s, tol);
    }
  }
  throw Error(Errc::all_representations_inadmissible,
              "boundary_f: no representation converges at the boundary point");
}

Real real_checked(Complex v, const char* where) {
  if (std::abs(v.imag()) > 1e-10L * (1 + std::abs(v))) throw Error(Errc::param_error, where);
  return v.real();
}

}  // namespace

const char* to_string(Representation rep) noexcept {
  switch (rep) {
    case Representation::A_87: return "A";
    case Representation::B_43pair: return "B";
    case Representation::C_sym: return "C";
    case Representation::D_asym: return "D";
    case Representation::Auto: return "auto";
  }
  return "?";
}

bool admissible(Representation rep, Complex nu, const LatticePoint& p, const QParams& s,
                Real margin) {
  const QBase& B = s.base;
  const Real q = s.q();
  const Complex qn = B.pow(nu);
  switch (rep) {
    case Representation::A_87:
      return s.b != Complex(0) && s.c != Complex(0) && std::abs(s.b * s.c * qn) < margin;
    case Representation::B_43pair:
      return !near_ad_lattice(s, kAdLatticeStrict);
    case Representation::C_sym:
      return std::abs(q / (c_orientation(p.qz) * s.d)) < margin;
    case Representation::D_asym:
      return s.a != Complex(0) && std::abs(s.a * s.d * qn) < margin &&
             std::abs(Real(1) - p.qz * p.qz) > 1e-10L;
    case Representation::Auto:
      return true;
  }
  return false;
}

Representation select_representation(Complex nu, const LatticePoint& p, const QParams& s) {
  const bool b_ok = !near_ad_lattice(s, kAdLatticeAuto);
  if (b_ok && nu.real() <= kAutoBMaxNu) return Representation::B_43pair;
  for (Representation r :
       {Representation::C_sym, Representation::D_asym, Representation::A_87}) {
    if (admissible(r, nu, p, s, kAutoMargin)) return r;
  }
  if (b_ok) return Representation::B_43pair;
  throw Error(Errc::all_representations_inadmissible, "u_nu: no representation admissible");
}

Complex v_nu(Complex nu, const LatticePoint& p, const QParams& s, Representation rep, Real tol) {
  return v_dispatch(resolve(rep, nu, p, s), nu, p.qz, s, tol);
}

Complex u_nu(Complex nu, const LatticePoint& p, const QParams& s, Representation rep, Real tol) {
  const Complex v = v_nu(nu, p, s, rep, tol);
  return v / guarded(pole_pair(p.qz, s), "u_nu: point on the q^{1+-z}/d pole lattice");
}

Complex u_nu_c_pair(Complex nu, const LatticePoint& p, const QParams& s, Real tol) {
  const QBase& B = s.base;
  const Real q = s.q();
  const Complex w = p.qz;
  const Complex qn = B.pow(nu), qmn = B.pow(-nu);
  const Complex a = s.a, b = s.b, c = s.c, d = s.d;
  const Complex abcd = s.abcd();
  const Complex abc = a * b * c;

  AbsorbedSeries first;
  first.numerators = {qmn, q * qmn / (a * d), q * qmn / (b * d), q * qmn / (c * d)};
  first.denominators = {q * q * qmn * qmn / abcd};
  first.absorbed = {q * qmn * w / d, q * qmn / (w * d)};
  first.argument = q;
  const Complex t1 = pinf({a * b * qn, a * c * qn, b * c * qn, abcd * qn / q}, B) /
                     pinf({a * b, a * c, b * c, abcd * qn * qn / q}, B) *
                     absorbed_sum(first, B, tol).value;

  AbsorbedSeries second;
  second.numerators = {abcd * qn / q, a * b * qn, a * c * qn, b * c * qn};
  second.denominators = {abcd * qn};
  second.absorbed = {abc * qn * w, abc * qn / w};
  second.argument = q;
  const Complex t2 = pinf({qmn, q * qmn / (a * d), q * qmn / (b * d), q * qmn / (c * d)}, B) /
                     pinf({a * b, a * c, b * c, q * qmn * qmn / abcd}, B) *
                     absorbed_sum(second, B, tol).value;

  return (t1 + t2) / guarded(pole_pair(w, s), "u_nu_c_pair: point on the pole lattice");
}

BoundaryEval boundary_f(Real nu, const QParams& s, Real tol, bool cross_check) {
  BoundaryEval out;
  out.nu = nu;
  out.value = real_checked(boundary_value(nu, s.alpha, s, tol, &out.representation_used),
                           "boundary_f: value not real; parameters violate reality");
  if (cross_check && out.representation_used != Representation::D_asym) {
    const LatticePoint p = LatticePoint::from_qz(s.alpha, s.base);
    if (admissible(Representation::D_asym, nu, p, s, kAutoMargin)) {
      const Complex alt = v_d(nu, s.alpha, s, tol);
      out.residual_diag = std::abs(alt - Complex(out.value));
    }
  }
  return out;
}

Real boundary_f_value(Real nu, const QParams& s, Real tol) {
  return real_checked(boundary_value(nu, s.alpha, s, tol, nullptr),
                      "boundary_f: value not real; parameters violate reality");
}

Real boundary_f_lower(Real nu, const QParams& s, Real tol) {
  return real_checked(boundary_value(nu, s.alpha / s.q(), s, tol, nullptr),
                      "boundary_f_lower: value not real; parameters violate reality");
}

std::pair<Real, Real> boundary_abscissae(const QParams& s) {
  const Real al = s.alpha.real();
  const Real q = s.q();
  return {(al + 1 / al) / 2, (al / q + q / al) / 2};
}

Real boundary_g(Real nu, const QParams& s, Real tol) {
  const auto [x0, x1] = boundary_abscissae(s);
  return (boundary_f_value(nu, s, tol) - boundary_f_lower(nu, s, tol)) / (x0 - x1);
}

Real diff_formula_check(Complex nu, const LatticePoint& p, const QParams& s) {
  const QBase& B = s.base;
  const Real q = s.q();
  const Real sq = std::sqrt(q);
  const LatticePoint up = p.shifted(Real(0.5), B), dn = p.shifted(Real(-0.5), B);
  const Complex lhs = (u_nu(nu, up, s) - u_nu(nu, dn, s)) / (up.x - dn.x);
  const Complex a = s.a, b = s.b, c = s.c, d = s.d;
  const Complex factor = Real(2) * q / ((1 - q) * d) * (Real(1) - B.pow(-nu)) *
                         (Real(1) - s.abcd() * B.pow(nu - Real(1))) /
                         ((Real(1) - a * b) * (Real(1) - a * c) * (Real(1) - b * c));
  if (std::abs(factor) == 0 && std::abs(lhs) < 1e-14L) return 0;
  const QParams shifted(B, a * sq, b * sq, c * sq, d * sq, s.alpha);
  const Complex rhs = factor * u_nu(nu - Real(1), p, shifted);
  const Real scale = std::max(std::abs(lhs), std::abs(rhs));
  if (scale == 0) return 0;
  return std::abs(lhs - rhs) / scale;
}

Amplitude asymptotic_amplitude(Real theta, const QParams& s) {
  if (!(theta > 0 && theta < std::acos(Real(-1)))) {
    throw Error(Errc::pole_proximity, "asymptotic_amplitude: theta must lie in (0, pi)");
  }
  const QBase& B = s.base;
  const Real q = s.q();
  const Complex e = std::polar(Real(1), theta), ei = std::conj(e);
  const Complex A = pinf({s.a * e, s.b * e, s.c * e, s.alpha * ei, q * e / s.alpha}, B) /
                    guarded(pinf({e * e, q * ei / s.d}, B), "asymptotic_amplitude: pole");
  Amplitude out;
  out.magnitude = std::abs(A);
  out.phase = std::arg(A);
  Complex den(1);
  for (const Complex& p : {s.a, s.b, s.c, s.alpha, q / s.alpha}) den *= pinf({p * e, p * ei}, B);
  const Complex uw = pinf({e * e, ei * ei, q * e / s.d, q * ei / s.d}, B) / den;
  const Real inv = 1 / (out.magnitude * out.magnitude);
  out.identity_residual = std::abs(uw - Complex(inv)) / inv;
  return out;
}

Real asymptotic_leading(int n, Real theta, const QParams& s) {
  if (n < 1) throw Error(Errc::param_error, "asymptotic_leading: n must be >= 1");
  const QBase& B = s.base;
  const Real q = s.q();
  const Amplitude amp = asymptotic_amplitude(theta, s);
  const Real al = s.alpha.real();
  const Complex abc = pinf({s.a * s.b, s.a * s.c, s.b * s.c}, B);
  const Real scale = 2 * std::pow(-al, n - 1) * std::pow(q, -Real(n) * (n - 1) / 2) / abc.real();
  return scale * amp.magnitude * std::cos((n - 1) * theta - amp.phase);
}

Real gamma_n(int n, const QParams& s) {
  return n - std::log((s.alpha * s.d).real()) / s.base.log_q();
}

}  // namespace qortho
