#include "qortho/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qortho/detail/series_kernel.hpp"

namespace qortho {

namespace {

constexpr double kTerminatingRelTol = 1e-14;
constexpr double kPoleRelTol = 1e-10;

void require_finite(const Complex& v, const char* where) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw Error(Errc::overflow, where);
  }
}

}  // namespace

QBase::QBase(Real q) : q_(q), log_q_(0) {
  if (!(q > 0 && q < 1)) {
    throw Error(Errc::invalid_base, "q must lie strictly inside (0,1), got " + std::to_string(q));
  }
  log_q_ = std::log(q);
}

Complex QBase::pow(Complex nu) const { return std::exp(nu * log_q_); }

Real QBase::pow(Real nu) const { return std::exp(nu * log_q_); }

Complex qpoch(Complex a, const QBase& base, int n) {
  if (n < 0) throw Error(Errc::param_error, "qpoch: n must be nonnegative");
  Complex r(1);
  Real qk = 1;
  for (int k = 0; k < n; ++k) {
    r *= Real(1) - a * qk;
    qk *= base.q();
  }
  return r;
}

SeriesValue qpoch_inf(Complex a, const QBase& base, Real tol) {
  if (!(tol > 0)) throw Error(Errc::param_error, "qpoch_inf: tol must be positive");
  SeriesValue out;
  out.value = 1;
  out.converged = true;
  const Real m = std::abs(a);
  const Real q = base.q();
  const Real one_minus_q = 1 - q;
  if (m == 0) {
    out.terms_used = 1;
    out.tail_bound = 0;
    return out;
  }
  Real qk = 1;
  int k = 0;
  Complex r(1);
  while (m * qk / one_minus_q >= tol / 4) {
    r *= Real(1) - a * qk;
    qk *= q;
    ++k;
  }
  require_finite(r, "qpoch_inf: product overflowed");
  out.value = r;
  out.terms_used = k > 0 ? k : 1;
  out.tail_bound = m * qk / one_minus_q;
  return out;
}

Complex qpoch_multi(std::span<const Complex> params, const QBase& base, int n, Real tol) {
  Complex r(1);
  for (const Complex& a : params) {
    r *= n == kInfinite ? qpoch_inf(a, base, tol).value : qpoch(a, base, n);
  }
  return r;
}

Complex pinf(Complex a, const QBase& base) { return qpoch_inf(a, base).value; }

Complex pinf(std::initializer_list<Complex> params, const QBase& base) {
  Complex r(1);
  for (const Complex& a : params) r *= qpoch_inf(a, base).value;
  return r;
}

Complex pn(std::initializer_list<Complex> params, const QBase& base, int n) {
  Complex r(1);
  for (const Complex& a : params) r *= qpoch(a, base, n);
  return r;
}

SeriesValue phi(const SeriesSpec& spec, Real tol, int max_terms) {
  const Real q = spec.base.q();
  const auto& num = spec.numerator_params;
  const auto& den = spec.denominator_params;

  std::optional<int> last;
  for (const Complex& a : num) {
    auto k = detail::qpower_index(a, q, kTerminatingRelTol, max_terms);
    if (k && (!last || *k < *last)) last = k;
  }
  const int limit = last ? *last : max_terms;
  for (const Complex& b : den) {
    if (detail::qpower_index(b, q, kPoleRelTol, limit)) {
      throw Error(Errc::pole_proximity,
                  "phi: denominator parameter lies on the q^{-k} pole lattice");
    }
  }
  const int r = static_cast<int>(num.size());
  const int s = static_cast<int>(den.size());
  if (!last) {
    if (r == s + 1 && !(std::abs(spec.argument) < 1)) {
      throw Error(Errc::divergent_series, "phi: |argument| >= 1 for a nonterminating r = s+1 series");
    }
    if (r > s + 1) {
      throw Error(Errc::divergent_series, "phi: r > s+1 series diverges unless terminating");
    }
  }
  auto res = detail::phi_sum<Complex, Real>(num, den, spec.argument, q, tol, max_terms, last);
  require_finite(res.value, "phi: series overflowed");
  if (!res.converged) {
    throw Error(Errc::no_convergence,
                "phi: stopping rule not met within " + std::to_string(max_terms) + " terms");
  }
  return SeriesValue{res.value, res.terms, res.tail, true};
}

SeriesValue w_series(Complex a, std::span<const Complex> extras, const QBase& base, Complex t,
                     Real tol, int max_terms) {
  const Real q = base.q();
  const Complex sa = std::sqrt(a);
  SeriesSpec spec;
  spec.base = base;
  spec.argument = t;
  spec.numerator_params = {a, q * sa, -q * sa};
  spec.denominator_params = {sa, -sa};
  for (const Complex& e : extras) {
    spec.numerator_params.push_back(e);
    spec.denominator_params.push_back(q * a / e);
  }
  return phi(spec, tol, max_terms);
}

SeriesValue absorbed_sum(const AbsorbedSeries& spec, const QBase& base, Real tol, int max_terms) {
  const Real q = base.q();
  const Real lq = -base.log_q();
  // An absorbed factor (c q^n;q)_inf can vanish at small n without the series
  // having ended; hold the stopping rule off until |c q^n| < 1/2.
  int min_terms = 3;
  for (const Complex& c : spec.absorbed) {
    const Real m = std::abs(c);
    if (m > 0.5L) {
      min_terms = std::max(min_terms, static_cast<int>(std::ceil(std::log(2 * m) / lq)) + 3);
    }
  }
  detail::SeriesAccumulator<Complex, Real> acc(tol, min_terms);
  Complex coef(1);
  Complex tn(1);
  Real qn = 1;
  const Complex wp_den = spec.well_poised ? Real(1) - spec.wp_param : Complex(1);
  for (int n = 0; n < max_terms; ++n) {
    Complex term = coef * tn;
    if (spec.well_poised) term *= (Real(1) - spec.wp_param * qn * qn) / wp_den;
    if (term != Complex(0)) {
      for (const Complex& c : spec.absorbed) term *= qpoch_inf(c * qn, base, tol).value;
    }
    require_finite(term, "absorbed_sum: term overflowed");
    if (acc.add(term)) {
      return SeriesValue{acc.sum(), acc.terms(), acc.tail(), true};
    }
    Complex ratio = Real(1) / (Real(1) - qn * q);
    for (const Complex& a : spec.numerators) ratio *= Real(1) - a * qn;
    for (const Complex& b : spec.denominators) ratio /= Real(1) - b * qn;
    coef *= ratio;
    tn *= spec.argument;
    qn *= q;
  }
  throw Error(Errc::no_convergence,
              "absorbed_sum: stopping rule not met within " + std::to_string(max_terms) + " terms");
}

}  // namespace qortho
