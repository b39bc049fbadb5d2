#pragma once

// q-shifted factorials and basic hypergeometric series over complex scalars.

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "qortho/error.hpp"

namespace qortho {

using Real = long double;
using Complex = std::complex<Real>;

inline constexpr Real kDefaultTol = 1e-18L;
inline constexpr int kDefaultMaxTerms = 4000;
// Sentinel for n = infinity in qpoch_multi.
inline constexpr int kInfinite = -1;

class QBase {
 public:
  explicit QBase(Real q);

  Real q() const noexcept { return q_; }
  Real log_q() const noexcept { return log_q_; }
  // q^nu = exp(nu ln q) with the real branch of ln q.
  Complex pow(Complex nu) const;
  Real pow(Real nu) const;
  QBase squared() const { return QBase(q_ * q_); }

 private:
  Real q_;
  Real log_q_;
};

struct SeriesValue {
  Complex value{};
  int terms_used = 0;
  Real tail_bound = 0;
  bool converged = false;
};

struct SeriesSpec {
  std::vector<Complex> numerator_params;
  std::vector<Complex> denominator_params;
  Complex argument{};
  QBase base{0.5L};
};

// (a;q)_n
Complex qpoch(Complex a, const QBase& base, int n);

// (a;q)_inf, truncated once |a| q^K / (1 - q) < tol / 4.
SeriesValue qpoch_inf(Complex a, const QBase& base, Real tol = kDefaultTol);

// (a_1, ..., a_r; q)_n; n = kInfinite for the infinite product.
Complex qpoch_multi(std::span<const Complex> params, const QBase& base, int n,
                    Real tol = kDefaultTol);

// Value-only shorthands used throughout the library.
Complex pinf(Complex a, const QBase& base);
Complex pinf(std::initializer_list<Complex> params, const QBase& base);
Complex pn(std::initializer_list<Complex> params, const QBase& base, int n);

SeriesValue phi(const SeriesSpec& spec, Real tol = kDefaultTol,
                int max_terms = kDefaultMaxTerms);

// Very-well-poised series with the (+-q sqrt(a), +-sqrt(a)) insertions.
SeriesValue w_series(Complex a, std::span<const Complex> extras, const QBase& base, Complex t,
                     Real tol = kDefaultTol, int max_terms = kDefaultMaxTerms);

// Sum over n of
//   [(num;q)_n / (q, den;q)_n] * wp(n) * t^n * prod_c (c q^n; q)_inf,
// where wp(n) = (1 - A q^{2n}) / (1 - A) when a well-poised parameter A is set.
// Absorbed parameters fold a (c;q)_inf / (c;q)_n pair into one entire factor,
// which removes pole/zero pairs between a prefactor and the series.
struct AbsorbedSeries {
  std::vector<Complex> numerators;
  std::vector<Complex> denominators;
  std::vector<Complex> absorbed;
  bool well_poised = false;
  Complex wp_param{};
  Complex argument{};
};

SeriesValue absorbed_sum(const AbsorbedSeries& spec, const QBase& base, Real tol = kDefaultTol,
                         int max_terms = kDefaultMaxTerms);

}  // namespace qortho
