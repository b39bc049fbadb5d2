#pragma once

// Scalar-generic summation kernel shared by the hardware-float and the
// extended-precision paths. C is a complex type, R its real type.

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

namespace qortho::detail {

template <class C, class R>
struct SeriesResult {
  C value{};
  int terms = 0;
  R tail{};
  bool converged = false;
};

// Stopping rule: three consecutive terms below tol * (1 + |S|), a geometric
// tail estimate below tol * max(1, |S|), and at least min_terms terms.
template <class C, class R>
class SeriesAccumulator {
 public:
  SeriesAccumulator(R tol, int min_terms) : tol_(tol), min_terms_(min_terms) {}

  bool add(const C& term) {
    using std::abs;
    sum_ += term;
    ++terms_;
    const R mag = abs(term);
    const R s = abs(sum_);
    const R one(1);
    if (mag < tol_ * (one + s)) {
      ++small_run_;
    } else {
      small_run_ = 0;
    }
    if (mag == R(0)) {
      tail_ = R(0);
    } else if (prev_mag_ > R(0)) {
      const R r = mag / prev_mag_;
      tail_ = r < one ? mag * r / (one - r) : std::numeric_limits<R>::infinity();
    } else {
      tail_ = std::numeric_limits<R>::infinity();
    }
    prev_mag_ = mag;
    const R scale = s > one ? s : one;
    return small_run_ >= 3 && terms_ >= min_terms_ && tail_ <= tol_ * scale;
  }

  const C& sum() const { return sum_; }
  int terms() const { return terms_; }
  R tail() const { return tail_; }

 private:
  R tol_;
  int min_terms_;
  C sum_{};
  int terms_ = 0;
  int small_run_ = 0;
  R prev_mag_{};
  R tail_ = std::numeric_limits<R>::infinity();
};

// Index k >= 0 with a = q^{-k} (relative tolerance rel_tol), if any.
template <class C, class R>
std::optional<int> qpower_index(const C& a, const R& q, double rel_tol, int max_k) {
  using std::abs;
  using std::log;
  using std::round;
  const R m = abs(a);
  if (!(m > R(0))) return std::nullopt;
  const R kf = round(R(log(m)) / R(-log(q)));
  if (kf < R(0) || kf > R(max_k)) return std::nullopt;
  const int k = static_cast<int>(kf);
  C qk = a;
  for (int i = 0; i < k; ++i) qk *= q;
  if (abs(qk - C(R(1))) <= R(rel_tol)) return k;
  return std::nullopt;
}

// Sum of the r-phi-s series of the standard definition, including the
// ((-1)^n q^{n(n-1)/2})^{1+s-r} factor. last_index, when set, sums exactly
// terms 0..last_index.
template <class C, class R>
SeriesResult<C, R> phi_sum(const std::vector<C>& num, const std::vector<C>& den, const C& t,
                           const R& q, const R& tol, int max_terms,
                           std::optional<int> last_index) {
  const int e = 1 + static_cast<int>(den.size()) - static_cast<int>(num.size());
  const R one(1);
  SeriesResult<C, R> out;
  C term(one);
  R qn = one;  // q^n
  if (last_index) {
    C sum{};
    for (int n = 0; n <= *last_index; ++n) {
      sum += term;
      C ratio = t / C(one - qn * q);
      for (const C& a : num) ratio *= C(one) - a * qn;
      for (const C& b : den) ratio /= C(one) - b * qn;
      if (e > 0) {
        for (int i = 0; i < e; ++i) ratio *= -qn;
      } else {
        for (int i = 0; i < -e; ++i) ratio /= -qn;
      }
      term *= ratio;
      qn *= q;
    }
    out.value = sum;
    out.terms = *last_index + 1;
    out.tail = R(0);
    out.converged = true;
    return out;
  }
  SeriesAccumulator<C, R> acc(tol, 0);
  for (int n = 0; n < max_terms; ++n) {
    if (acc.add(term)) {
      out.value = acc.sum();
      out.terms = acc.terms();
      out.tail = acc.tail();
      out.converged = true;
      return out;
    }
    C ratio = t / C(one - qn * q);
    for (const C& a : num) ratio *= C(one) - a * qn;
    for (const C& b : den) ratio /= C(one) - b * qn;
    if (e > 0) {
      for (int i = 0; i < e; ++i) ratio *= -qn;
    } else {
      for (int i = 0; i < -e; ++i) ratio /= -qn;
    }
    term *= ratio;
    qn *= q;
  }
  out.value = acc.sum();
  out.terms = acc.terms();
  out.tail = acc.tail();
  out.converged = false;
  return out;
}

}  // namespace qortho::detail
