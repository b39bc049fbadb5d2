#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "qortho/lattice.hpp"

namespace qortho::test {

inline Real rel_diff(Complex x, Complex y) {
  const Real s = std::max({std::abs(x), std::abs(y), Real(1e-300L)});
  return std::abs(x - y) / s;
}

inline QParams p0() { return reference_params(); }

// A second real set inside the orthogonality box, with c, d changed.
inline QParams p1() { return QParams(QBase(0.5L), 0.3L, 0.2L, 0.15L, 2.5L, 0.8L); }

// One conjugate pair among b, c.
inline QParams p_complex() {
  return QParams(QBase(0.6L), 0.25L, Complex(0.2L, 0.3L), Complex(0.2L, -0.3L), 1.9L, 0.85L);
}

// Naive truncated product, independent of qpoch_inf's truncation rule.
inline Complex product_oracle(Complex a, Real q) {
  Complex p = 1;
  Complex t = a;
  while (std::abs(t) > 1e-22L) {
    p *= Real(1) - t;
    t *= q;
  }
  return p;
}

}  // namespace qortho::test
