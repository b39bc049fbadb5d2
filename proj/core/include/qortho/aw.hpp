#pragma once

// Askey–Wilson polynomials, their weight, and orthogonality constants.

#include "qortho/lattice.hpp"

namespace qortho {

// p_n(x; a, b, c, d) at x = cos(theta); the alpha field of params is unused.
Real aw_poly(int n, Real x, const QParams& params);

// p_n at an arbitrary lattice point (complex x allowed). The terminating
// 4phi3 is summed in 50 digits.
Complex aw_poly_at(int n, const LatticePoint& point, const QParams& params);

// (e^{2it}, e^{-2it})_inf / (a e^{+-it}, b e^{+-it}, c e^{+-it}, d e^{+-it})_inf.
Real aw_weight(Real theta, const QParams& params, Real tol = kDefaultTol);

// Integral over [0, pi] of p_n p_m aw_weight.
Real aw_norm(int n, int m, const QParams& params);

}  // namespace qortho
