#pragma once

// Extended-precision (50 decimal digit software float) evaluation of the
// qcore kernels, for cross-checking the hardware-float results.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "qortho/lattice.hpp"
#include "qortho/qcore.hpp"

namespace qortho::extended {

using Real50 = boost::multiprecision::cpp_bin_float_50;
using Complex50 = boost::multiprecision::cpp_complex_50;

Complex50 qpoch(const Complex50& a, const Real50& q, int n);
Complex50 qpoch_inf(const Complex50& a, const Real50& q, const Real50& tol);

// Same contract as qortho::phi; parameters are widened from the spec.
Complex50 phi(const SeriesSpec& spec, const Real50& tol, int max_terms = kDefaultMaxTerms);

// Exact-input variant for oracle tests that build parameters at 50 digits.
Complex50 phi(const std::vector<Complex50>& num, const std::vector<Complex50>& den,
              const Complex50& t, const Real50& q, const Real50& tol,
              int max_terms = kDefaultMaxTerms);

// u_nu from the balanced 4phi3 pair, every step in 50 digits. Used where the
// hardware-float value is not accurate enough, such as lattice Wronskians
// that cancel by ten orders of magnitude. nu within 1e-8 of a non-negative
// integer is snapped to it, as in u_nu.
Complex50 u_nu_pair(Complex nu, const LatticePoint& point, const QParams& params);

}  // namespace qortho::extended
