#pragma once

// Composite Gauss–Legendre quadrature over theta in (0, pi) and the
// orthogonality integrals built on it.

#include <functional>
#include <vector>

#include "qortho/lattice.hpp"

namespace qortho {

struct QuadOptions {
  Real tol = 1e-12L;
  // Number of panel doublings after the initial 4 panels (64 nodes).
  int max_depth = 6;
  // Magnitude the tolerance is measured against when the integral is near 0.
  Real scale = 1;
  // 0 uses the process default set by set_default_threads().
  unsigned threads = 0;
};

struct QuadResult {
  Real value = 0;
  Real err_est = 0;
  int nodes = 0;
};

struct QuadVectorResult {
  std::vector<Real> values;
  Real err_est = 0;
  int nodes = 0;
};

void set_default_threads(unsigned n);
unsigned default_threads();

// (e^{+-2it})_inf / (a e^{+-it}, b e^{+-it}, c e^{+-it}, q e^{+-it}/d,
//                    alpha e^{+-it}, q e^{+-it}/alpha)_inf
// The weight for v_mu v_nu.
Real weight_8phi7(Real theta, const QParams& params, Real tol = kDefaultTol);

// weight_8phi7 * |(q e^{it}/d)_inf|^4, the weight for u_mu u_nu.
Real weight_u(Real theta, const QParams& params, Real tol = kDefaultTol);

QuadResult integrate(const std::function<Real(Real)>& f, const QuadOptions& opt = {});

// Integrates dim functions at once; f fills out[0..dim) at theta. Converged
// when every component is.
QuadVectorResult integrate_vector(const std::function<void(Real, Real*)>& f, int dim,
                                  const QuadOptions& opt = {});

// Integral over (0, pi) of v_mu v_nu weight_8phi7.
QuadResult ortho_integral(Real mu, Real nu, const QParams& params, const QuadOptions& opt = {});

// Symmetric matrix of ortho_integral over nus. Weight and v values are
// computed once per node and shared by all pairs.
std::vector<std::vector<Real>> gram_matrix(const std::vector<Real>& nus, const QParams& params,
                                           const QuadOptions& opt = {});

// Generic Gram matrix: fns[i](theta) real, integrated against weight.
// Entry (i, j) converges relative to max(|G_ij|, sqrt(|G_ii G_jj|), scale).
std::vector<std::vector<Real>> gram_matrix(const std::vector<std::function<Real(Real)>>& fns,
                                           const std::function<Real(Real)>& weight,
                                           const QuadOptions& opt = {});

// Sum in pairwise order; the result depends only on the input order.
Real pairwise_sum(const Real* x, std::size_t n);

}  // namespace qortho
