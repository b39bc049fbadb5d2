#include "qortho/quad.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <numbers>

#include "qortho/detail/parallel.hpp"
#include "qortho/u8.hpp"

namespace qortho {

namespace {

constexpr int kPanelPoints = 16;
constexpr int kInitialPanels = 4;

std::atomic<unsigned> g_threads{1};

struct Rule {
  std::array<Real, kPanelPoints> x{};
  std::array<Real, kPanelPoints> w{};
};

// Nodes and weights on [-1, 1] by Newton iteration on P_16.
Rule make_rule() {
  Rule r;
  const int n = kPanelPoints;
  const Real pi = std::numbers::pi_v<Real>;
  for (int i = 0; i < n; ++i) {
    Real x = std::cos(pi * (i + Real(0.75)) / (n + Real(0.5)));
    Real dp = 0;
    for (int it = 0; it < 100; ++it) {
      Real p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const Real dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-19L) break;
    }
    r.x[i] = x;
    r.w[i] = 2 / ((1 - x * x) * dp * dp);
  }
  return r;
}

const Rule& rule() {
  static const Rule r = make_rule();
  return r;
}

// One composite estimate with `panels` equal panels over (0, pi).
std::vector<Real> estimate(const std::function<void(Real, Real*)>& f, int dim, int panels,
                           unsigned threads) {
  const Rule& r = rule();
  const Real pi = std::numbers::pi_v<Real>;
  const Real h = pi / panels;
  const int n = panels * kPanelPoints;
  std::vector<Real> vals(static_cast<std::size_t>(n) * dim);
  detail::parallel_for(n, threads, [&](int i) {
    const int p = i / kPanelPoints, k = i % kPanelPoints;
    const Real theta = h * (p + (r.x[k] + 1) / 2);
    Real* out = &vals[static_cast<std::size_t>(i) * dim];
    f(theta, out);
    for (int j = 0; j < dim; ++j) out[j] *= r.w[k] * h / 2;
  });
  std::vector<Real> res(dim), col(n);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < n; ++i) col[i] = vals[static_cast<std::size_t>(i) * dim + j];
    res[j] = pairwise_sum(col.data(), col.size());
  }
  return res;
}

unsigned resolve_threads(unsigned t) { return t == 0 ? default_threads() : t; }

Complex pair(Complex p, Complex e, const QBase& B, Real tol) {
  return qpoch_inf(p * e, B, tol).value * qpoch_inf(p / e, B, tol).value;
}

}  // namespace

void set_default_threads(unsigned n) { g_threads = std::max(1u, n); }
unsigned default_threads() { return g_threads; }

Real pairwise_sum(const Real* x, std::size_t n) {
  if (n <= 8) {
    Real s = 0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t m = n / 2;
  return pairwise_sum(x, m) + pairwise_sum(x + m, n - m);
}

Real weight_8phi7(Real theta, const QParams& s, Real tol) {
  if (!(theta > 0 && theta < std::numbers::pi_v<Real>)) {
    throw Error(Errc::pole_proximity, "weight_8phi7: theta must lie in (0, pi)");
  }
  const QBase& B = s.base;
  const Real q = s.q();
  const Complex e = std::polar(Real(1), theta);
  const Complex num = pair(Complex(1), e * e, B, tol);
  const Complex den = pair(s.a, e, B, tol) * pair(s.b, e, B, tol) * pair(s.c, e, B, tol) *
                      pair(q / s.d, e, B, tol) * pair(s.alpha, e, B, tol) *
                      pair(q / s.alpha, e, B, tol);
  if (std::abs(den) < 1e-300L) throw Error(Errc::pole_proximity, "weight_8phi7: pole");
  return (num / den).real();
}

Real weight_u(Real theta, const QParams& s, Real tol) {
  const Complex e = std::polar(Real(1), theta);
  // pair() is already |(q e^{it}/d)_inf|^2 for real d.
  return weight_8phi7(theta, s, tol) * std::norm(pair(s.q() / s.d, e, s.base, tol));
}

namespace {

// Doubling loop shared by the vector integrators. Component j has converged
// once its change is within tol * magnitude(cur, j).
QuadVectorResult integrate_until(const std::function<void(Real, Real*)>& f, int dim,
                                 const QuadOptions& opt,
                                 const std::function<Real(const std::vector<Real>&, int)>& magnitude) {
  const unsigned threads = resolve_threads(opt.threads);
  int panels = kInitialPanels;
  std::vector<Real> prev = estimate(f, dim, panels, threads);
  Real err = 0;
  for (int depth = 1; depth <= opt.max_depth; ++depth) {
    panels *= 2;
    std::vector<Real> cur = estimate(f, dim, panels, threads);
    err = 0;
    bool ok = true;
    for (int j = 0; j < dim; ++j) {
      const Real d = std::abs(cur[j] - prev[j]);
      err = std::max(err, d);
      if (!(d <= opt.tol * magnitude(cur, j))) ok = false;
    }
    prev = std::move(cur);
    if (ok) return QuadVectorResult{std::move(prev), err, panels * kPanelPoints};
  }
  throw Error(Errc::no_convergence, "integrate: tolerance not met at maximum depth");
}

}  // namespace

QuadVectorResult integrate_vector(const std::function<void(Real, Real*)>& f, int dim,
                                  const QuadOptions& opt) {
  return integrate_until(f, dim, opt, [&](const std::vector<Real>& cur, int j) {
    return std::max(std::abs(cur[j]), opt.scale);
  });
}

QuadResult integrate(const std::function<Real(Real)>& f, const QuadOptions& opt) {
  auto r = integrate_vector([&](Real t, Real* out) { out[0] = f(t); }, 1, opt);
  return QuadResult{r.values[0], r.err_est, r.nodes};
}

std::vector<std::vector<Real>> gram_matrix(const std::vector<std::function<Real(Real)>>& fns,
                                           const std::function<Real(Real)>& weight,
                                           const QuadOptions& opt) {
  const int m = static_cast<int>(fns.size());
  const int dim = m * (m + 1) / 2;
  std::vector<std::vector<Real>> g(m, std::vector<Real>(m, 0));
  if (m == 0) return g;
  // Entry (i, j) sits at index = row offset + (j - i) in the packed upper triangle.
  std::vector<int> row_of(dim), col_of(dim), diag_index(m);
  for (int i = 0, k = 0; i < m; ++i) {
    diag_index[i] = k;
    for (int j = i; j < m; ++j, ++k) {
      row_of[k] = i;
      col_of[k] = j;
    }
  }
  auto r = integrate_until(
      [&](Real t, Real* out) {
        const Real w = weight(t);
        std::vector<Real> v(m);
        for (int i = 0; i < m; ++i) v[i] = fns[i](t);
        int k = 0;
        for (int i = 0; i < m; ++i)
          for (int j = i; j < m; ++j) out[k++] = w * v[i] * v[j];
      },
      dim, opt,
      // Off-diagonal entries are judged against sqrt(G_ii G_jj), as in the
      // orthogonality checks; a true zero has no scale of its own.
      [&](const std::vector<Real>& cur, int k) {
        const Real gii = std::abs(cur[diag_index[row_of[k]]]);
        const Real gjj = std::abs(cur[diag_index[col_of[k]]]);
        return std::max({std::abs(cur[k]), std::sqrt(gii * gjj), opt.scale});
      });
  int k = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) g[i][j] = g[j][i] = r.values[k++];
  return g;
}

std::vector<std::vector<Real>> gram_matrix(const std::vector<Real>& nus, const QParams& s,
                                           const QuadOptions& opt) {
  s.check_orthogonality();
  std::vector<std::function<Real(Real)>> fns;
  for (Real nu : nus) {
    fns.emplace_back([nu, &s](Real t) { return v_nu(nu, point_from_theta(t, s.base), s).real(); });
  }
  return gram_matrix(fns, [&s](Real t) { return weight_8phi7(t, s); }, opt);
}

QuadResult ortho_integral(Real mu, Real nu, const QParams& s, const QuadOptions& opt) {
  s.check_orthogonality();
  auto r = integrate_vector(
      [&](Real t, Real* out) {
        const LatticePoint p = point_from_theta(t, s.base);
        out[0] = weight_8phi7(t, s) * (v_nu(mu, p, s) * v_nu(nu, p, s)).real();
      },
      1, opt);
  return QuadResult{r.values[0], r.err_est, r.nodes};
}

}  // namespace qortho
