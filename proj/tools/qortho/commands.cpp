#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "output.hpp"
#include "qortho/acceptance.hpp"
#include "qortho/aw.hpp"
#include "qortho/detail/parallel.hpp"
#include "qortho/norms.hpp"
#include "qortho/quad.hpp"
#include "qortho/special.hpp"
#include "qortho/u8.hpp"
#include "qortho/zerofind.hpp"

namespace qortho::cli {
namespace {

using ojson = nlohmann::ordered_json;

Cell num(Real x) { return static_cast<double>(x); }
Cell num(std::int64_t n) { return n; }

unsigned worker_count(const Config& cfg) {
  if (cfg.threads) return cfg.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Fills rows[i] = make(i) in parallel; the row order is the index order.
template <class F>
std::vector<std::vector<Cell>> build_rows(int n, const Config& cfg, F make) {
  std::vector<std::vector<Cell>> rows(static_cast<std::size_t>(std::max(n, 0)));
  detail::parallel_for(n, worker_count(cfg), [&](int i) { rows[i] = make(i); });
  return rows;
}

void emit_table(const Table& t, Format fmt, std::ostream& out) {
  if (fmt == Format::csv) write_csv(out, t);
  else write_json(out, table_json(t));
}

Real rel_diff(Complex x, Complex y) {
  const Real s = std::max(std::abs(x), std::abs(y));
  return s == 0 ? 0 : std::abs(x - y) / s;
}

Real series_tol(const Config& cfg) { return cfg.tol.value_or(kDefaults.series_tol); }

std::vector<Real> nus_or_default(const Config& cfg) {
  return cfg.nu_list.value_or(kDefaults.nu_list);
}

// ---- eval ----

Table eval_u8(const Config& cfg) {
  const QParams p = cfg.params();
  const auto nus = nus_or_default(cfg);
  const auto& th = cfg.theta_grid;
  const int n = static_cast<int>(nus.size() * th.size());
  const bool want_v = cfg.output == "v";
  const Real tol = series_tol(cfg);
  Table t;
  t.header = {"nu", "theta", "x", "re", "im", "representation", "check_representation",
              "check_rel_diff"};
  t.rows = build_rows(n, cfg, [&](int i) -> std::vector<Cell> {
    const Real nu = nus[i / th.size()];
    const Real theta = th[i % th.size()];
    const LatticePoint pt = point_from_theta(theta, p.base);
    const Representation used = cfg.representation == Representation::Auto
                                    ? select_representation(nu, pt, p)
                                    : cfg.representation;
    auto eval = [&](Representation r) {
      return want_v ? v_nu(nu, pt, p, r, tol) : u_nu(nu, pt, p, r, tol);
    };
    const Complex val = eval(used);
    // Independent second route: the first other representation that is
    // admissible here with some margin.
    std::vector<Cell> row{num(nu), num(theta), num(std::cos(theta)), num(val.real()),
                          num(val.imag()), std::string(to_string(used))};
    for (Representation r : {Representation::B_43pair, Representation::C_sym,
                             Representation::A_87, Representation::D_asym}) {
      if (r == used || !admissible(r, nu, pt, p, 0.9L)) continue;
      try {
        const Complex other = eval(r);
        row.push_back(std::string(to_string(r)));
        row.push_back(num(rel_diff(val, other)));
        return row;
      } catch (const Error&) {
      }
    }
    row.push_back(std::monostate{});
    row.push_back(std::monostate{});
    return row;
  });
  return t;
}

Table eval_askey_wilson(const Config& cfg) {
  const QParams p = cfg.params();
  const auto& th = cfg.theta_grid;
  Table t;
  t.header = {"theta"};
  for (int n : cfg.n_list) t.header.push_back("p" + std::to_string(n));
  t.rows = build_rows(static_cast<int>(th.size()), cfg, [&](int i) {
    std::vector<Cell> row{num(th[i])};
    for (int n : cfg.n_list) row.push_back(num(aw_poly(n, std::cos(th[i]), p)));
    return row;
  });
  return t;
}

// nu x theta tables for the one-parameter-family limits of u_nu.
template <class F>
Table eval_nu_theta(const Config& cfg, F value) {
  const QBase base(cfg.q);
  const auto nus = nus_or_default(cfg);
  const auto& th = cfg.theta_grid;
  Table t;
  t.header = {"nu", "theta", "x", "re", "im"};
  t.rows = build_rows(static_cast<int>(nus.size() * th.size()), cfg, [&](int i) {
    const Real nu = nus[i / th.size()];
    const Real theta = th[i % th.size()];
    const Complex v = value(nu, point_from_theta(theta, base), base);
    return std::vector<Cell>{num(nu), num(theta), num(std::cos(theta)), num(v.real()),
                             num(v.imag())};
  });
  return t;
}

Table eval_qbessel(const Config& cfg) {
  const QBase base(cfg.q);
  const auto nus = nus_or_default(cfg);
  const auto& th = cfg.theta_grid;
  const auto& rs = cfg.r_grid;
  const Real tol = series_tol(cfg);
  Table t;
  t.header = {"nu", "theta", "r_re", "r_im", "re", "im"};
  const std::size_t per_nu = th.size() * rs.size();
  t.rows = build_rows(static_cast<int>(nus.size() * per_nu), cfg, [&](int i) {
    const Real nu = nus[i / per_nu];
    const Real theta = th[(i % per_nu) / rs.size()];
    const Complex r = rs[i % rs.size()];
    const Complex v = qbessel_J(nu, point_from_theta(theta, base), r, base, tol);
    return std::vector<Cell>{num(nu), num(theta), num(r.real()), num(r.imag()), num(v.real()),
                             num(v.imag())};
  });
  return t;
}

Table eval_qtrig(const Config& cfg) {
  const QBase base(cfg.q);
  const auto& th = cfg.theta_grid;
  const auto& om = cfg.omega_list;
  const Real tol = series_tol(cfg);
  Table t;
  t.header = {"omega", "theta", "x", "C", "S"};
  t.rows = build_rows(static_cast<int>(om.size() * th.size()), cfg, [&](int i) {
    const Real w = om[i / th.size()];
    const Real theta = th[i % th.size()];
    const Real x = std::cos(theta);
    return std::vector<Cell>{num(w), num(theta), num(x), num(qtrig_C(x, w, base, tol)),
                             num(qtrig_S(x, w, base, tol))};
  });
  return t;
}

ScanOptions scan_options(const Config& cfg) {
  ScanOptions so;
  so.step = cfg.scan_step;
  so.tol = cfg.tol.value_or(kDefaults.scan_tol);
  so.threads = cfg.threads;
  return so;
}

}  // namespace

int cmd_eval(const Config& cfg, Format fmt, std::ostream& out) {
  const Real tol = series_tol(cfg);
  const std::string& f = cfg.family;
  Table t;
  if (f == "u8") {
    t = eval_u8(cfg);
  } else if (f == "askey_wilson") {
    t = eval_askey_wilson(cfg);
  } else if (f == "dual_qhahn") {
    t = eval_nu_theta(cfg, [&](Real nu, const LatticePoint& pt, const QBase& base) {
      return dual_qhahn_u_pair(nu, pt, cfg.a, cfg.b, cfg.c, base, tol);
    });
  } else if (f == "al_salam_chihara") {
    t = eval_nu_theta(cfg, [&](Real nu, const LatticePoint& pt, const QBase& base) {
      return al_salam_chihara_u_pair(nu, pt, cfg.a, cfg.b, base, tol);
    });
  } else if (f == "big_qhermite") {
    t = eval_nu_theta(cfg, [&](Real nu, const LatticePoint& pt, const QBase& base) {
      return big_qhermite_u(nu, pt, cfg.a, base, tol);
    });
  } else if (f == "qhermite") {
    t = eval_nu_theta(cfg, [&](Real nu, const LatticePoint& pt, const QBase& base) {
      return qhermite_H(nu, pt, base, tol);
    });
  } else if (f == "qbessel") {
    t = eval_qbessel(cfg);
  } else if (f == "qtrig") {
    t = eval_qtrig(cfg);
  } else {
    throw ConfigError("config field 'family': unknown family '" + f +
                      "' (expected u8, askey_wilson, dual_qhahn, al_salam_chihara, "
                      "big_qhermite, qhermite, qbessel or qtrig)");
  }
  emit_table(t, fmt, out);
  return 0;
}

int cmd_zeros(const Config& cfg, Format fmt, std::ostream& out) {
  const QParams p = cfg.params();
  const Real beta = cfg.beta.value_or(std::sqrt(cfg.q));
  const int n_zeros = cfg.n_zeros.value_or(kDefaults.n_zeros);
  const auto pts = test_points(beta, n_zeros, p.base);
  const ScanOptions so = scan_options(cfg);

  const auto zeros = find_zeros(p, n_zeros, so);
  Table zt;
  zt.header = {"index", "nu", "bracket_lo", "bracket_hi", "f_residual", "predicted", "deviation",
               "g_sign"};
  for (const auto& z : zeros)
    zt.rows.push_back({num(std::int64_t{z.index}), num(z.nu), num(z.bracket.first),
                       num(z.bracket.second), num(z.f_residual), num(z.predicted),
                       num(z.nu - z.predicted), num(std::int64_t{z.g_sign})});

  Table it;
  it.header = {"k", "nu_k", "nu_k1", "g_zeros_in_gap", "g_zeros"};
  InterlacingReport rep;
  if (zeros.size() >= 2) {
    rep = interlacing_report(p, n_zeros, so);
    for (std::size_t k = 0; k + 1 < rep.nu.size(); ++k) {
      std::string listed;
      std::int64_t count = 0;
      for (Real m : rep.mu) {
        if (m > rep.nu[k] && m < rep.nu[k + 1]) {
          if (count++) listed += ' ';
          listed += format_double(static_cast<double>(m));
        }
      }
      it.rows.push_back({num(std::int64_t(k + 1)), num(rep.nu[k]), num(rep.nu[k + 1]),
                         num(count), listed});
    }
  }

  Table tt;
  tt.header = {"k", "omega", "f"};
  for (std::size_t k = 0; k < pts.size(); ++k)
    tt.rows.push_back({num(std::int64_t(k)), num(pts[k]), num(boundary_f_value(pts[k], p))});

  if (fmt == Format::csv) {
    // Three tables separated by an empty line: zeros, interlacing, test points.
    write_csv(out, zt);
    out << "\r\n";
    write_csv(out, it);
    out << "\r\n";
    write_csv(out, tt);
    return 0;
  }
  ojson doc = ojson::object();
  doc["zeros"] = table_json(zt);
  ojson inter = ojson::object();
  inter["gaps"] = table_json(it);
  inter["interlaced"] = zeros.size() >= 2 ? ojson(rep.interlaced) : ojson(nullptr);
  inter["mu1_below_nu1"] = zeros.size() >= 2 ? ojson(rep.mu1_below_nu1) : ojson(nullptr);
  inter["g_signs_alternate"] = zeros.size() >= 2 ? ojson(rep.g_signs_alternate) : ojson(nullptr);
  doc["interlacing"] = inter;
  doc["beta"] = json_number(static_cast<double>(beta));
  doc["test_points"] = table_json(tt);
  write_json(out, doc);
  return 0;
}

int cmd_verify(const Config& cfg, Format fmt, std::ostream& out, std::ostream& err) {
  const auto names = acceptance_names();
  for (const auto& o : cfg.only) {
    bool known = std::find(names.begin(), names.end(), o) != names.end();
    for (std::size_t i = 0; i < names.size() && !known; ++i) known = o == std::to_string(i + 1);
    if (!known) throw ConfigError("--only: unknown criterion '" + o + "'");
  }
  AcceptanceOptions opt;
  opt.only = cfg.only;
  opt.tol_override = cfg.tol;
  opt.threads = cfg.threads;
  const auto results = run_acceptance(opt);

  Table t;
  t.header = {"id", "name", "passed", "measured", "tolerance", "detail"};
  std::vector<std::string> failed;
  for (const auto& r : results) {
    t.rows.push_back({num(std::int64_t{r.id}), r.name, r.passed, num(r.measured),
                      r.tolerance > 0 ? num(r.tolerance) : Cell{}, r.detail});
    if (!r.passed) failed.push_back(r.name);
  }
  if (fmt == Format::csv) {
    write_csv(out, t);
  } else {
    ojson doc = ojson::object();
    doc["all_passed"] = failed.empty();
    doc["criteria"] = table_json(t);
    doc["failed"] = failed;
    write_json(out, doc);
  }
  if (failed.empty()) return 0;
  err << "verification failed:";
  for (const auto& f : failed) err << ' ' << f;
  err << '\n';
  return 1;
}

int cmd_wronskian(const Config& cfg, Format fmt, std::ostream& out) {
  Config c = cfg;
  if (!c.c_given) c.c = kDefaults.wronskian_c;
  if (!c.d_given) c.d = kDefaults.wronskian_d;
  const QParams p = c.params();
  const auto nus = nus_or_default(c);
  const auto& th = c.theta_grid;
  Table t;
  t.header = {"nu", "theta", "closed_re", "closed_im", "residual"};
  t.rows = build_rows(static_cast<int>(nus.size() * th.size()), c, [&](int i) {
    const Real nu = nus[i / th.size()];
    const Real theta = th[i % th.size()];
    const LatticePoint pt = point_from_theta(theta, p.base);
    const Complex w = wronskian_closed(nu, pt, p);
    return std::vector<Cell>{num(nu), num(theta), num(w.real()), num(w.imag()),
                             num(wronskian_identity_residual(nu, pt, p))};
  });
  emit_table(t, fmt, out);
  return 0;
}

int cmd_norm(const Config& cfg, Format fmt, std::ostream& out) {
  const QParams p = cfg.params();
  std::vector<Real> nus;
  if (cfg.nu_list) {
    nus = *cfg.nu_list;
  } else {
    ScanOptions so = scan_options(cfg);
    so.tol = kDefaults.scan_tol;
    for (const auto& z : find_zeros(p, cfg.n_zeros.value_or(kDefaults.n_zeros), so)) nus.push_back(z.nu);
  }
  QuadOptions qo;
  qo.tol = cfg.tol.value_or(kDefaults.quad_tol);
  qo.threads = cfg.threads;
  Table t;
  t.header = {"nu", "closed", "limit", "quadrature", "closed_rel_diff", "limit_rel_diff", "nodes"};
  // Quadrature is already parallel over nodes; rows run in sequence.
  for (Real nu : nus) {
    const Real closed = norm_sq_closed(nu, p);
    const Real limit = norm_sq_rhs(nu, p);
    const QuadResult quad = ortho_integral(nu, nu, p, qo);
    t.rows.push_back({num(nu), num(closed), num(limit), num(quad.value),
                      num(rel_diff(closed, quad.value)), num(rel_diff(limit, quad.value)),
                      num(std::int64_t{quad.nodes})});
  }
  emit_table(t, fmt, out);
  return 0;
}

}  // namespace qortho::cli
