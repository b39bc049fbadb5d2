#include "config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace qortho::cli {
namespace {

using json = nlohmann::json;

[[noreturn]] void field_error(const std::string& path, const std::string& msg) {
  throw ConfigError("config field '" + path + "': " + msg);
}

Real get_real(const json& v, const std::string& path) {
  if (!v.is_number()) field_error(path, "expected a number");
  const Real x = v.get<double>();
  if (!std::isfinite(x)) field_error(path, "not finite");
  return x;
}

int get_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) field_error(path, "expected an integer");
  return v.get<int>();
}

std::string get_string(const json& v, const std::string& path) {
  if (!v.is_string()) field_error(path, "expected a string");
  return v.get<std::string>();
}

// A number, or [re, im].
Complex get_complex(const json& v, const std::string& path) {
  if (v.is_number()) return {get_real(v, path), 0};
  if (v.is_array() && v.size() == 2)
    return {get_real(v[0], path + "[0]"), get_real(v[1], path + "[1]")};
  field_error(path, "expected a number or a [re, im] pair");
}

std::vector<Real> get_real_list(const json& v, const std::string& path) {
  if (!v.is_array()) field_error(path, "expected an array of numbers");
  std::vector<Real> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(get_real(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

// Either an explicit list or {"start", "stop", "count"} with both ends included.
std::vector<Real> get_grid(const json& v, const std::string& path) {
  if (v.is_array()) return get_real_list(v, path);
  if (!v.is_object()) field_error(path, "expected an array or {start, stop, count}");
  for (const char* k : {"start", "stop", "count"})
    if (!v.contains(k)) field_error(path + "." + k, "missing");
  const Real lo = get_real(v["start"], path + ".start");
  const Real hi = get_real(v["stop"], path + ".stop");
  const int n = get_int(v["count"], path + ".count");
  if (n < 0) field_error(path + ".count", "must be non-negative");
  std::vector<Real> out;
  for (int k = 0; k < n; ++k) out.push_back(n == 1 ? lo : lo + (hi - lo) * k / (n - 1));
  return out;
}

void check_known(const json& obj, const std::set<std::string>& known, const std::string& prefix) {
  for (const auto& [k, _] : obj.items())
    if (!known.count(k)) field_error(prefix + k, "unknown field");
}

// 1-based line and column of a byte offset.
std::string locate(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

QParams Config::params() const { return QParams(QBase(q), a, b, c, d, alpha); }

Representation parse_representation(const std::string& s) {
  if (s == "auto" || s == "Auto") return Representation::Auto;
  if (s == "A" || s == to_string(Representation::A_87)) return Representation::A_87;
  if (s == "B" || s == to_string(Representation::B_43pair)) return Representation::B_43pair;
  if (s == "C" || s == to_string(Representation::C_sym)) return Representation::C_sym;
  if (s == "D" || s == to_string(Representation::D_asym)) return Representation::D_asym;
  throw ConfigError("unknown representation '" + s + "' (expected auto, A, B, C or D)");
}

Config parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config is not valid JSON at " + locate(text, e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  check_known(doc,
              {"family", "params", "nu_list", "n_list", "theta_grid", "r_grid", "omega_list",
               "output", "representation", "tol", "n_zeros", "beta", "scan_step", "format",
               "threads", "only"},
              "");

  Config cfg;
  if (doc.contains("family")) cfg.family = get_string(doc["family"], "family");
  if (doc.contains("params")) {
    const json& p = doc["params"];
    if (!p.is_object()) field_error("params", "expected an object");
    check_known(p, {"q", "a", "b", "c", "d", "alpha"}, "params.");
    if (p.contains("q")) cfg.q = get_real(p["q"], "params.q");
    if (p.contains("a")) cfg.a = get_complex(p["a"], "params.a");
    if (p.contains("b")) cfg.b = get_complex(p["b"], "params.b");
    if (p.contains("c")) {
      cfg.c = get_complex(p["c"], "params.c");
      cfg.c_given = true;
    }
    if (p.contains("d")) {
      cfg.d = get_complex(p["d"], "params.d");
      cfg.d_given = true;
    }
    if (p.contains("alpha")) cfg.alpha = get_complex(p["alpha"], "params.alpha");
  }
  if (!(cfg.q > 0 && cfg.q < 1)) field_error("params.q", "must lie in (0, 1)");
  if (cfg.alpha == Complex(0)) field_error("params.alpha", "must be nonzero");
  if (cfg.d == Complex(0)) field_error("params.d", "must be nonzero");

  if (doc.contains("nu_list")) cfg.nu_list = get_real_list(doc["nu_list"], "nu_list");
  if (doc.contains("n_list")) {
    const json& v = doc["n_list"];
    if (!v.is_array()) field_error("n_list", "expected an array of integers");
    cfg.n_list.clear();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const int n = get_int(v[i], "n_list[" + std::to_string(i) + "]");
      if (n < 0) field_error("n_list[" + std::to_string(i) + "]", "must be non-negative");
      cfg.n_list.push_back(n);
    }
  }
  if (doc.contains("theta_grid")) {
    cfg.theta_grid = get_grid(doc["theta_grid"], "theta_grid");
  } else {
    const int n = kDefaults.theta_points;
    for (int k = 0; k < n; ++k) cfg.theta_grid.push_back((k + 0.5L) * std::numbers::pi_v<Real> / n);
  }
  if (doc.contains("r_grid")) {
    const json& v = doc["r_grid"];
    if (!v.is_array()) field_error("r_grid", "expected an array");
    for (std::size_t i = 0; i < v.size(); ++i)
      cfg.r_grid.push_back(get_complex(v[i], "r_grid[" + std::to_string(i) + "]"));
  } else {
    for (Real r : kDefaults.r_grid) cfg.r_grid.emplace_back(r, 0);
  }
  if (doc.contains("omega_list")) cfg.omega_list = get_real_list(doc["omega_list"], "omega_list");
  if (doc.contains("output")) {
    cfg.output = get_string(doc["output"], "output");
    if (cfg.output != "u" && cfg.output != "v") field_error("output", "expected \"u\" or \"v\"");
  }
  if (doc.contains("representation")) {
    try {
      cfg.representation = parse_representation(get_string(doc["representation"], "representation"));
    } catch (const ConfigError& e) {
      field_error("representation", e.what());
    }
  }
  if (doc.contains("tol")) {
    const Real t = get_real(doc["tol"], "tol");
    if (!(t > 0)) field_error("tol", "must be positive");
    cfg.tol = t;
  }
  if (doc.contains("n_zeros")) {
    cfg.n_zeros = get_int(doc["n_zeros"], "n_zeros");
    if (*cfg.n_zeros < 0) field_error("n_zeros", "must be non-negative");
  }
  if (doc.contains("beta")) cfg.beta = get_real(doc["beta"], "beta");
  if (doc.contains("scan_step")) {
    cfg.scan_step = get_real(doc["scan_step"], "scan_step");
    if (!(cfg.scan_step > 0)) field_error("scan_step", "must be positive");
  }
  if (doc.contains("format")) {
    const std::string f = get_string(doc["format"], "format");
    if (f == "csv") cfg.format = Format::csv;
    else if (f == "json") cfg.format = Format::json;
    else field_error("format", "expected \"csv\" or \"json\"");
  }
  if (doc.contains("threads")) {
    const int t = get_int(doc["threads"], "threads");
    if (t < 0) field_error("threads", "must be non-negative");
    cfg.threads = static_cast<unsigned>(t);
  }
  if (doc.contains("only")) {
    const json& v = doc["only"];
    if (v.is_string()) {
      cfg.only.push_back(v.get<std::string>());
    } else if (v.is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i)
        cfg.only.push_back(get_string(v[i], "only[" + std::to_string(i) + "]"));
    } else {
      field_error("only", "expected a string or an array of strings");
    }
  }
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace qortho::cli
