#include "ermakov/runner.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "ermakov/emp.hpp"
#include "ermakov/entangle.hpp"
#include "ermakov/magnetic.hpp"
#include "ermakov/measures.hpp"
#include "ermakov/profiles.hpp"
#include "ermakov/quench.hpp"

namespace ermakov {

ParseError::ParseError(int line, const std::string& what)
    : DomainError("line " + std::to_string(line) + ": " + what), line_(line) {}

ValidationError::ValidationError(std::string field, const std::string& what)
    : DomainError(field + ": " + what), field_(std::move(field)) {}

namespace {

const std::vector<std::string> kProfiles{"constant",         "sech",           "quenched_sech",
                                         "lorentz",          "quenched_lorentz", "windowed_lorentz",
                                         "abrupt_drop",      "abrupt_jump"};

bool contains(const std::vector<std::string>& v, std::string_view s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(std::string_view v, int line, const std::string& key) {
  double out = 0;
  const auto* end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end) throw ParseError(line, key + ": not a number: '" + std::string(v) + "'");
  return out;
}

int parse_int(std::string_view v, int line, const std::string& key) {
  int out = 0;
  const auto* end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end) throw ParseError(line, key + ": not an integer: '" + std::string(v) + "'");
  return out;
}

std::vector<double> parse_list(std::string_view v, int line, const std::string& key) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= v.size()) {
    const auto comma = v.find(',', pos);
    const auto item = trim(v.substr(pos, comma == std::string_view::npos ? v.npos : comma - pos));
    if (item.empty()) throw ParseError(line, key + ": empty list item");
    out.push_back(parse_double(item, line, key));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

using Setter = std::function<void(ScenarioConfig&, std::string_view, int)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = [] {
    std::map<std::string, Setter> m;
    auto dbl = [&m](const std::string& key, double ScenarioConfig::*f) {
      m[key] = [key, f](ScenarioConfig& c, std::string_view v, int line) { c.*f = parse_double(v, line, key); };
    };
    auto integer = [&m](const std::string& key, int ScenarioConfig::*f) {
      m[key] = [key, f](ScenarioConfig& c, std::string_view v, int line) { c.*f = parse_int(v, line, key); };
    };
    auto str = [&m](const std::string& key, std::string ScenarioConfig::*f) {
      m[key] = [f](ScenarioConfig& c, std::string_view v, int) { c.*f = std::string(v); };
    };
    str("profile", &ScenarioConfig::profile);
    dbl("a", &ScenarioConfig::a);
    dbl("eps", &ScenarioConfig::eps);
    dbl("alpha", &ScenarioConfig::alpha);
    dbl("omega0", &ScenarioConfig::omega0);
    dbl("omega1", &ScenarioConfig::omega1);
    dbl("t_start", &ScenarioConfig::t_start);
    dbl("t_end", &ScenarioConfig::t_end);
    dbl("t0", &ScenarioConfig::t0);
    integer("n", &ScenarioConfig::n);
    integer("m", &ScenarioConfig::m);
    dbl("omega2_sq", &ScenarioConfig::omega2_sq);
    str("coupling", &ScenarioConfig::coupling);
    dbl("t_min", &ScenarioConfig::t_min);
    dbl("t_max", &ScenarioConfig::t_max);
    integer("steps", &ScenarioConfig::steps);
    m["renyi_alpha"] = [](ScenarioConfig& c, std::string_view v, int line) {
      c.renyi_alpha = parse_list(v, line, "renyi_alpha");
    };
    str("out", &ScenarioConfig::out);
    return m;
  }();
  return table;
}

std::vector<double> grid(const ScenarioConfig& cfg) {
  std::vector<double> t(static_cast<std::size_t>(cfg.steps));
  for (int i = 0; i < cfg.steps; ++i) {
    t[static_cast<std::size_t>(i)] =
        i == cfg.steps - 1 ? cfg.t_max : cfg.t_min + (cfg.t_max - cfg.t_min) * i / (cfg.steps - 1);
  }
  return t;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// Closed form where catalogued, otherwise the integrated oscillator.
EmpSolution solve(const FrequencyProfile& p, const InitialCondition& ic, const ScenarioConfig& cfg) {
  try {
    return closed_form_emp(p, ic);
  } catch (const NoClosedForm&) {
    Window w{cfg.t_min, cfg.t_max};
    if (std::isfinite(ic.t0)) {
      w.lo = std::min(w.lo, ic.t0);
      w.hi = std::max(w.hi, ic.t0);
    }
    return numeric_emp(p, ic, w);
  }
}

EmpSolution solve(const ScenarioConfig& cfg) { return solve(make_profile(cfg), {cfg.t0}, cfg); }

CsvSeries profile_series(const ScenarioConfig& cfg) {
  const auto sol = solve(cfg);
  CsvSeries s{"profile", {"t", "omega2", "b", "bdot", "b2", "tau"}, {}};
  for (double t : grid(cfg)) {
    const auto [b, bd] = sol.at(t);
    s.rows.push_back({t, sol.profile().omega2(t), b, bd, b * b, sol.tau(t)});
  }
  return s;
}

CsvSeries entropy_series(const ScenarioConfig& cfg, const EmpSolution& sol, std::string name) {
  CsvSeries s{std::move(name), {"t", "dSx", "dSp", "dSj"}, {}};
  for (double a : cfg.renyi_alpha) {
    s.header.push_back("dRx_" + label(a));
    s.header.push_back("dRp_" + label(a));
  }
  for (double t : grid(cfg)) {
    const auto d = entropy_increases(sol, t);
    std::vector<double> row{t, d.x, d.p, d.joint};
    for (double a : cfg.renyi_alpha) {
      const auto r = renyi_increase(sol, a, t);
      row.push_back(r.x);
      row.push_back(r.p);
    }
    s.rows.push_back(std::move(row));
  }
  return s;
}

CsvSeries fisher_series(const ScenarioConfig& cfg, const EmpSolution& sol, std::string name) {
  CsvSeries s{std::move(name), {"t", "Fx", "Fp", "FxFp"}, {}};
  for (double t : grid(cfg)) {
    const auto f = fisher(sol, cfg.n, t);
    s.rows.push_back({t, f.x, f.p, f.x * f.p});
  }
  return s;
}

CsvSeries magnetic_series(const ScenarioConfig& cfg) {
  if (!std::isfinite(cfg.t0)) throw ValidationError("t0", "magnetic scenarios need a finite t0");
  const MagneticScenario sc(solve(cfg));
  const auto ts = grid(cfg);
  // Particle launched from (1, 0) at rest, from the first grid time.
  const auto traj = lorentz_integrate(sc, {1.0, 0.0}, {0.0, 0.0}, ts, 1e-12);
  CsvSeries s{"magnetic", {"t", "Omega", "dS2x", "dS2p", "dS2j", "F2x", "F2p", "x1", "x2", "J"}, {}};
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double t = ts[i];
    const auto info = basis_info(cfg.m, cfg.n, sc, t);
    s.rows.push_back({t, sc.rotation_angle(t), info.dS2x, info.dS2p, info.dS2x + info.dS2p, info.F2x,
                      info.F2p, traj.x[i][0], traj.x[i][1],
                      ermakov_lewis(sc.sol(), t, traj.x[i], traj.p[i])});
  }
  return s;
}

CoupledSystem coupled(const ScenarioConfig& cfg, const std::string& which) {
  return which == "k1" ? k1_scenario(cfg.a, cfg.eps, cfg.omega2_sq)
                       : k2_scenario(cfg.a, cfg.eps, cfg.omega2_sq);
}

CsvSeries entangle_series(const ScenarioConfig& cfg, const std::string& which) {
  const auto sys = coupled(cfg, which);
  CsvSeries s{which, {"t", "k", "xi", "S"}, {}};
  for (double a : cfg.renyi_alpha) s.header.push_back("R_" + label(a));
  for (double t : grid(cfg)) {
    const auto g = reduced_params(sys, t);
    std::vector<double> row{t, sys.coupling(t), g.xi, entanglement_entropy(g.xi, 2.0).von_neumann};
    for (double a : cfg.renyi_alpha) row.push_back(entanglement_entropy(g.xi, a).renyi);
    s.rows.push_back(std::move(row));
  }
  return s;
}

CsvSeries decoherence_series(const ScenarioConfig& cfg) {
  const auto sys = coupled(cfg, cfg.coupling);
  CsvSeries s{"decoherence", {"t", "xi", "qd", "cc", "qd_modes"}, {}};
  for (double t : grid(cfg)) {
    const auto g = reduced_params(sys, t);
    const auto c = classicality(g);
    s.rows.push_back({t, g.xi, c.qd, c.cc, decoherence_from_modes(sys, t)});
  }
  return s;
}

CsvSeries quench_series(const ScenarioConfig& cfg, const QuenchSetup& q, std::string name) {
  const auto r = quench_report(q, grid(cfg));
  CsvSeries s{std::move(name), {"s", "b2", "b2_ad", "delta_b2", "late_time", "observable", "entropy_proxy"}, {}};
  for (std::size_t i = 0; i < r.s.size(); ++i) {
    const double x = r.s[i];
    s.rows.push_back({x, r.b2[i], r.b2_ad[i], r.delta[i], late_time(q, x), fermion_observable(q, x),
                      subregion_entropy_proxy(q, x)});
  }
  return s;
}

}  // namespace

const std::vector<std::string>& scenario_ids() {
  static const std::vector<std::string> ids{"profile",  "entropy",     "fisher", "magnetic",
                                            "entangle", "decoherence", "quench"};
  return ids;
}

const std::vector<std::string>& preset_ids() {
  static const std::vector<std::string> ids{"fig1", "fig2", "fig3", "fig4", "fig5", "fig7"};
  return ids;
}

ScenarioConfig preset(std::string_view id) {
  ScenarioConfig c;
  c.scenario = std::string(id);
  if (id == "fig1") {
    c.profile = "sech";
  } else if (id == "fig2") {
    c.profile = "sech";
    c.t0 = -INFINITY;
    c.t_min = -40.0;
    c.t_max = 40.0;
    c.steps = 801;
  } else if (id == "fig3") {
    c.profile = "sech";
    c.t_min = -10.0;
    c.steps = 401;
  } else if (id == "fig4") {
    c.profile = "lorentz";
  } else if (id == "fig5") {
    c.omega2_sq = 0.5;
    c.t_min = -40.0;
    c.t_max = 40.0;
    c.steps = 801;
  } else if (id == "fig7") {
    c.alpha = 9.0;
    c.t_max = 20.0;
    c.steps = 401;
  } else if (id == "quench") {
    c.profile = "quenched_lorentz";
  } else if (id == "magnetic") {
    c.profile = "lorentz";
  } else if (id == "entangle" || id == "decoherence") {
    c.coupling = "k1";
  } else if (!contains(scenario_ids(), id)) {
    throw ValidationError("scenario", "unknown scenario '" + std::string(id) + "'");
  }
  return c;
}

ScenarioConfig parse_config(std::string_view text) { return parse_config(text, ScenarioConfig{}); }

ScenarioConfig parse_config(std::string_view text, ScenarioConfig base) {
  struct Entry {
    std::string key, value;
    int line;
  };
  std::vector<Entry> entries;
  std::map<std::string, int> seen;
  int line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    ++line;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string s = trim(raw);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected 'key = value'");
    Entry e{trim(std::string_view(s).substr(0, eq)), trim(std::string_view(s).substr(eq + 1)), line};
    if (e.key.empty()) throw ParseError(line, "missing key");
    if (e.key != "scenario" && !setters().contains(e.key)) throw ParseError(line, "unknown key '" + e.key + "'");
    if (seen.contains(e.key)) throw ParseError(line, "duplicate key '" + e.key + "'");
    if (e.value.empty() && e.key != "out") throw ParseError(line, e.key + ": missing value");
    seen[e.key] = line;
    entries.push_back(std::move(e));
  }
  for (const auto& e : entries) {
    if (e.key == "scenario") base = preset(e.value);
  }
  for (const auto& e : entries) {
    if (e.key != "scenario") setters().at(e.key)(base, e.value, e.line);
  }
  return base;
}

std::string serialize_config(const ScenarioConfig& c) {
  std::ostringstream os;
  os << "scenario = " << c.scenario << '\n'
     << "profile = " << c.profile << '\n'
     << "a = " << format_double(c.a) << '\n'
     << "eps = " << format_double(c.eps) << '\n'
     << "alpha = " << format_double(c.alpha) << '\n'
     << "omega0 = " << format_double(c.omega0) << '\n'
     << "omega1 = " << format_double(c.omega1) << '\n'
     << "t_start = " << format_double(c.t_start) << '\n'
     << "t_end = " << format_double(c.t_end) << '\n'
     << "t0 = " << format_double(c.t0) << '\n'
     << "n = " << c.n << '\n'
     << "m = " << c.m << '\n'
     << "omega2_sq = " << format_double(c.omega2_sq) << '\n'
     << "coupling = " << c.coupling << '\n'
     << "t_min = " << format_double(c.t_min) << '\n'
     << "t_max = " << format_double(c.t_max) << '\n'
     << "steps = " << c.steps << '\n'
     << "renyi_alpha = ";
  for (std::size_t i = 0; i < c.renyi_alpha.size(); ++i) {
    os << (i ? ", " : "") << format_double(c.renyi_alpha[i]);
  }
  os << '\n' << "out = " << c.out << '\n';
  return os.str();
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void validate(const ScenarioConfig& c) {
  auto need = [](bool ok, const char* field, const char* what) {
    if (!ok) throw ValidationError(field, what);
  };
  need(contains(scenario_ids(), c.scenario) || contains(preset_ids(), c.scenario), "scenario",
       "unknown scenario");
  need(contains(kProfiles, c.profile), "profile", "unknown profile kind");
  need(std::isfinite(c.a) && c.a >= 0, "a", "must be >= 0");
  need(std::isfinite(c.eps) && c.eps > 0, "eps", "must be > 0");
  need(std::isfinite(c.alpha) && c.alpha >= 0, "alpha", "must be >= 0");
  need(std::isfinite(c.omega0) && c.omega0 >= 0, "omega0", "must be >= 0");
  need(std::isfinite(c.omega1) && c.omega1 >= 0, "omega1", "must be >= 0");
  need(std::isfinite(c.t_start), "t_start", "must be finite");
  need(std::isfinite(c.t_end), "t_end", "must be finite");
  need(c.t_start < c.t_end || c.profile != "windowed_lorentz", "t_end", "must exceed t_start");
  need(std::isfinite(c.t0) || c.t0 == -INFINITY, "t0", "must be finite or -inf");
  need(c.n >= 0, "n", "must be >= 0");
  need(c.m >= 0, "m", "must be >= 0");
  need(std::isfinite(c.omega2_sq) && c.omega2_sq > 0, "omega2_sq", "must be > 0");
  need(c.coupling == "k1" || c.coupling == "k2", "coupling", "must be k1 or k2");
  need(std::isfinite(c.t_min), "t_min", "must be finite");
  need(std::isfinite(c.t_max) && c.t_min < c.t_max, "t_max", "must exceed t_min");
  need(c.steps >= 2, "steps", "must be >= 2");
  for (double a : c.renyi_alpha) need(std::isfinite(a) && a > 0 && a != 1.0, "renyi_alpha", "needs α > 0, α != 1");
  if (c.scenario == "quench" || c.scenario == "fig7") {
    need(c.alpha > 0, "alpha", "must be > 0 for quench scenarios");
    need(c.t_min >= 0, "t_min", "the scaled time must be >= 0");
  }
  if (c.t0 == -INFINITY) {
    need(c.profile == "sech" || c.profile == "constant", "t0", "-inf needs a sech or constant profile");
  }
}

FrequencyProfile make_profile(const ScenarioConfig& c) {
  const std::string& p = c.profile;
  if (p == "constant") return Constant{c.omega0};
  if (p == "sech") return SechBump{c.a, c.eps};
  if (p == "quenched_sech") return QuenchedSechBump{c.a, c.eps};
  if (p == "lorentz") return LorentzBell{c.a, c.eps};
  if (p == "quenched_lorentz") return QuenchedLorentz{c.a, c.eps, c.t_start};
  if (p == "windowed_lorentz") return WindowedLorentz{c.a, c.eps, c.t_start, c.t_end};
  if (p == "abrupt_drop") return AbruptDrop{c.alpha};
  if (p == "abrupt_jump") return AbruptJump{c.omega0, c.omega1};
  throw ValidationError("profile", "unknown profile kind '" + p + "'");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string CsvSeries::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
  out += '\n';
  for (const auto& row : rows) {
    if (row.size() != header.size()) throw Error("csv row width differs from the header");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::vector<CsvSeries> run_scenario(const ScenarioConfig& cfg) {
  validate(cfg);
  const std::string& id = cfg.scenario;
  if (id == "profile") return {profile_series(cfg)};
  if (id == "entropy" || id == "fig1" || id == "fig2") return {entropy_series(cfg, solve(cfg), "entropy")};
  if (id == "fisher") return {fisher_series(cfg, solve(cfg), "fisher")};
  if (id == "fig3") {
    const SechBump p{cfg.a, cfg.eps};
    return {fisher_series(cfg, solve(p, {0.0}, cfg), "peak"),
            fisher_series(cfg, solve(p, InitialCondition::minus_infinity(), cfg), "past")};
  }
  if (id == "magnetic" || id == "fig4") return {magnetic_series(cfg)};
  if (id == "entangle") return {entangle_series(cfg, cfg.coupling)};
  if (id == "fig5") return {entangle_series(cfg, "k1"), entangle_series(cfg, "k2")};
  if (id == "decoherence") return {decoherence_series(cfg)};
  if (id == "quench") return {quench_series(cfg, {cfg.alpha, cfg.eps}, "quench")};
  if (id == "fig7") {
    return {quench_series(cfg, QuenchSetup::from_beta(cfg.alpha * cfg.eps, cfg.eps), "beta_" + label(cfg.alpha * cfg.eps)),
            quench_series(cfg, QuenchSetup::from_beta(std::sqrt(15.0), cfg.eps), "beta_sqrt15")};
  }
  throw ValidationError("scenario", "unknown scenario '" + id + "'");
}

std::vector<std::string> write_series(const std::vector<CsvSeries>& series, const std::string& out) {
  std::vector<std::string> paths;
  for (const auto& s : series) {
    std::string path = out;
    if (series.size() > 1) {
      const auto slash = out.find_last_of('/');
      const auto dot = out.find_last_of('.');
      const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
      path = has_ext ? out.substr(0, dot) + "_" + s.name + out.substr(dot) : out + "_" + s.name;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write '" + path + "'");
    f << s.to_csv();
    if (!f) throw IoError("write failed for '" + path + "'");
    paths.push_back(path);
  }
  return paths;
}

std::string concat_series(const std::vector<CsvSeries>& series) {
  if (series.size() == 1) return series.front().to_csv();
  std::string out;
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (i) out += '\n';
    out += "# " + series[i].name + '\n' + series[i].to_csv();
  }
  return out;
}

}  // namespace ermakov
