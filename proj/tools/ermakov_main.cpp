#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ermakov/runner.hpp"

using namespace ermakov;

namespace {

struct Overrides {
  std::string config;
  std::string out;
  std::string profile;
  std::string coupling;
  std::optional<double> a, eps, alpha, t0, tmin, tmax, omega2_sq;
  std::optional<int> n, m, steps;
  std::vector<double> renyi_alpha;
};

void add_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "key = value config file");
  cmd->add_option("--out", o.out, "output CSV path (stdout when omitted)");
  cmd->add_option("--profile", o.profile, "profile kind");
  cmd->add_option("--coupling", o.coupling, "k1 or k2");
  cmd->add_option("--a", o.a);
  cmd->add_option("--eps", o.eps);
  cmd->add_option("--alpha", o.alpha);
  cmd->add_option("--n", o.n);
  cmd->add_option("--m", o.m);
  cmd->add_option("--t0", o.t0, "preparation time (-inf allowed for sech)");
  cmd->add_option("--tmin", o.tmin, "grid start");
  cmd->add_option("--tmax", o.tmax, "grid end");
  cmd->add_option("--steps", o.steps, "grid points");
  cmd->add_option("--omega2-sq", o.omega2_sq);
  cmd->add_option("--renyi-alpha", o.renyi_alpha, "Renyi orders")->delimiter(',');
}

ScenarioConfig build(const std::string& scenario, const Overrides& o) {
  ScenarioConfig c = preset(scenario);
  if (!o.config.empty()) {
    std::ifstream in(o.config, std::ios::binary);
    if (!in) throw IoError("cannot read config '" + o.config + "'");
    std::ostringstream text;
    text << in.rdbuf();
    c = parse_config(text.str(), c);
    if (c.scenario != scenario) {
      throw ValidationError("scenario", "config names '" + c.scenario + "', command runs '" + scenario + "'");
    }
  }
  if (!o.out.empty()) c.out = o.out;
  if (!o.profile.empty()) c.profile = o.profile;
  if (!o.coupling.empty()) c.coupling = o.coupling;
  if (o.a) c.a = *o.a;
  if (o.eps) c.eps = *o.eps;
  if (o.alpha) c.alpha = *o.alpha;
  if (o.n) c.n = *o.n;
  if (o.m) c.m = *o.m;
  if (o.t0) c.t0 = *o.t0;
  if (o.tmin) c.t_min = *o.tmin;
  if (o.tmax) c.t_max = *o.tmax;
  if (o.steps) c.steps = *o.steps;
  if (o.omega2_sq) c.omega2_sq = *o.omega2_sq;
  if (!o.renyi_alpha.empty()) c.renyi_alpha = o.renyi_alpha;
  return c;
}

int run(const ScenarioConfig& cfg) {
  const auto series = run_scenario(cfg);
  if (cfg.out.empty()) {
    std::cout << concat_series(series);
  } else {
    for (const auto& p : write_series(series, cfg.out)) std::cerr << "wrote " << p << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-dependent oscillator entropies, Fisher information, entanglement and quench series"};
  app.require_subcommand(1);

  Overrides o;
  std::string figure;
  std::string chosen;
  for (const auto& id : scenario_ids()) {
    auto* cmd = app.add_subcommand(id, "run the " + id + " scenario");
    add_flags(cmd, o);
    cmd->callback([&chosen, id] { chosen = id; });
  }
  auto* rep = app.add_subcommand("reproduce", "reproduce a figure preset");
  rep->add_option("figure", figure, "fig1 ... fig5, fig7")->required()->check(CLI::IsMember(preset_ids()));
  add_flags(rep, o);
  rep->callback([&chosen, &figure] { chosen = figure; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return run(build(chosen, o));
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  }
}
