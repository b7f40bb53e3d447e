#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ermakov/error.hpp"
#include "ermakov/profile.hpp"

namespace ermakov {

class ParseError : public DomainError {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

class ValidationError : public DomainError {
 public:
  ValidationError(std::string field, const std::string& what);
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Everything a scenario run needs. `scenario` is one of the analysis kinds
/// (profile, entropy, fisher, magnetic, entangle, decoherence, quench) or a
/// figure preset (fig1 ... fig5, fig7).
///
/// Profile kinds: constant, sech, quenched_sech, lorentz, quenched_lorentz,
/// windowed_lorentz, abrupt_drop, abrupt_jump. t_start/t_end are the junction
/// times of the composite profiles; t0 is the preparation time (may be -inf).
struct ScenarioConfig {
  std::string scenario = "entropy";
  std::string profile = "sech";
  double a = 1.0;
  double eps = 1.0;
  double alpha = 1.0;
  double omega0 = 1.0;
  double omega1 = 0.5;
  double t_start = 0.0;
  double t_end = 1.0;
  double t0 = 0.0;
  int n = 0;
  int m = 0;
  double omega2_sq = 0.5;
  std::string coupling = "k1";
  double t_min = 0.0;
  double t_max = 10.0;
  int steps = 201;
  std::vector<double> renyi_alpha{2.0};
  std::string out;

  bool operator==(const ScenarioConfig&) const = default;
};

const std::vector<std::string>& scenario_ids();
const std::vector<std::string>& preset_ids();

/// Defaults for a scenario id; figure ids bind the caption parameters.
ScenarioConfig preset(std::string_view id);

/// `key = value` lines, `#` starts a comment. A `scenario` line resets the
/// config to that scenario's preset before the other keys are applied, in
/// whatever order they appear. Unknown keys and duplicates are rejected.
ScenarioConfig parse_config(std::string_view text);
/// Applies the lines of `text` on top of `base`.
ScenarioConfig parse_config(std::string_view text, ScenarioConfig base);
std::string serialize_config(const ScenarioConfig& cfg);
ScenarioConfig load_config(const std::string& path);

/// Throws ValidationError naming the offending field.
void validate(const ScenarioConfig& cfg);
FrequencyProfile make_profile(const ScenarioConfig& cfg);

struct CsvSeries {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Header line plus rows, values as %.17g, LF line endings.
  std::string to_csv() const;
};

std::string format_double(double v);

std::vector<CsvSeries> run_scenario(const ScenarioConfig& cfg);

/// One series goes to `out`; several go to `out` with `_<name>` inserted
/// before the extension. Returns the paths written.
std::vector<std::string> write_series(const std::vector<CsvSeries>& series, const std::string& out);
/// All series on one stream, separated by a blank line and a `# name` line.
std::string concat_series(const std::vector<CsvSeries>& series);

}  // namespace ermakov
