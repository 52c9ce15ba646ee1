#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spinent {

enum class Experiment { TwoQubit, Spectrum, Fig1, Sweep };

std::string_view to_string(Experiment e);
Experiment experiment_from_string(std::string_view name);

/// Default d/J grid spanning the chaotic onset, the transition and strong
/// localization.
std::vector<double> default_d_grid();

/// Default Ising/hopping ratios of the same-splitting panels.
std::vector<double> default_jz_panels();

/// Fully resolved run configuration. Every field has a value after
/// parse_config; experiment-dependent defaults (n_up = L/2, fig1 panels and
/// field strength) are filled in there.
struct RunConfig {
  Experiment experiment = Experiment::Sweep;

  int length = 12;
  int n_up = 6;
  std::vector<double> jz = {1.0};
  double jxy = 1.0;
  bool edge_defects = true;

  // two-qubit
  double coupling = 1.0;
  double h1 = 0.0;
  double h2 = 0.0;
  bool json = false;

  // disorder
  double d = 0.0;
  std::vector<double> d_grid = default_d_grid();
  int n_realizations = 20;
  std::uint64_t seed = 0;

  // analysis
  double edge_trim = 0.1;
  double bin_width = 0.05;
  std::string pairs = "all";

  int workers = 1;
  std::string output = ".";

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Thrown by parse_config for --help; what() is the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse command-line arguments (without the program name). The first
/// positional token selects the experiment; `--config FILE` loads flat
/// `key = value` lines first and explicit flags override them. Throws
/// UsageError naming the offending token.
RunConfig parse_config(const std::vector<std::string>& args);

/// Parse config-file text on its own; the experiment must be given by the
/// `experiment` key.
RunConfig parse_config_text(std::string_view text);

/// Every key of `config` as `key = value` lines, readable by parse_config_text.
std::string serialize_config(const RunConfig& config);

}  // namespace spinent
