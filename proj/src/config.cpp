#include "spinent/config.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "spinent/basis.hpp"
#include "spinent/error.hpp"

namespace spinent {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view expected) {
  throw UsageError(fmt::format("invalid value '{}' for {}: expected {}", value, key, expected));
}

template <typename Int>
Int to_integer(std::string_view key, std::string_view value) {
  const auto v = trim(value);
  Int out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size()) bad_value(key, value, "an integer");
  return out;
}

double to_real(std::string_view key, std::string_view value) {
  const auto v = trim(value);
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out)) {
    bad_value(key, value, "a finite number");
  }
  return out;
}

std::vector<double> to_real_list(std::string_view key, std::string_view value) {
  std::vector<double> out;
  std::string_view rest = value;
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(to_real(key, rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

bool to_bool(std::string_view key, std::string_view value) {
  const auto v = trim(value);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  bad_value(key, value, "true or false");
}

std::string real_text(double v) { return fmt::format("{:.17g}", v); }

std::string list_text(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += real_text(values[i]);
  }
  return out;
}

struct Key {
  std::string name;
  std::string help;
  std::function<void(RunConfig&, std::string_view)> set;
  std::function<std::string(const RunConfig&)> get;
};

const std::vector<Key>& keys() {
  static const std::vector<Key> table = {
      {"experiment", "two-qubit, spectrum, fig1 or sweep",
       [](RunConfig& c, std::string_view v) { c.experiment = experiment_from_string(trim(v)); },
       [](const RunConfig& c) { return std::string(to_string(c.experiment)); }},
      {"L", "number of sites", [](RunConfig& c, std::string_view v) { c.length = to_integer<int>("L", v); },
       [](const RunConfig& c) { return std::to_string(c.length); }},
      {"n-up", "number of up spins (default L/2)",
       [](RunConfig& c, std::string_view v) { c.n_up = to_integer<int>("n-up", v); },
       [](const RunConfig& c) { return std::to_string(c.n_up); }},
      {"Jz", "Ising coupling; a comma list of panels for fig1",
       [](RunConfig& c, std::string_view v) { c.jz = to_real_list("Jz", v); },
       [](const RunConfig& c) { return list_text(c.jz); }},
      {"Jxy", "hopping coupling", [](RunConfig& c, std::string_view v) { c.jxy = to_real("Jxy", v); },
       [](const RunConfig& c) { return real_text(c.jxy); }},
      {"edge-defects", "apply the -Jz/2 edge terms",
       [](RunConfig& c, std::string_view v) { c.edge_defects = to_bool("edge-defects", v); },
       [](const RunConfig& c) { return std::string(c.edge_defects ? "true" : "false"); }},
      {"J", "two-site isotropic coupling", [](RunConfig& c, std::string_view v) { c.coupling = to_real("J", v); },
       [](const RunConfig& c) { return real_text(c.coupling); }},
      {"h1", "splitting of site 1", [](RunConfig& c, std::string_view v) { c.h1 = to_real("h1", v); },
       [](const RunConfig& c) { return real_text(c.h1); }},
      {"h2", "splitting of site 2", [](RunConfig& c, std::string_view v) { c.h2 = to_real("h2", v); },
       [](const RunConfig& c) { return real_text(c.h2); }},
      {"json", "also print a JSON record", [](RunConfig& c, std::string_view v) { c.json = to_bool("json", v); },
       [](const RunConfig& c) { return std::string(c.json ? "true" : "false"); }},
      {"d", "field strength (spectrum: disorder std; fig1: pair splitting)",
       [](RunConfig& c, std::string_view v) { c.d = to_real("d", v); },
       [](const RunConfig& c) { return real_text(c.d); }},
      {"d-grid", "comma-separated disorder strengths d/J",
       [](RunConfig& c, std::string_view v) { c.d_grid = to_real_list("d-grid", v); },
       [](const RunConfig& c) { return list_text(c.d_grid); }},
      {"n-realizations", "disorder realizations per gridpoint",
       [](RunConfig& c, std::string_view v) { c.n_realizations = to_integer<int>("n-realizations", v); },
       [](const RunConfig& c) { return std::to_string(c.n_realizations); }},
      {"seed", "master seed", [](RunConfig& c, std::string_view v) { c.seed = to_integer<std::uint64_t>("seed", v); },
       [](const RunConfig& c) { return std::to_string(c.seed); }},
      {"edge-trim", "fraction of levels dropped at each spectral edge",
       [](RunConfig& c, std::string_view v) { c.edge_trim = to_real("edge-trim", v); },
       [](const RunConfig& c) { return real_text(c.edge_trim); }},
      {"bin-width", "spacing histogram bin width",
       [](RunConfig& c, std::string_view v) { c.bin_width = to_real("bin-width", v); },
       [](const RunConfig& c) { return real_text(c.bin_width); }},
      {"pairs", "all or reference", [](RunConfig& c, std::string_view v) { c.pairs = std::string(trim(v)); },
       [](const RunConfig& c) { return c.pairs; }},
      {"workers", "worker threads",
       [](RunConfig& c, std::string_view v) { c.workers = to_integer<int>("workers", v); },
       [](const RunConfig& c) { return std::to_string(c.workers); }},
      {"output", "output directory", [](RunConfig& c, std::string_view v) { c.output = std::string(trim(v)); },
       [](const RunConfig& c) { return c.output; }},
  };
  return table;
}

const Key& find_key(std::string_view name) {
  for (const auto& k : keys()) {
    if (k.name == name) return k;
  }
  throw UsageError(fmt::format("unknown key '{}'", name));
}

// Flags each experiment accepts on the command line.
const std::map<Experiment, std::vector<std::string>>& flags_by_experiment() {
  static const std::map<Experiment, std::vector<std::string>> m = {
      {Experiment::TwoQubit, {"J", "h1", "h2"}},
      {Experiment::Spectrum,
       {"L", "n-up", "Jz", "Jxy", "edge-defects", "d", "seed", "edge-trim", "bin-width", "output"}},
      {Experiment::Fig1, {"L", "n-up", "Jz", "Jxy", "edge-defects", "d", "workers", "output"}},
      {Experiment::Sweep,
       {"L", "n-up", "Jz", "Jxy", "edge-defects", "d-grid", "n-realizations", "seed", "edge-trim", "bin-width",
        "pairs", "workers", "output"}},
  };
  return m;
}

using Entries = std::vector<std::pair<std::string, std::string>>;

Entries read_entries(std::string_view text, std::string_view origin) {
  Entries out;
  std::size_t line_no = 0;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto nl = rest.find('\n');
    std::string_view line = rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError(fmt::format("{}:{}: expected 'key = value', got '{}'", origin, line_no, line));
    }
    const std::string key(trim(line.substr(0, eq)));
    try {
      find_key(key);
    } catch (const UsageError&) {
      throw UsageError(fmt::format("{}:{}: unknown key '{}'", origin, line_no, key));
    }
    out.emplace_back(key, std::string(trim(line.substr(eq + 1))));
  }
  return out;
}

void validate(const RunConfig& c) {
  auto fail = [](const std::string& msg) { throw UsageError(msg); };
  if (c.experiment == Experiment::TwoQubit) {
    if (c.coupling == 0.0 && c.h1 == c.h2) fail("two-qubit: J = 0 with h1 = h2 has no well-defined eigenvectors");
    return;
  }
  if (c.length < 2 || c.length > kMaxSites) fail(fmt::format("L={} outside [2, {}]", c.length, kMaxSites));
  if (c.n_up < 0 || c.n_up > c.length) fail(fmt::format("n-up={} outside [0, {}]", c.n_up, c.length));
  if (c.jz.empty()) fail("Jz needs at least one value");
  if (c.experiment != Experiment::Fig1 && c.jz.size() != 1) fail("Jz takes a single value outside fig1");
  if (c.experiment == Experiment::Sweep && c.jz.front() != c.jxy) {
    fail(fmt::format("sweep needs an isotropic chain, got Jz={} Jxy={}", c.jz.front(), c.jxy));
  }
  if (c.d < 0.0) fail(fmt::format("d={} must be >= 0", c.d));
  if (c.d_grid.empty()) fail("empty d-grid");
  for (double d : c.d_grid) {
    if (d < 0.0) fail(fmt::format("d-grid value {} must be >= 0", d));
  }
  if (c.n_realizations < 1) fail(fmt::format("n-realizations={} must be positive", c.n_realizations));
  if (!(c.edge_trim >= 0.0 && c.edge_trim < 0.5)) fail(fmt::format("edge-trim={} outside [0, 0.5)", c.edge_trim));
  if (!(c.bin_width > 0.0 && c.bin_width <= 1.0)) fail(fmt::format("bin-width={} outside (0, 1]", c.bin_width));
  if (c.pairs != "all" && c.pairs != "reference") fail(fmt::format("pairs='{}': expected all or reference", c.pairs));
  if (c.pairs == "reference" && c.length < 11) fail("reference pairs need L >= 11");
  if (c.workers < 1) fail(fmt::format("workers={} must be positive", c.workers));
  if (c.output.empty()) fail("empty output path");
}

RunConfig resolve(const Entries& file_entries, const Entries& flag_entries, std::optional<Experiment> selected) {
  RunConfig c;
  std::set<std::string> given;
  for (const auto* entries : {&file_entries, &flag_entries}) {
    for (const auto& [key, value] : *entries) {
      find_key(key).set(c, value);
      given.insert(key);
    }
  }
  if (selected) {
    if (given.contains("experiment") && c.experiment != *selected) {
      throw UsageError(fmt::format("conflicting experiment: '{}' on the command line, '{}' in config",
                                   to_string(*selected), to_string(c.experiment)));
    }
    c.experiment = *selected;
  } else if (!given.contains("experiment")) {
    throw UsageError("no experiment selected (two-qubit, spectrum, fig1 or sweep)");
  }
  if (!given.contains("n-up")) c.n_up = c.length / 2;
  if (c.experiment == Experiment::Fig1) {
    if (!given.contains("Jz")) c.jz = default_jz_panels();
    if (!given.contains("d")) c.d = 100.0;
  }
  validate(c);
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(fmt::format("cannot read config file '{}'", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::TwoQubit: return "two-qubit";
    case Experiment::Spectrum: return "spectrum";
    case Experiment::Fig1: return "fig1";
    case Experiment::Sweep: return "sweep";
  }
  return "?";
}

Experiment experiment_from_string(std::string_view name) {
  for (Experiment e : {Experiment::TwoQubit, Experiment::Spectrum, Experiment::Fig1, Experiment::Sweep}) {
    if (to_string(e) == name) return e;
  }
  throw UsageError(fmt::format("unknown experiment '{}'", name));
}

std::vector<double> default_d_grid() {
  return {0, 0.05, 0.1, 0.15, 0.2, 0.3, 0.5, 0.7, 1, 1.5, 2, 3, 5, 10, 20};
}

std::vector<double> default_jz_panels() { return {0, 1, 10, 100, 159, 327}; }

RunConfig parse_config_text(std::string_view text) { return resolve(read_entries(text, "config"), {}, std::nullopt); }

std::string serialize_config(const RunConfig& config) {
  std::string out;
  for (const auto& k : keys()) out += fmt::format("{} = {}\n", k.name, k.get(config));
  return out;
}

namespace {

std::string description_of(Experiment e) {
  switch (e) {
    case Experiment::TwoQubit: return "closed-form energies, eigenvectors and concurrence of one pair";
    case Experiment::Spectrum: return "energies and participation numbers of one disordered chain";
    case Experiment::Fig1: return "max pair concurrence with a field on that pair only";
    case Experiment::Sweep: return "disorder-averaged N_pc, eta and pair concurrence over a grid of d";
  }
  return "";
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app{"Entanglement, localization and level statistics of disordered Heisenberg chains", "spinent"};
  app.require_subcommand(0, 1);
  std::string config_path;
  app.add_option("--config", config_path, "flat key = value file; flags override it");

  std::map<Experiment, CLI::App*> subs;
  std::map<Experiment, std::map<std::string, std::string>> values;
  std::map<Experiment, std::map<std::string, CLI::Option*>> options;
  std::map<Experiment, bool> json_flag;
  std::map<Experiment, std::string> sub_config;
  for (const auto& [experiment, flags] : flags_by_experiment()) {
    CLI::App* sub = app.add_subcommand(std::string(to_string(experiment)), description_of(experiment));
    subs[experiment] = sub;
    sub->add_option("--config", sub_config[experiment], "flat key = value file; flags override it");
    for (const auto& flag : flags) {
      options[experiment][flag] = sub->add_option("--" + flag, values[experiment][flag], find_key(flag).help);
    }
    if (experiment == Experiment::TwoQubit) sub->add_flag("--json", json_flag[experiment], "also print a JSON record");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  std::optional<Experiment> selected;
  Entries flag_entries;
  for (const auto& [experiment, sub] : subs) {
    if (!sub->parsed()) continue;
    selected = experiment;
    for (const auto& [flag, opt] : options[experiment]) {
      if (opt->count() > 0) flag_entries.emplace_back(flag, values[experiment][flag]);
    }
    if (json_flag[experiment]) flag_entries.emplace_back("json", "true");
    if (!sub_config[experiment].empty()) {
      if (!config_path.empty()) throw UsageError("--config given twice");
      config_path = sub_config[experiment];
    }
  }
  Entries file_entries;
  if (!config_path.empty()) file_entries = read_entries(read_file(config_path), config_path);
  return resolve(file_entries, flag_entries, selected);
}

}  // namespace spinent
