#include "spinent/results_io.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <json.hpp>

#include "spinent/error.hpp"

#ifndef SPINENT_VERSION
#define SPINENT_VERSION "0.0.0"
#endif

namespace spinent {
namespace fs = std::filesystem;

std::string code_version() { return SPINENT_VERSION; }

std::string format_real(double value) { return fmt::format("{:.17g}", value); }

void prepare_output_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError(fmt::format("cannot create output directory '{}': {}", dir.string(), ec.message()));
  }
  const fs::path probe = dir / ".spinent_write_probe";
  {
    std::ofstream out(probe);
    if (!out || !(out << "ok") || !out.flush()) {
      throw IoError(fmt::format("output directory '{}' is not writable", dir.string()));
    }
  }
  fs::remove(probe, ec);
}

void write_file_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(fmt::format("cannot open '{}' for writing", tmp.string()));
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError(fmt::format("failed writing '{}'", tmp.string()));
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError(fmt::format("cannot move '{}' into place: {}", path.string(), ec.message()));
  }
}

std::string sweep_csv(const EnsembleResult& result) {
  std::string out = "d_over_J,pair_kind,pair_p,pair_q,mean_c_max,mean_c_bar,mean_npc,mean_eta,n_realizations\n";
  for (const auto& gp : result.gridpoints) {
    for (const auto& ps : gp.pairs) {
      out += fmt::format("{},{},{},{},{},{},{},{},{}\n", format_real(gp.d), to_string(ps.kind), ps.sites.p,
                         ps.sites.q, format_real(ps.c_max), format_real(ps.c_bar), format_real(gp.mean_npc),
                         format_real(gp.mean_eta), result.n_realizations);
    }
    // Pair-independent row: spectrum statistics only.
    out += fmt::format("{},spectrum,0,0,,,{},{},{}\n", format_real(gp.d), format_real(gp.mean_npc),
                       format_real(gp.mean_eta), result.n_realizations);
  }
  return out;
}

std::string sweep_raw_csv(const EnsembleResult& result) {
  std::string out =
      "d_index,d_over_J,realization,child_seed,pair_kind,pair_p,pair_q,c_max,c_max_state,c_bar,npc_bar,eta\n";
  for (const auto& rr : result.raw) {
    const std::string d = format_real(result.gridpoints[rr.d_index].d);
    for (const auto& ps : rr.pairs) {
      out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}\n", rr.d_index, d, rr.realization, rr.seed,
                         to_string(ps.kind), ps.sites.p, ps.sites.q, format_real(ps.c_max), ps.c_max_state,
                         format_real(ps.c_bar), format_real(rr.npc_bar), format_real(rr.eta));
    }
    out += fmt::format("{},{},{},{},spectrum,0,0,,,,{},{}\n", rr.d_index, d, rr.realization, rr.seed,
                       format_real(rr.npc_bar), format_real(rr.eta));
  }
  return out;
}

std::string fig1_csv(const std::vector<SameSplittingRow>& rows) {
  std::string out = "jz_over_jxy,pair_kind,offset,pair_p,pair_q,c_max,c_max_state\n";
  for (const auto& row : rows) {
    const auto& r = row.result;
    out += fmt::format("{},{},{},{},{},{},{}\n", format_real(r.jz_over_jxy), to_string(row.kind),
                       offset_of(row.kind), r.sites.p, r.sites.q, format_real(r.c_max), r.c_max_state);
  }
  return out;
}

std::string spectrum_csv(const SpectralDecomposition& spectrum) {
  std::string out = "index,energy,npc\n";
  for (Eigen::Index j = 0; j < spectrum.size(); ++j) {
    out += fmt::format("{},{},{}\n", j, format_real(spectrum.eigenvalues[j]), format_real(npc(spectrum.eigenvectors.col(j))));
  }
  return out;
}

std::string metadata_text(const RunConfig& config, const std::string& timestamp,
                          const std::vector<std::string>& extra_lines) {
  std::string out = "# spinent run metadata\n";
  out += "timestamp = " + timestamp + "\n";
  out += "version = " + code_version() + "\n";
  out += "master_seed = " + std::to_string(config.seed) + "\n";
  out += "# resolved configuration\n";
  out += serialize_config(config);
  for (const auto& line : extra_lines) out += line + "\n";
  return out;
}

void write_sweep_results(const EnsembleResult& result, const RunConfig& config, const std::string& timestamp) {
  const fs::path dir(config.output);
  std::vector<std::string> seeds{"# child seeds: d_index, realization, seed"};
  for (const auto& rr : result.raw) {
    seeds.push_back(fmt::format("child_seed = {},{},{}", rr.d_index, rr.realization, rr.seed));
  }
  write_file_atomic(dir / kSweepCsv, sweep_csv(result));
  write_file_atomic(dir / kSweepRawCsv, sweep_raw_csv(result));
  write_file_atomic(dir / kMetadata, metadata_text(config, timestamp, seeds));
}

void write_fig1_results(const std::vector<SameSplittingRow>& rows, const RunConfig& config,
                        const std::string& timestamp) {
  const fs::path dir(config.output);
  write_file_atomic(dir / kFig1Csv, fig1_csv(rows));
  write_file_atomic(dir / kMetadata, metadata_text(config, timestamp));
}

void write_spectrum_results(const SpectralDecomposition& spectrum, double eta_value, const RunConfig& config,
                            const std::string& timestamp) {
  const fs::path dir(config.output);
  write_file_atomic(dir / kSpectrumCsv, spectrum_csv(spectrum));
  write_file_atomic(dir / kMetadata,
                    metadata_text(config, timestamp,
                                  {"dimension = " + std::to_string(spectrum.size()),
                                   "mean_npc = " + format_real(mean_npc(spectrum)), "eta = " + format_real(eta_value)}));
}

std::string two_qubit_text(const TwoQubitAnalytic& s) {
  std::string out;
  auto line = [&out](std::string_view label, double v) { out += fmt::format("{:<16} {}\n", label, format_real(v)); };
  line("J", s.coupling);
  line("Sigma", s.sigma);
  line("Delta", s.delta);
  line("E+", s.energy_plus);
  line("E-", s.energy_minus);
  line("E(|11>)", s.energy_up_up);
  line("E(|00>)", s.energy_down_down);
  out += fmt::format("{:<16} {} |10> + {} |01>\n", "|E+>", format_real(s.vector_plus[0]), format_real(s.vector_plus[1]));
  out += fmt::format("{:<16} {} |10> + {} |01>\n", "|E->", format_real(s.vector_minus[0]),
                     format_real(s.vector_minus[1]));
  line("C+", s.concurrence_plus);
  line("C-", s.concurrence_minus);
  line("Npc+", s.npc_plus);
  line("Npc-", s.npc_minus);
  return out;
}

std::string two_qubit_json(const TwoQubitAnalytic& s) {
  const nlohmann::json j = {
      {"J", s.coupling},
      {"sigma", s.sigma},
      {"delta", s.delta},
      {"energy_plus", s.energy_plus},
      {"energy_minus", s.energy_minus},
      {"energy_11", s.energy_up_up},
      {"energy_00", s.energy_down_down},
      {"vector_plus", {s.vector_plus[0], s.vector_plus[1]}},
      {"vector_minus", {s.vector_minus[0], s.vector_minus[1]}},
      {"concurrence_plus", s.concurrence_plus},
      {"concurrence_minus", s.concurrence_minus},
      {"npc_plus", s.npc_plus},
      {"npc_minus", s.npc_minus},
  };
  return j.dump();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace spinent
