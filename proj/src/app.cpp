#include "spinent/app.hpp"

#include <fmt/format.h>

#include "spinent/basis.hpp"
#include "spinent/ensemble.hpp"
#include "spinent/error.hpp"
#include "spinent/results_io.hpp"
#include "spinent/two_qubit.hpp"

namespace spinent {
namespace {

ChainSpec chain_from(const RunConfig& c, double jz) {
  return ChainSpec{c.length, jz, c.jxy, std::vector<double>(static_cast<std::size_t>(c.length), 0.0),
                   c.edge_defects};
}

std::vector<PairSelection> pairs_from(const RunConfig& c) {
  std::vector<PairSelection> out;
  for (PairKind kind : {PairKind::N, PairKind::NN, PairKind::NNN}) {
    out.push_back(c.pairs == "reference" ? reference_pairs(kind) : all_pairs(kind, c.length));
  }
  return out;
}

}  // namespace

void run_experiment(const RunConfig& config, std::ostream& out) {
  if (config.experiment == Experiment::TwoQubit) {
    const TwoQubitAnalytic s = solve_two_qubit(config.coupling, config.h1, config.h2);
    out << two_qubit_text(s);
    if (config.json) out << two_qubit_json(s) << "\n";
    return;
  }

  prepare_output_dir(config.output);
  const std::string started = utc_timestamp();

  switch (config.experiment) {
    case Experiment::Spectrum: {
      ChainSpec chain = chain_from(config, config.jz.front());
      const DisorderSpec disorder{{config.d}, 1, config.seed};
      chain.fields = sample_fields(disorder, 0, 0, config.length);
      const SectorBasis basis = build_sector(config.length, config.n_up);
      const SpectralDecomposition spectrum = diagonalize(build_hamiltonian(chain, basis));
      const std::vector<double> levels(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end());
      const double eta_value =
          eta(unfolded_spacings(levels, config.edge_trim), EtaOptions{config.bin_width, 5.0});
      write_spectrum_results(spectrum, eta_value, config, started);
      out << fmt::format("dimension {}  mean_npc {}  eta {}\n", spectrum.size(), format_real(mean_npc(spectrum)),
                         format_real(eta_value));
      break;
    }
    case Experiment::Fig1: {
      std::vector<SameSplittingRow> rows;
      for (double ratio : config.jz) {
        auto panel = run_same_splitting_panel(chain_from(config, ratio * config.jxy), config.d, ratio, config.n_up,
                                              config.workers);
        out << fmt::format("panel Jz/Jxy = {}: {} pairs\n", format_real(ratio), panel.size());
        rows.insert(rows.end(), panel.begin(), panel.end());
      }
      write_fig1_results(rows, config, started);
      break;
    }
    case Experiment::Sweep: {
      const DisorderSpec disorder{config.d_grid, config.n_realizations, config.seed};
      AnalysisOptions options;
      options.n_up = config.n_up;
      options.edge_trim = config.edge_trim;
      options.eta.bin_width = config.bin_width;
      options.workers = config.workers;
      const EnsembleResult result = run_sweep(chain_from(config, config.jz.front()), disorder, pairs_from(config), options);
      write_sweep_results(result, config, started);
      for (const auto& gp : result.gridpoints) {
        out << fmt::format("d/J = {:<6} <Npc> = {:<10.5g} <eta> = {:.4f}\n", gp.d, gp.mean_npc, gp.mean_eta);
      }
      break;
    }
    case Experiment::TwoQubit:
      break;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_config(args);
  } catch (const HelpRequested& help) {
    out << help.what();
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  try {
    run_experiment(config, out);
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return 1;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace spinent
