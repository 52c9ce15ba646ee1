#include "spinent/ensemble.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "parallel.hpp"
#include "spinent/entanglement.hpp"
#include "spinent/error.hpp"

namespace spinent {
namespace {

// splitmix64 finalizer; a bijection on 64-bit words.
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int resolve_n_up(const ChainSpec& chain, int n_up) { return n_up < 0 ? chain.length / 2 : n_up; }

template <typename Error>
[[noreturn]] void rethrow_with_context(const Error& e, const std::string& context) {
  throw Error(context + ": " + e.what());
}

std::string realization_context(double d, std::size_t realization) {
  std::ostringstream msg;
  msg << "d=" << d << ", realization " << realization;
  return msg.str();
}

}  // namespace

std::uint64_t child_seed(std::uint64_t master_seed, std::size_t d_index, std::size_t realization) {
  if (d_index > 0xffffffffULL || realization > 0xffffffffULL) {
    throw ParameterError("grid or realization index exceeds 32 bits");
  }
  const std::uint64_t counter = (static_cast<std::uint64_t>(d_index) << 32) | realization;
  return mix64(mix64(master_seed) + counter);
}

std::vector<double> sample_fields(const DisorderSpec& spec, std::size_t d_index, std::size_t realization,
                                  int length) {
  if (d_index >= spec.d_grid.size()) {
    throw ParameterError("d index " + std::to_string(d_index) + " outside grid of " +
                         std::to_string(spec.d_grid.size()));
  }
  if (spec.n_realizations < 1 || realization >= static_cast<std::size_t>(spec.n_realizations)) {
    throw ParameterError("realization " + std::to_string(realization) + " outside [0, " +
                         std::to_string(spec.n_realizations) + ")");
  }
  if (length < 1) throw ParameterError("chain length must be positive");
  const double d = spec.d_grid[d_index];
  if (!(d >= 0.0) || !std::isfinite(d)) throw ParameterError("disorder strength must be finite and >= 0");

  std::vector<double> fields(static_cast<std::size_t>(length), 0.0);
  if (d == 0.0) return fields;
  std::mt19937_64 engine(child_seed(spec.master_seed, d_index, realization));
  std::normal_distribution<double> normal(0.0, d);
  for (double& h : fields) h = normal(engine);
  return fields;
}

int offset_of(PairKind kind) { return static_cast<int>(kind); }

std::string_view to_string(PairKind kind) {
  switch (kind) {
    case PairKind::N: return "N";
    case PairKind::NN: return "NN";
    case PairKind::NNN: return "NNN";
  }
  return "?";
}

PairKind pair_kind_from_string(std::string_view name) {
  if (name == "N") return PairKind::N;
  if (name == "NN") return PairKind::NN;
  if (name == "NNN") return PairKind::NNN;
  throw ParameterError("unknown pair kind '" + std::string(name) + "'");
}

PairSelection all_pairs(PairKind kind, int length) {
  PairSelection sel{kind, {}};
  const int offset = offset_of(kind);
  for (int p = 1; p + offset <= length; ++p) sel.pairs.push_back({p, p + offset});
  return sel;
}

PairSelection reference_pairs(PairKind kind) {
  switch (kind) {
    case PairKind::N: return {kind, {{1, 2}, {3, 4}, {6, 7}, {10, 11}}};
    case PairKind::NN: return {kind, {{1, 3}, {2, 4}, {3, 5}, {4, 6}}};
    case PairKind::NNN: return {kind, {{2, 5}, {4, 7}, {5, 8}, {7, 10}}};
  }
  return {kind, {}};
}

RealizationResult analyze_chain(const ChainSpec& chain, const std::vector<PairSelection>& pairs,
                                const AnalysisOptions& options) {
  const SectorBasis basis = build_sector(chain.length, resolve_n_up(chain, options.n_up));
  const SectorHamiltonian h = build_hamiltonian(chain, basis);
  const SpectralDecomposition spectrum = diagonalize(h);

  RealizationResult out;
  out.npc_bar = mean_npc(spectrum);
  const std::vector<double> levels(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end());
  out.eta = eta(unfolded_spacings(levels, options.edge_trim), options.eta);

  const auto n_states = spectrum.size();
  for (const auto& selection : pairs) {
    for (const SitePair& sites : selection.pairs) {
      if (sites.q - sites.p != offset_of(selection.kind)) {
        throw ParameterError("pair (" + std::to_string(sites.p) + ", " + std::to_string(sites.q) +
                             ") does not match kind " + std::string(to_string(selection.kind)));
      }
      const PairReducer reducer(basis, sites.p, sites.q);
      PairStats stats{selection.kind, sites, -1.0, 0, 0.0};
      double sum = 0.0;
      for (Eigen::Index j = 0; j < n_states; ++j) {
        const double c = concurrence_mixed(reducer.reduce(spectrum.eigenvectors.col(j)));
        sum += c;
        if (c > stats.c_max) {
          stats.c_max = c;
          stats.c_max_state = static_cast<std::size_t>(j);
        }
      }
      stats.c_bar = sum / static_cast<double>(n_states);
      out.pairs.push_back(stats);
    }
  }
  return out;
}

EnsembleResult run_sweep(const ChainSpec& chain, const DisorderSpec& disorder,
                         const std::vector<PairSelection>& pairs, const AnalysisOptions& options) {
  if (chain.jz != chain.jxy) {
    throw ParameterError("disorder sweeps use an isotropic chain, got Jz=" + std::to_string(chain.jz) +
                         ", Jxy=" + std::to_string(chain.jxy));
  }
  if (disorder.n_realizations < 1) throw ParameterError("n_realizations must be positive");
  if (disorder.d_grid.empty()) throw ParameterError("empty d grid");
  const int n_up = resolve_n_up(chain, options.n_up);

  const std::size_t n_real = static_cast<std::size_t>(disorder.n_realizations);
  const std::size_t n_tasks = disorder.d_grid.size() * n_real;
  std::vector<RealizationResult> raw(n_tasks);

  detail::parallel_for(n_tasks, options.workers, [&](std::size_t task) {
    const std::size_t d_index = task / n_real;
    const std::size_t r = task % n_real;
    const double d = disorder.d_grid[d_index];
    try {
      ChainSpec realization = chain;
      realization.fields = sample_fields(disorder, d_index, r, chain.length);
      AnalysisOptions single = options;
      single.n_up = n_up;
      RealizationResult res = analyze_chain(realization, pairs, single);
      res.d_index = d_index;
      res.realization = r;
      res.seed = child_seed(disorder.master_seed, d_index, r);
      raw[task] = std::move(res);
    } catch (const NumericalError& e) {
      rethrow_with_context(e, realization_context(d, r));
    } catch (const ParameterError& e) {
      rethrow_with_context(e, realization_context(d, r));
    }
  });

  EnsembleResult result;
  result.master_seed = disorder.master_seed;
  result.n_realizations = disorder.n_realizations;
  result.dimension = binomial(chain.length, n_up);
  for (std::size_t di = 0; di < disorder.d_grid.size(); ++di) {
    GridpointResult gp;
    gp.d = disorder.d_grid[di];
    const auto first = raw.begin() + static_cast<std::ptrdiff_t>(di * n_real);
    gp.pairs = first->pairs;
    for (auto& ps : gp.pairs) {
      ps.c_max = 0.0;
      ps.c_bar = 0.0;
      ps.c_max_state = 0;
    }
    for (std::size_t r = 0; r < n_real; ++r) {
      const RealizationResult& rr = *(first + static_cast<std::ptrdiff_t>(r));
      gp.mean_npc += rr.npc_bar;
      gp.mean_eta += rr.eta;
      for (std::size_t k = 0; k < gp.pairs.size(); ++k) {
        gp.pairs[k].c_max += rr.pairs[k].c_max;
        gp.pairs[k].c_bar += rr.pairs[k].c_bar;
      }
    }
    const double n = static_cast<double>(n_real);
    gp.mean_npc /= n;
    gp.mean_eta /= n;
    for (auto& ps : gp.pairs) {
      ps.c_max /= n;
      ps.c_bar /= n;
    }
    result.gridpoints.push_back(std::move(gp));
  }
  result.raw = std::move(raw);
  return result;
}

SameSplittingResult run_same_splitting(const ChainSpec& chain, SitePair pair, double d, double jz_over_jxy,
                                       int n_up) {
  if (pair.p < 1 || pair.q > chain.length || pair.p >= pair.q) {
    throw ParameterError("pair (" + std::to_string(pair.p) + ", " + std::to_string(pair.q) +
                         ") invalid for L=" + std::to_string(chain.length));
  }
  ChainSpec spec = chain;
  spec.jz = jz_over_jxy * chain.jxy;
  spec.fields.assign(static_cast<std::size_t>(chain.length), 0.0);
  spec.fields[static_cast<std::size_t>(pair.p - 1)] = d;
  spec.fields[static_cast<std::size_t>(pair.q - 1)] = d;

  const SectorBasis basis = build_sector(spec.length, resolve_n_up(spec, n_up));
  const SpectralDecomposition spectrum = diagonalize(build_hamiltonian(spec, basis));
  const PairReducer reducer(basis, pair.p, pair.q);

  SameSplittingResult out{jz_over_jxy, pair, -1.0, 0};
  for (Eigen::Index j = 0; j < spectrum.size(); ++j) {
    const double c = concurrence_mixed(reducer.reduce(spectrum.eigenvectors.col(j)));
    if (c > out.c_max) {
      out.c_max = c;
      out.c_max_state = static_cast<std::size_t>(j);
    }
  }
  return out;
}

std::vector<SameSplittingRow> run_same_splitting_panel(const ChainSpec& chain, double d, double jz_over_jxy,
                                                       int n_up, int workers) {
  std::vector<SameSplittingRow> rows;
  for (PairKind kind : {PairKind::N, PairKind::NN, PairKind::NNN}) {
    for (const SitePair& sites : all_pairs(kind, chain.length).pairs) rows.push_back({kind, {jz_over_jxy, sites}});
  }
  detail::parallel_for(rows.size(), workers, [&](std::size_t i) {
    try {
      rows[i].result = run_same_splitting(chain, rows[i].result.sites, d, jz_over_jxy, n_up);
    } catch (const NumericalError& e) {
      std::ostringstream context;
      context << "Jz/Jxy=" << jz_over_jxy << ", pair (" << rows[i].result.sites.p << ", "
              << rows[i].result.sites.q << ")";
      rethrow_with_context(e, context.str());
    }
  });
  return rows;
}

}  // namespace spinent
