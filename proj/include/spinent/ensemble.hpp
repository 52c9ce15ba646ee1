#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "spinent/hamiltonian.hpp"
#include "spinent/spectral.hpp"

namespace spinent {

/// Gaussian on-site disorder: h_n = d_n with <d_n> = 0, <d_n d_m> = d^2.
struct DisorderSpec {
  std::vector<double> d_grid;
  int n_realizations = 20;
  std::uint64_t master_seed = 0;
};

/// Seed of realization `realization` at grid index `d_index`. For a fixed
/// master seed the map (d_index, realization) -> seed is injective.
std::uint64_t child_seed(std::uint64_t master_seed, std::size_t d_index, std::size_t realization);

/// L i.i.d. Normal(0, d^2) draws from the child stream of (d_index, realization).
std::vector<double> sample_fields(const DisorderSpec& spec, std::size_t d_index, std::size_t realization,
                                  int length);

enum class PairKind { N = 1, NN = 2, NNN = 3 };

int offset_of(PairKind kind);
std::string_view to_string(PairKind kind);
PairKind pair_kind_from_string(std::string_view name);

struct SitePair {
  int p = 0;
  int q = 0;
  friend bool operator==(const SitePair&, const SitePair&) = default;
};

struct PairSelection {
  PairKind kind = PairKind::N;
  std::vector<SitePair> pairs;
};

/// Every (n, n + offset) inside a chain of `length` sites.
PairSelection all_pairs(PairKind kind, int length);

/// Pairs plotted in the reference figures for the 12-site chain.
PairSelection reference_pairs(PairKind kind);

struct PairStats {
  PairKind kind = PairKind::N;
  SitePair sites;
  double c_max = 0.0;
  std::size_t c_max_state = 0;
  double c_bar = 0.0;
};

/// Diagnostics of one Hamiltonian: mean N_pc over eigenstates, eta, and
/// per-pair concurrence extremes over eigenstates.
struct RealizationResult {
  std::size_t d_index = 0;
  std::size_t realization = 0;
  std::uint64_t seed = 0;
  double npc_bar = 0.0;
  double eta = 0.0;
  std::vector<PairStats> pairs;
};

struct GridpointResult {
  double d = 0.0;
  double mean_npc = 0.0;
  double mean_eta = 0.0;
  /// Realization means of c_max and c_bar, one entry per requested pair.
  std::vector<PairStats> pairs;
};

struct EnsembleResult {
  std::uint64_t master_seed = 0;
  int n_realizations = 0;
  std::size_t dimension = 0;
  std::vector<GridpointResult> gridpoints;
  /// Ordered by (d_index, realization).
  std::vector<RealizationResult> raw;
};

struct AnalysisOptions {
  int n_up = -1;  // -1: L / 2
  double edge_trim = 0.1;
  EtaOptions eta;
  int workers = 1;
};

/// Build, diagonalize and analyze one chain.
RealizationResult analyze_chain(const ChainSpec& chain, const std::vector<PairSelection>& pairs,
                                const AnalysisOptions& options);

/// Disorder sweep over `disorder.d_grid` for an isotropic chain. Realizations
/// run on `options.workers` threads; aggregation happens in index order so
/// the result does not depend on scheduling.
EnsembleResult run_sweep(const ChainSpec& chain, const DisorderSpec& disorder,
                         const std::vector<PairSelection>& pairs, const AnalysisOptions& options);

struct SameSplittingResult {
  double jz_over_jxy = 0.0;
  SitePair sites;
  double c_max = 0.0;
  std::size_t c_max_state = 0;
};

/// Max concurrence over eigenstates when only `pair` carries field d.
SameSplittingResult run_same_splitting(const ChainSpec& chain, SitePair pair, double d, double jz_over_jxy,
                                       int n_up = -1);

struct SameSplittingRow {
  PairKind kind = PairKind::N;
  SameSplittingResult result;
};

/// One panel: every pair at offsets 1, 2, 3.
std::vector<SameSplittingRow> run_same_splitting_panel(const ChainSpec& chain, double d, double jz_over_jxy,
                                                       int n_up = -1, int workers = 1);

}  // namespace spinent
