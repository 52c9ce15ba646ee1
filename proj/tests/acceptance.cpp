// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Runs the full 12-site experiments, so expect several minutes.

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "oracles/full_space.hpp"
#include "spinent/config.hpp"
#include "spinent/ensemble.hpp"
#include "spinent/entanglement.hpp"
#include "spinent/results_io.hpp"
#include "spinent/spectral.hpp"
#include "spinent/two_qubit.hpp"

using namespace spinent;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(const std::string& name, const std::function<Outcome()>& criterion) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = criterion();
  } catch (const std::exception& e) {
    o = {false, fmt::format("exception: {}", e.what())};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  fmt::print("[{}] {} ({:.1f} s): {}\n", o.pass ? "PASS" : "FAIL", name, secs, o.detail);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

int worker_count() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

Outcome two_qubit_suite() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(515);
  std::uniform_real_distribution<double> coupling(0.05, 5.0), field(-5.0, 5.0);
  std::bernoulli_distribution flip;
  const SectorBasis basis = build_sector(2, 1);
  double worst_energy = 0, worst_conc = 0, worst_npc = 0;
  for (int i = 0; i < 200; ++i) {
    const double J = flip(rng) ? coupling(rng) : -coupling(rng);
    const double h1 = field(rng), h2 = field(rng);
    const TwoQubitAnalytic a = solve_two_qubit(J, h1, h2);
    const auto s = diagonalize(build_hamiltonian(ChainSpec{2, J, J, {h1, h2}, false}, basis));
    worst_energy = std::max({worst_energy, std::abs(s.eigenvalues[0] - a.energy_minus),
                             std::abs(s.eigenvalues[1] - a.energy_plus)});
    for (Eigen::Index j = 0; j < 2; ++j) {
      const double c = concurrence_pure(0, s.eigenvectors(0, j), s.eigenvectors(1, j), 0);
      worst_conc = std::max(worst_conc, std::abs(c - a.concurrence_plus));
      worst_npc = std::max(worst_npc, std::abs(npc(s.eigenvectors.col(j)) * (1 - c * c / 2) - 1));
    }
    worst_npc = std::max(worst_npc, std::abs(a.npc_plus * (1 - a.concurrence_plus * a.concurrence_plus / 2) - 1));
  }
  const double secs = seconds_since(start);
  return {worst_energy <= 1e-10 && worst_conc <= 1e-10 && worst_npc <= 1e-12 && secs < 1.0,
          fmt::format("max |dE|={:.2e} (<=1e-10), max |dC|={:.2e} (<=1e-10), max |Npc(1-C^2/2)-1|={:.2e} "
                      "(<=1e-12), {:.3f} s (<1 s)",
                      worst_energy, worst_conc, worst_npc, secs)};
}

Outcome sector_dimension() {
  const auto n = build_sector(12, 6).dimension();
  return {n == 924, fmt::format("dimension {} (expected 924)", n)};
}

Outcome brute_force_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(8128);
  std::normal_distribution<double> g;
  double worst_h = 0, worst_rho = 0;
  for (int L = 2; L <= 8; ++L) {
    ChainSpec spec{L, 0.5 + 0.1 * L, 1.0, std::vector<double>(static_cast<std::size_t>(L)), true};
    for (auto& h : spec.fields) h = g(rng);
    const auto full = oracle::full_hamiltonian(L, spec.jz, spec.jxy, spec.fields, true);
    for (int k = 0; k <= L; ++k) {
      const auto h = build_hamiltonian(spec, build_sector(L, k));
      worst_h = std::max(worst_h, (h.matrix - oracle::project(full, oracle::sector_indices(L, k))).cwiseAbs().maxCoeff());
    }
  }
  int states = 0;
  while (states < 50) {
    const int L = 4 + states % 5;
    const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(L - 1));
    ChainSpec spec{L, 1.0, 1.0, std::vector<double>(static_cast<std::size_t>(L)), true};
    for (auto& h : spec.fields) h = 0.7 * g(rng);
    const auto basis = build_sector(L, k);
    const auto spectrum = diagonalize(build_hamiltonian(spec, basis));
    const auto j = static_cast<Eigen::Index>(rng() % basis.dimension());
    const Eigen::VectorXd psi = spectrum.eigenvectors.col(j);
    const auto embedded = oracle::embed(psi, oracle::sector_indices(L, k), L);
    for (int p = 1; p <= L; ++p) {
      for (int q = p + 1; q <= L; ++q) {
        const auto ref = oracle::partial_trace_pair(embedded, L, p, q);
        const auto mine = reduce_to_pair(psi, basis, p, q);
        worst_rho = std::max(worst_rho, (mine.rho.cast<std::complex<double>>() - ref).cwiseAbs().maxCoeff());
      }
    }
    ++states;
  }
  const double secs = seconds_since(start);
  return {worst_h <= 1e-12 && worst_rho <= 1e-10 && secs < 30.0,
          fmt::format("max |H - P H_full P|={:.2e} (<=1e-12), max |rho - tr_env|={:.2e} over {} eigenstates "
                      "(<=1e-10), {:.2f} s (<30 s)",
                      worst_h, worst_rho, states, secs)};
}

Outcome eta_calibration() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1729);
  std::exponential_distribution<double> expo(1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> poisson(1'000'000), wigner(1'000'000);
  for (auto& s : poisson) s = expo(rng);
  for (auto& s : wigner) s = std::sqrt(-(4.0 / std::numbers::pi) * std::log(1.0 - u(rng)));
  const double ep = eta(SpacingSample{poisson});
  const double ew = eta(SpacingSample{wigner});
  const double secs = seconds_since(start);
  return {std::abs(ep - 1.0) <= 0.02 && std::abs(ew) <= 0.02 && secs < 10.0,
          fmt::format("eta(Poisson)={:.4f} (1+-0.02), eta(Wigner)={:.4f} (0+-0.02), {:.2f} s (<10 s)", ep, ew, secs)};
}

Outcome fig1_panels(const fs::path& out_dir) {
  const ChainSpec chain = ChainSpec::uniform(12, 0.0, 1.0, true);
  const auto free_panel = run_same_splitting_panel(chain, 100.0, 0.0, 6, worker_count());
  const auto iso_panel = run_same_splitting_panel(chain, 100.0, 1.0, 6, worker_count());

  std::vector<SameSplittingRow> all = free_panel;
  all.insert(all.end(), iso_panel.begin(), iso_panel.end());
  write_file_atomic(out_dir / kFig1Csv, fig1_csv(all));

  bool ok = true;
  double worst_interior = 1.0;
  for (const auto& row : free_panel) {
    const auto& s = row.result.sites;
    if (row.kind == PairKind::N && s.p >= 2 && s.q <= 11) {
      worst_interior = std::min(worst_interior, row.result.c_max);
      ok = ok && row.result.c_max >= 0.99;
    }
  }
  std::map<int, double> iso_n, iso_nnn;
  for (const auto& row : iso_panel) {
    if (row.kind == PairKind::N) iso_n[row.result.sites.p] = row.result.c_max;
    if (row.kind == PairKind::NNN) iso_nnn[row.result.sites.p] = row.result.c_max;
  }
  int compared = 0;
  double worst_gap = 1.0;
  for (int p = 2; p + 3 <= 11; ++p) {
    ok = ok && iso_nnn.at(p) < iso_n.at(p);
    worst_gap = std::min(worst_gap, iso_n.at(p) - iso_nnn.at(p));
    ++compared;
  }
  return {ok, fmt::format("Jz=0: min interior N C_max={:.5f} (>=0.99); Jz=Jxy: N - NNN C_max >= {:.4f} at all {} "
                          "interior positions (>0)",
                          worst_interior, worst_gap, compared)};
}

// Kind-averaged statistic at each gridpoint.
double kind_mean(const GridpointResult& gp, PairKind kind, bool use_max) {
  double sum = 0;
  int n = 0;
  for (const auto& ps : gp.pairs) {
    if (ps.kind != kind) continue;
    sum += use_max ? ps.c_max : ps.c_bar;
    ++n;
  }
  return sum / n;
}

const GridpointResult& at(const EnsembleResult& r, double d) {
  for (const auto& gp : r.gridpoints) {
    if (gp.d == d) return gp;
  }
  throw std::runtime_error(fmt::format("gridpoint d={} missing", d));
}

Outcome fig2(const EnsembleResult& r, double secs) {
  const double eta0 = at(r, 0.0).mean_eta, eta20 = at(r, 20.0).mean_eta;
  double eta_dip = 10.0;
  for (const auto& gp : r.gridpoints) {
    if (gp.d >= 0.2 && gp.d <= 0.5) eta_dip = std::min(eta_dip, gp.mean_eta);
  }
  const auto peak = std::max_element(r.gridpoints.begin(), r.gridpoints.end(),
                                     [](const auto& a, const auto& b) { return a.mean_npc < b.mean_npc; });
  const double npc20 = at(r, 20.0).mean_npc;
  const bool a = eta0 > 0.6 && eta_dip < 0.35 && eta20 > 0.6;
  const bool b = peak->d > 0.0 && peak->d <= 0.5 && npc20 < 1.5;
  return {a && b && secs < 1800.0,
          fmt::format("(a) <eta>(0)={:.3f} (>0.6), min <eta> on [0.2,0.5]={:.3f} (<0.35), <eta>(20)={:.3f} (>0.6); "
                      "(b) <Npc> peak {:.1f} at d={} (in (0,0.5]), <Npc>(20)={:.3f} (<1.5); sweep {:.0f} s (<1800 s)",
                      eta0, eta_dip, eta20, peak->mean_npc, peak->d, npc20, secs)};
}

Outcome fig34(const EnsembleResult& r) {
  const double c0 = kind_mean(at(r, 0.0), PairKind::N, false);
  bool a = true;
  double chaotic_min = 10.0, chaotic_max = 0.0, transition_peak = 0.0;
  for (const auto& gp : r.gridpoints) {
    const double c = kind_mean(gp, PairKind::N, false);
    if (gp.d > 0.0 && gp.d <= 0.2) {
      a = a && c < c0;
      chaotic_min = std::min(chaotic_min, c);
      chaotic_max = std::max(chaotic_max, c);
    }
    if (gp.d > 0.2 && gp.d < 2.0) transition_peak = std::max(transition_peak, c);
  }
  const bool b = transition_peak > chaotic_min;
  const double c20 = kind_mean(at(r, 20.0), PairKind::N, false);
  const bool c = c20 < transition_peak;

  const auto chaotic = std::min_element(r.gridpoints.begin(), r.gridpoints.end(),
                                        [](const auto& x, const auto& y) { return x.mean_eta < y.mean_eta; });
  const double mn = kind_mean(*chaotic, PairKind::N, true), mnn = kind_mean(*chaotic, PairKind::NN, true),
               mnnn = kind_mean(*chaotic, PairKind::NNN, true);
  const bool d = mn > mnn && mnn > mnnn;
  return {a && b && c && d,
          fmt::format("(a) N <Cbar>(0)={:.4f} > max on (0,0.2]={:.4f}; (b) transition peak {:.4f} > chaotic min "
                      "{:.4f}; (c) <Cbar>(20)={:.4f} < peak; (d) at eta-min d={}: <Cmax> N={:.4f} > NN={:.4f} > "
                      "NNN={:.4f}",
                      c0, chaotic_max, transition_peak, chaotic_min, c20, chaotic->d, mn, mnn, mnnn)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism(const fs::path& out_dir) {
  const std::string common =
      fmt::format("{} sweep --L 10 --d-grid 0,0.3,3 --n-realizations 4 --seed 77", SPINENT_CLI);
  const fs::path a = out_dir / "determinism_1", b = out_dir / "determinism_2";
  fs::remove_all(a);
  fs::remove_all(b);
  const int ra = std::system(fmt::format("{} --workers 1 --output {} > /dev/null", common, a.string()).c_str());
  const int rb = std::system(fmt::format("{} --workers 3 --output {} > /dev/null", common, b.string()).c_str());
  const bool same_summary = slurp(a / kSweepCsv) == slurp(b / kSweepCsv);
  const bool same_raw = slurp(a / kSweepRawCsv) == slurp(b / kSweepRawCsv);
  const bool nonempty = !slurp(a / kSweepCsv).empty();
  return {ra == 0 && rb == 0 && same_summary && same_raw && nonempty,
          fmt::format("exit codes {}/{}; {} identical: {}; {} identical: {} (1 vs 3 workers)", ra, rb, kSweepCsv,
                      same_summary, kSweepRawCsv, same_raw)};
}

}  // namespace

int main() {
  const fs::path out_dir = fs::current_path() / "acceptance_output";
  prepare_output_dir(out_dir);

  report("two-qubit analytic suite", two_qubit_suite);
  report("sector dimension 12 choose 6", sector_dimension);
  report("brute-force equivalence (L<=8)", brute_force_equivalence);
  report("eta calibration", eta_calibration);
  report("same-splitting panels Jz=0 and Jz=Jxy (L=12, d=100)", [&] { return fig1_panels(out_dir); });

  // Disorder sweep shared by the N_pc/eta and concurrence criteria.
  RunConfig config = parse_config({"sweep", "--seed", "20050101", "--output", out_dir.string()});
  config.workers = worker_count();
  EnsembleResult sweep;
  double sweep_secs = 0.0;
  report("disorder sweep (L=12, 15 gridpoints x 20 realizations)", [&] {
    const auto start = std::chrono::steady_clock::now();
    AnalysisOptions options;
    options.n_up = config.n_up;
    options.edge_trim = config.edge_trim;
    options.eta.bin_width = config.bin_width;
    options.workers = config.workers;
    std::vector<PairSelection> pairs;
    for (PairKind kind : {PairKind::N, PairKind::NN, PairKind::NNN}) pairs.push_back(all_pairs(kind, config.length));
    sweep = run_sweep(ChainSpec::uniform(config.length, 1.0, 1.0, true),
                      DisorderSpec{config.d_grid, config.n_realizations, config.seed}, pairs, options);
    sweep_secs = seconds_since(start);
    write_sweep_results(sweep, config, utc_timestamp());
    return Outcome{sweep.raw.size() == 300, fmt::format("{} realizations", sweep.raw.size())};
  });
  report("localization and chaos profile (<Npc>, <eta> vs d/J)", [&] { return fig2(sweep, sweep_secs); });
  report("concurrence profile (<Cmax>, <Cbar> vs d/J)", [&] { return fig34(sweep); });
  report("sweep determinism across worker counts", [&] { return determinism(out_dir); });

  fmt::print("{} criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
