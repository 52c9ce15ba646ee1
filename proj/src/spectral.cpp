#include "spinent/spectral.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "spinent/error.hpp"

namespace spinent {

SpectralDecomposition diagonalize(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() != matrix.cols()) {
    throw ParameterError("matrix is " + std::to_string(matrix.rows()) + "x" +
                         std::to_string(matrix.cols()) + ", expected square");
  }
  if (!matrix.allFinite()) throw ParameterError("matrix has non-finite entries");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "symmetric eigensolver did not converge (dim=" << matrix.rows()
        << ", max|H|=" << matrix.cwiseAbs().maxCoeff()
        << ", asymmetry=" << (matrix - matrix.transpose()).cwiseAbs().maxCoeff() << ")";
    throw NumericalError(msg.str());
  }
  return SpectralDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

double npc(const Eigen::Ref<const Eigen::VectorXd>& amplitudes) {
  const double norm2 = amplitudes.squaredNorm();
  if (norm2 == 0.0) throw ParameterError("npc of a zero vector");
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-8) {
    throw ParameterError("npc needs a normalized vector, norm=" + std::to_string(std::sqrt(norm2)));
  }
  return 1.0 / amplitudes.array().square().square().sum();
}

double mean_npc(const SpectralDecomposition& spectrum) {
  double total = 0.0;
  for (Eigen::Index j = 0; j < spectrum.size(); ++j) total += npc(spectrum.eigenvectors.col(j));
  return total / static_cast<double>(spectrum.size());
}

SpacingSample SpacingSample::normalized(std::vector<double> raw) {
  if (raw.empty()) throw ParameterError("empty spacing sample");
  double sum = 0.0;
  for (double s : raw) {
    if (!(s >= 0.0) || !std::isfinite(s)) throw ParameterError("spacings must be finite and nonnegative");
    sum += s;
  }
  if (sum <= 0.0) throw ParameterError("all spacings are zero; cannot normalize");
  const double mean = sum / static_cast<double>(raw.size());
  for (double& s : raw) s /= mean;
  return SpacingSample{std::move(raw)};
}

SpacingSample unfolded_spacings(std::span<const double> eigenvalues, double edge_trim) {
  if (!(edge_trim >= 0.0 && edge_trim < 0.5)) {
    throw ParameterError("edge_trim=" + std::to_string(edge_trim) + " outside [0, 0.5)");
  }
  const std::size_t n = eigenvalues.size();
  const auto trim = static_cast<std::size_t>(std::floor(edge_trim * static_cast<double>(n)));
  const std::size_t kept = n - 2 * trim;
  if (n < 2 * trim || kept < 20) {
    throw ParameterError("only " + std::to_string(kept) + " levels left after trimming " +
                         std::to_string(trim) + " per edge; need at least 20");
  }
  std::vector<double> gaps;
  gaps.reserve(kept - 1);
  for (std::size_t i = trim + 1; i < trim + kept; ++i) {
    gaps.push_back(std::max(0.0, eigenvalues[i] - eigenvalues[i - 1]));
  }
  return SpacingSample::normalized(std::move(gaps));
}

double wigner_dyson_pdf(double s) {
  using std::numbers::pi;
  return 0.5 * pi * s * std::exp(-0.25 * pi * s * s);
}

double wigner_dyson_cdf(double s) { return 1.0 - std::exp(-0.25 * std::numbers::pi * s * s); }

double poisson_cdf(double s) { return 1.0 - std::exp(-s); }

double crossing_point() {
  static const double root = [] {
    // exp(-s) - P_WD(s) is positive at small s and negative at s = 1.
    auto f = [](double s) { return std::exp(-s) - wigner_dyson_pdf(s); };
    double lo = 0.1, hi = 1.0;
    while (hi - lo > 1e-13) {
      const double mid = 0.5 * (lo + hi);
      (f(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }();
  return root;
}

double eta(const SpacingSample& sample, const EtaOptions& options) {
  if (sample.spacings.empty()) throw ParameterError("eta of an empty spacing sample");
  if (!(options.bin_width > 0.0)) throw ParameterError("bin_width must be positive");
  const double s0 = crossing_point();
  if (options.histogram_max < s0) throw ParameterError("histogram range must cover s0");

  const auto n_bins = static_cast<std::size_t>(std::ceil(options.histogram_max / options.bin_width));
  std::vector<std::size_t> counts(n_bins, 0);
  for (double s : sample.spacings) {
    if (s < 0.0) throw ParameterError("negative spacing");
    if (s >= options.histogram_max) continue;
    const auto k = std::min(n_bins - 1, static_cast<std::size_t>(s / options.bin_width));
    ++counts[k];
  }

  const double total = static_cast<double>(sample.spacings.size());
  double numerator = 0.0;
  for (std::size_t k = 0; k < n_bins; ++k) {
    const double lo = static_cast<double>(k) * options.bin_width;
    if (lo >= s0) break;
    const double hi = std::min(lo + options.bin_width, s0);
    const double fraction = (hi - lo) / options.bin_width;
    const double mass = fraction * static_cast<double>(counts[k]) / total;
    numerator += mass - (wigner_dyson_cdf(hi) - wigner_dyson_cdf(lo));
  }
  const double denominator = poisson_cdf(s0) - wigner_dyson_cdf(s0);
  return numerator / denominator;
}

}  // namespace spinent
