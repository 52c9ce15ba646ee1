#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "spinent/hamiltonian.hpp"

namespace spinent {

/// Ascending eigenvalues; column j of `eigenvectors` is the normalized
/// amplitude vector a^j over the sector basis.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;

  Eigen::Index size() const { return eigenvalues.size(); }
};

SpectralDecomposition diagonalize(const Eigen::MatrixXd& matrix);
inline SpectralDecomposition diagonalize(const SectorHamiltonian& h) { return diagonalize(h.matrix); }

/// Number of principal components 1 / sum_i a_i^4. Rejects zero vectors and
/// vectors whose norm is off by more than 1e-8.
double npc(const Eigen::Ref<const Eigen::VectorXd>& amplitudes);

/// Mean of npc over all eigenvectors, accumulated in column order.
double mean_npc(const SpectralDecomposition& spectrum);

/// Level spacings normalized to unit mean.
struct SpacingSample {
  std::vector<double> spacings;

  /// Rescale raw nonnegative spacings to unit mean.
  static SpacingSample normalized(std::vector<double> raw);
};

/// Drops floor(edge_trim * n) levels from each end of the ascending
/// spectrum and returns the consecutive gaps of the rest over their mean.
/// Requires at least 20 levels to survive trimming.
SpacingSample unfolded_spacings(std::span<const double> eigenvalues, double edge_trim);

/// Crossing point of exp(-s) and the Wigner surmise, by bisection.
double crossing_point();

inline constexpr double kPaperCrossingPoint = 0.4729;

double wigner_dyson_pdf(double s);
double wigner_dyson_cdf(double s);
double poisson_cdf(double s);

struct EtaOptions {
  double bin_width = 0.05;
  double histogram_max = 5.0;
};

/// Distance of the spacing distribution from Wigner-Dyson on [0, s0],
/// relative to Poisson: 1 for Poisson statistics, 0 for Wigner-Dyson.
/// The sample histogram is integrated bin by bin with the bin containing
/// s0 pro-rated; the reference integrals are analytic.
double eta(const SpacingSample& sample, const EtaOptions& options = {});

}  // namespace spinent
