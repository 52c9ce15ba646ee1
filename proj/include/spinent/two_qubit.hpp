#pragma once

#include <array>
#include <optional>

namespace spinent {

/// Closed-form eigensystem of the isotropic two-site chain. Only the
/// one-excitation block {|10>, |01>} is entangled; |11> and |00> are
/// product eigenstates with energies +-sigma/2 + J/4.
struct TwoQubitAnalytic {
  double coupling = 0.0;
  double sigma = 0.0;  // h1 + h2
  double delta = 0.0;  // h1 - h2

  double energy_plus = 0.0;
  double energy_minus = 0.0;
  double energy_up_up = 0.0;
  double energy_down_down = 0.0;

  /// Components over {|10>, |01>}.
  std::array<double, 2> vector_plus{};
  std::array<double, 2> vector_minus{};

  double concurrence_plus = 0.0;
  double concurrence_minus = 0.0;
  double npc_plus = 1.0;
  double npc_minus = 1.0;
};

/// Throws ParameterError when J = 0 and h1 = h2 (the block is degenerate
/// and the eigenvectors are not determined).
TwoQubitAnalytic solve_two_qubit(double coupling, double h1, double h2);

/// Eigenvector of the one-excitation block in the textbook normalization
/// J|10> - (delta -+ r)|01>, r = sqrt(J^2 + delta^2). Returns nullopt when the
/// normalization denominator falls below `min_denominator`.
std::optional<std::array<double, 2>> closed_form_eigenvector(double coupling, double delta, int sign,
                                                             double min_denominator = 1e-8);

}  // namespace spinent
