#include "spinent/two_qubit.hpp"

#include <cmath>

#include "spinent/error.hpp"

namespace spinent {

TwoQubitAnalytic solve_two_qubit(double coupling, double h1, double h2) {
  if (!std::isfinite(coupling) || !std::isfinite(h1) || !std::isfinite(h2)) {
    throw ParameterError("two-qubit parameters must be finite");
  }
  TwoQubitAnalytic out;
  out.coupling = coupling;
  out.sigma = h1 + h2;
  out.delta = h1 - h2;
  if (coupling == 0.0 && out.delta == 0.0) {
    throw ParameterError("J = 0 with h1 = h2: one-excitation block is degenerate, eigenvectors undefined");
  }

  const double r = std::hypot(coupling, out.delta);
  out.energy_plus = -0.25 * coupling + 0.5 * r;
  out.energy_minus = -0.25 * coupling - 0.5 * r;
  out.energy_up_up = 0.5 * out.sigma + 0.25 * coupling;
  out.energy_down_down = -0.5 * out.sigma + 0.25 * coupling;

  // The block is -J/4 + (r/2) [[cos t, sin t], [sin t, -cos t]].
  const double half = 0.5 * std::atan2(coupling, out.delta);
  out.vector_plus = {std::cos(half), std::sin(half)};
  out.vector_minus = {-std::sin(half), std::cos(half)};

  // Equals 2|bc| for either eigenvector (a = d = 0).
  const double c = coupling == 0.0 ? 0.0 : 1.0 / std::sqrt(1.0 + (out.delta * out.delta) / (coupling * coupling));
  out.concurrence_plus = c;
  out.concurrence_minus = c;
  out.npc_plus = 1.0 / (1.0 - 0.5 * c * c);
  out.npc_minus = out.npc_plus;
  return out;
}

std::optional<std::array<double, 2>> closed_form_eigenvector(double coupling, double delta, int sign,
                                                             double min_denominator) {
  const double r = std::hypot(coupling, delta);
  const double s = sign >= 0 ? 1.0 : -1.0;
  const double norm2 = 2.0 * (coupling * coupling + delta * delta) - s * 2.0 * delta * r;
  if (!(norm2 > 0.0)) return std::nullopt;
  const double norm = std::sqrt(norm2);
  if (norm < min_denominator) return std::nullopt;
  return std::array<double, 2>{coupling / norm, -(delta - s * r) / norm};
}

}  // namespace spinent
