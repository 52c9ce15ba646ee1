#pragma once

#include <Eigen/Dense>
#include <vector>

#include "spinent/basis.hpp"

namespace spinent {

/// Open Heisenberg chain with nearest-neighbour Ising (jz) and hopping (jxy)
/// couplings and per-site Zeeman splittings. With edge_defects set, sites 1
/// and L carry an extra -jz/2 on their up state.
struct ChainSpec {
  int length = 0;
  double jz = 1.0;
  double jxy = 1.0;
  std::vector<double> fields;
  bool edge_defects = false;

  /// Uniform zero fields on `length` sites.
  static ChainSpec uniform(int length, double jz, double jxy, bool edge_defects);

  /// Throws ParameterError on size mismatch or non-finite values.
  void validate() const;
};

struct SectorHamiltonian {
  SectorBasis basis;
  Eigen::MatrixXd matrix;
};

/// Diagonal energy of a single basis word.
double diagonal_energy(const ChainSpec& spec, Word word);

SectorHamiltonian build_hamiltonian(const ChainSpec& spec, const SectorBasis& basis);

}  // namespace spinent
