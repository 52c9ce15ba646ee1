#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "spinent/basis.hpp"

namespace spinent {

/// Reduced density matrix of sites (p, q), p < q, in the basis
/// {|11>, |10>, |01>, |00>} where the first label is site p. Amplitudes of
/// eigenstates of a real symmetric Hamiltonian are real, so rho is stored
/// as a real symmetric matrix.
struct TwoQubitState {
  Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
  int p = 0;
  int q = 0;
};

/// Row/column of rho for the pair bits (site p up, site q up).
constexpr int pair_index(int bit_p, int bit_q) { return 3 - (2 * bit_p + bit_q); }

/// Partial trace of a sector state over every site except p and q, in a
/// single pass over the basis.
TwoQubitState reduce_to_pair(const Eigen::Ref<const Eigen::VectorXd>& state, const SectorBasis& basis, int p,
                             int q);

/// Precomputed bookkeeping for reducing many states of one sector onto the
/// same pair: the rho row of every basis word and, for words with site p up
/// and q down, the index of the word with p and q exchanged.
class PairReducer {
 public:
  PairReducer(const SectorBasis& basis, int p, int q);

  TwoQubitState reduce(const Eigen::Ref<const Eigen::VectorXd>& state) const;

  int p() const { return p_; }
  int q() const { return q_; }

 private:
  int p_;
  int q_;
  std::vector<std::uint8_t> rows_;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> swaps_;
};

/// Wootters concurrence max(0, l1 - l2 - l3 - l4), where the l_i are the
/// square roots of the eigenvalues of rho * rho_tilde in decreasing order and
/// rho_tilde = (sy x sy) rho* (sy x sy). Throws NumericalError when rho is
/// not a valid state to within 1e-10 (trace, symmetry, positivity).
double concurrence_mixed(const TwoQubitState& state);
double concurrence_mixed(const Eigen::Matrix4d& rho);

/// Concurrence 2|ad - bc| of the pure state a|11> + b|10> + c|01> + d|00>.
double concurrence_pure(double a, double b, double c, double d);

}  // namespace spinent
