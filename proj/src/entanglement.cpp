#include "spinent/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <string>

#include "spinent/error.hpp"

namespace spinent {
namespace {

constexpr double kStateTolerance = 1e-10;

// sigma_y (x) sigma_y in the {|11>, |10>, |01>, |00>} ordering.
const Eigen::Matrix4d& spin_flip() {
  static const Eigen::Matrix4d m = [] {
    Eigen::Matrix4d s;
    s << 0, 0, 0, -1,
         0, 0, 1, 0,
         0, 1, 0, 0,
        -1, 0, 0, 0;
    return s;
  }();
  return m;
}

}  // namespace

PairReducer::PairReducer(const SectorBasis& basis, int p, int q) : p_(p), q_(q) {
  const int L = basis.length();
  if (p < 1 || p > L || q < 1 || q > L) {
    throw ParameterError("pair (" + std::to_string(p) + ", " + std::to_string(q) + ") outside [1, " +
                         std::to_string(L) + "]");
  }
  if (p >= q) {
    throw ParameterError("pair sites must satisfy p < q, got (" + std::to_string(p) + ", " +
                         std::to_string(q) + ")");
  }
  const Word bp = Word{1} << (p - 1);
  const Word bq = Word{1} << (q - 1);
  const Word mask = bp | bq;
  rows_.resize(basis.dimension());
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    const Word w = basis.state(i);
    rows_[i] = static_cast<std::uint8_t>(pair_index((w & bp) ? 1 : 0, (w & bq) ? 1 : 0));
    // Number conservation leaves |10><01| as the only coherence; both sides
    // share the environment, so the partner is the word with p, q swapped.
    if ((w & mask) == bp) {
      swaps_.emplace_back(static_cast<Eigen::Index>(i),
                          static_cast<Eigen::Index>(basis.index_of((w & ~mask) | bq)));
    }
  }
}

TwoQubitState PairReducer::reduce(const Eigen::Ref<const Eigen::VectorXd>& state) const {
  if (static_cast<std::size_t>(state.size()) != rows_.size()) {
    throw ParameterError("state has " + std::to_string(state.size()) + " amplitudes, sector has " +
                         std::to_string(rows_.size()));
  }
  std::array<double, 4> diag{};
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const double a = state[static_cast<Eigen::Index>(i)];
    diag[rows_[i]] += a * a;
  }
  double coherence = 0.0;
  for (const auto& [i, j] : swaps_) coherence += state[i] * state[j];

  TwoQubitState out;
  out.p = p_;
  out.q = q_;
  for (int k = 0; k < 4; ++k) out.rho(k, k) = diag[static_cast<std::size_t>(k)];
  out.rho(pair_index(1, 0), pair_index(0, 1)) = coherence;
  out.rho(pair_index(0, 1), pair_index(1, 0)) = coherence;
  return out;
}

TwoQubitState reduce_to_pair(const Eigen::Ref<const Eigen::VectorXd>& state, const SectorBasis& basis, int p,
                             int q) {
  return PairReducer(basis, p, q).reduce(state);
}

double concurrence_mixed(const TwoQubitState& state) { return concurrence_mixed(state.rho); }

double concurrence_mixed(const Eigen::Matrix4d& rho) {
  const double trace_defect = std::abs(rho.trace() - 1.0);
  const double asymmetry = (rho - rho.transpose()).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(rho);
  const double min_eig = es.info() == Eigen::Success ? es.eigenvalues().minCoeff() : -1.0;
  if (trace_defect > kStateTolerance || asymmetry > kStateTolerance || min_eig < -kStateTolerance) {
    std::ostringstream msg;
    msg << "invalid two-qubit state: |tr(rho)-1|=" << trace_defect << ", asymmetry=" << asymmetry
        << ", min eigenvalue=" << min_eig;
    throw NumericalError(msg.str());
  }

  // With rho = W W^T, W = U sqrt(P), the square roots of the eigenvalues of
  // rho * rho_tilde are the singular values of W^T (sy x sy) W. Working with
  // them directly avoids square roots of rounding-level eigenvalues.
  const Eigen::Vector4d weights = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Eigen::Matrix4d w = es.eigenvectors() * weights.asDiagonal();
  const Eigen::Matrix4d tau = w.transpose() * spin_flip() * w;
  const Eigen::Vector4d lambda = Eigen::JacobiSVD<Eigen::Matrix4d>(tau).singularValues();
  return std::clamp(lambda[0] - lambda[1] - lambda[2] - lambda[3], 0.0, 1.0);
}

double concurrence_pure(double a, double b, double c, double d) {
  const double norm2 = a * a + b * b + c * c + d * d;
  if (!(std::abs(norm2 - 1.0) <= 1e-10)) {
    throw ParameterError("pure-state amplitudes not normalized, |psi|^2=" + std::to_string(norm2));
  }
  return 2.0 * std::abs(a * d - b * c);
}

}  // namespace spinent
