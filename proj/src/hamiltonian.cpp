#include "spinent/hamiltonian.hpp"

#include <cmath>
#include <string>

#include "spinent/error.hpp"

namespace spinent {

ChainSpec ChainSpec::uniform(int length, double jz, double jxy, bool edge_defects) {
  return ChainSpec{length, jz, jxy, std::vector<double>(static_cast<std::size_t>(std::max(length, 0)), 0.0),
                   edge_defects};
}

void ChainSpec::validate() const {
  if (length < 1) throw ParameterError("chain length L=" + std::to_string(length) + " must be positive");
  if (fields.size() != static_cast<std::size_t>(length)) {
    throw ParameterError("expected " + std::to_string(length) + " fields, got " +
                         std::to_string(fields.size()));
  }
  if (!std::isfinite(jz) || !std::isfinite(jxy)) throw ParameterError("couplings must be finite");
  for (std::size_t n = 0; n < fields.size(); ++n) {
    if (!std::isfinite(fields[n])) {
      throw ParameterError("field h_" + std::to_string(n + 1) + " is not finite");
    }
  }
}

double diagonal_energy(const ChainSpec& spec, Word word) {
  auto z = [word](int site) { return ((word >> (site - 1)) & 1u) ? 1.0 : -1.0; };
  const int L = spec.length;
  double e = 0.0;
  for (int n = 1; n <= L; ++n) e += 0.5 * spec.fields[n - 1] * z(n);
  for (int n = 1; n < L; ++n) e += 0.25 * spec.jz * z(n) * z(n + 1);
  if (spec.edge_defects) {
    e -= 0.5 * spec.jz * 0.5 * (1.0 + z(1));
    e -= 0.5 * spec.jz * 0.5 * (1.0 + z(L));
  }
  return e;
}

SectorHamiltonian build_hamiltonian(const ChainSpec& spec, const SectorBasis& basis) {
  spec.validate();
  if (spec.length != basis.length()) {
    throw ParameterError("chain length " + std::to_string(spec.length) +
                         " does not match basis length " + std::to_string(basis.length()));
  }
  const auto dim = static_cast<Eigen::Index>(basis.dimension());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  const double hop = 0.5 * spec.jxy;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Word w = basis.state(static_cast<std::size_t>(i));
    h(i, i) = diagonal_energy(spec, w);
    // (sx sx + sy sy)/4 flips an antiparallel neighbour pair with amplitude 1/2.
    for (int n = 0; n + 1 < spec.length; ++n) {
      const Word pair = (Word{1} << n) | (Word{1} << (n + 1));
      const Word bits = w & pair;
      if (bits == 0 || bits == pair) continue;
      const auto j = static_cast<Eigen::Index>(basis.index_of(w ^ pair));
      if (j > i) {
        h(i, j) = hop;
        h(j, i) = hop;
      }
    }
  }
  return SectorHamiltonian{basis, std::move(h)};
}

}  // namespace spinent
