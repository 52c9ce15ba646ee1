#include "spinent/basis.hpp"

#include <bit>
#include <string>

#include "spinent/error.hpp"

namespace spinent {

int site_bit(Word word, int site, int length) {
  if (site < 1 || site > length) {
    throw ParameterError("site " + std::to_string(site) + " outside [1, " +
                         std::to_string(length) + "]");
  }
  return static_cast<int>((word >> (site - 1)) & 1u);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

SectorBasis::SectorBasis(int length, int n_up) : length_(length), n_up_(n_up) {
  if (length < 1 || length > kMaxSites) {
    throw ParameterError("chain length L=" + std::to_string(length) +
                         " outside [1, " + std::to_string(kMaxSites) + "]");
  }
  if (n_up < 0 || n_up > length) {
    throw ParameterError("n_up=" + std::to_string(n_up) + " outside [0, " +
                         std::to_string(length) + "]");
  }
  states_.reserve(binomial(length, n_up));
  if (n_up == 0) {
    states_.push_back(0);
  } else {
    // Gosper's hack walks the fixed-popcount words in increasing order.
    const std::uint64_t limit = std::uint64_t{1} << length;
    std::uint64_t w = (std::uint64_t{1} << n_up) - 1;
    while (w < limit) {
      states_.push_back(static_cast<Word>(w));
      const std::uint64_t c = w & (~w + 1);
      const std::uint64_t r = w + c;
      w = (((r ^ w) >> 2) / c) | r;
    }
  }
  index_.reserve(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
}

std::ptrdiff_t SectorBasis::find(Word word) const {
  const auto it = index_.find(word);
  return it == index_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

std::size_t SectorBasis::index_of(Word word) const {
  const auto it = index_.find(word);
  if (it == index_.end()) {
    throw ParameterError("word " + std::to_string(word) + " not in sector (L=" +
                         std::to_string(length_) + ", n_up=" + std::to_string(n_up_) + ")");
  }
  return it->second;
}

SectorBasis build_sector(int length, int n_up, int max_length) {
  if (length > max_length) {
    throw ParameterError("chain length L=" + std::to_string(length) +
                         " exceeds the dense limit " + std::to_string(max_length));
  }
  return SectorBasis(length, n_up);
}

}  // namespace spinent
