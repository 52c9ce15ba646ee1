#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace spinent {

/// Computational basis word of a chain. Site n (1-based) lives in bit n-1;
/// a set bit means spin up (an excitation). Printed kets therefore read
/// right-to-left: site 1 is the least-significant bit.
using Word = std::uint32_t;

/// Largest chain handled by dense diagonalization.
inline constexpr int kMaxSites = 24;

/// Spin of `site` (1-based) in `word`: 1 = up, 0 = down.
int site_bit(Word word, int site, int length = kMaxSites);

/// All L-site words with exactly n_up excitations, sorted ascending, plus
/// the inverse map. Immutable once built.
class SectorBasis {
 public:
  SectorBasis(int length, int n_up);

  int length() const { return length_; }
  int n_up() const { return n_up_; }
  std::size_t dimension() const { return states_.size(); }

  std::span<const Word> states() const { return states_; }
  Word state(std::size_t i) const { return states_[i]; }

  /// Ordinal of `word`, or -1 when the word is not in the sector.
  std::ptrdiff_t find(Word word) const;
  /// Ordinal of `word`; throws ParameterError when absent.
  std::size_t index_of(Word word) const;

 private:
  int length_;
  int n_up_;
  std::vector<Word> states_;
  std::unordered_map<Word, std::size_t> index_;
};

/// Throws ParameterError unless 1 <= L <= max_length and 0 <= n_up <= L.
SectorBasis build_sector(int length, int n_up, int max_length = kMaxSites);

std::uint64_t binomial(int n, int k);

}  // namespace spinent
