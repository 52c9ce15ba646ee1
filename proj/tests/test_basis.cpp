#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "spinent/basis.hpp"
#include "spinent/error.hpp"

using namespace spinent;

TEST_CASE("12 sites with 6 excitations give 924 states") {
  CHECK(build_sector(12, 6).dimension() == 924);
}

TEST_CASE("two sites, one excitation") {
  const auto b = build_sector(2, 1);
  REQUIRE(b.dimension() == 2);
  // |01> = site 1 up (bit 0), |10> = site 2 up (bit 1).
  CHECK(b.state(0) == 0b01u);
  CHECK(b.state(1) == 0b10u);
}

TEST_CASE("sector dimensions against brute-force enumeration") {
  for (int L = 1; L <= 12; ++L) {
    std::size_t total = 0;
    for (int k = 0; k <= L; ++k) {
      std::size_t count = 0;
      for (Word w = 0; w < (Word{1} << L); ++w) count += std::popcount(w) == k;
      const auto b = build_sector(L, k);
      CHECK(b.dimension() == count);
      CHECK(b.dimension() == binomial(L, k));
      total += b.dimension();
    }
    CHECK(total == (std::size_t{1} << L));
  }
  CHECK(build_sector(4, 2).dimension() == 6);
}

TEST_CASE("sector invariants") {
  for (auto [L, k] : {std::pair{4, 2}, {7, 3}, {10, 5}, {12, 6}, {9, 0}, {9, 9}}) {
    const auto b = build_sector(L, k);
    const auto states = b.states();
    CHECK(std::is_sorted(states.begin(), states.end()));
    CHECK(std::adjacent_find(states.begin(), states.end()) == states.end());
    std::uint64_t popsum = 0;
    for (std::size_t i = 0; i < b.dimension(); ++i) {
      CHECK(std::popcount(states[i]) == k);
      CHECK(states[i] < (Word{1} << L));
      CHECK(b.index_of(states[i]) == i);
      CHECK(b.state(b.index_of(states[i])) == states[i]);
      popsum += static_cast<std::uint64_t>(std::popcount(states[i]));
    }
    CHECK(popsum == static_cast<std::uint64_t>(k) * binomial(L, k));
  }
}

TEST_CASE("lookup of a word outside the sector") {
  const auto b = build_sector(4, 2);
  CHECK(b.find(0b0111) == -1);
  CHECK_THROWS_AS(b.index_of(0b0111), ParameterError);
}

TEST_CASE("parameter errors name the bad value") {
  CHECK_THROWS_WITH_AS(build_sector(4, 5), doctest::Contains("n_up=5"), ParameterError);
  CHECK_THROWS_WITH_AS(build_sector(4, -1), doctest::Contains("n_up=-1"), ParameterError);
  CHECK_THROWS_WITH_AS(build_sector(0, 0), doctest::Contains("L=0"), ParameterError);
  CHECK_THROWS_WITH_AS(build_sector(25, 3), doctest::Contains("L=25"), ParameterError);
  CHECK_THROWS_AS(build_sector(14, 7, 12), ParameterError);
}

TEST_CASE("site_bit convention") {
  CHECK(site_bit(0b1, 1) == 1);
  CHECK(site_bit(0b1, 2) == 0);
  CHECK(site_bit(0xFFF, 7, 12) == 1);
  CHECK(site_bit(0b100, 3, 3) == 1);
  CHECK_THROWS_AS(site_bit(0b1, 0, 12), ParameterError);
  CHECK_THROWS_AS(site_bit(0b1, 13, 12), ParameterError);
}
