#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "siegel/chars.hpp"

using namespace siegel;

TEST_CASE("ten even and six odd characteristics") {
  int ne = 0, no = 0;
  for (int b = 0; b < 16; ++b) (Characteristic::from_bits(b).is_even() ? ne : no)++;
  CHECK(ne == 10);
  CHECK(no == 6);
  for (int i = 1; i <= 10; ++i) CHECK(even(i).is_even());
  for (int i = 1; i <= 6; ++i) CHECK_FALSE(odd(i).is_even());
  CHECK(even(10) == Characteristic(1, 1, 1, 1));
  CHECK(odd(1) == Characteristic(0, 1, 0, 1));
  CHECK(even_index(Characteristic(1, 0, 0, 1)) == 8);
  CHECK(odd_index(Characteristic(1, 0, 0, 1)) == 0);
  CHECK_THROWS_AS(even(11), std::out_of_range);
}

TEST_CASE("azygetic quadruples") {
  // the table printed for D(i,j), frozen
  CHECK(azygetic_quadruple(1, 2) == std::array<int, 4>{7, 8, 9, 10});
  CHECK(azygetic_quadruple(1, 5) == std::array<int, 4>{3, 4, 6, 10});
  CHECK(azygetic_quadruple(5, 6) == std::array<int, 4>{5, 6, 7, 8});
  CHECK(azygetic_quadruple(3, 4) == std::array<int, 4>{5, 6, 9, 10});
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) CHECK(azygetic_quadruple(i, j).size() == 4);
  CHECK_THROWS_AS(azygetic_quadruple(2, 1), std::invalid_argument);
  CHECK_FALSE(is_azygetic(odd(1), odd(1), even(1)));
}

TEST_CASE("five-term decompositions") {
  std::size_t total = 0;
  for (int n = 1; n <= 6; ++n) {
    const auto d = five_term_decompositions(n);
    CHECK(d.size() == 12);
    total += d.size();
  }
  CHECK(total == 72);
  const auto d1 = five_term_decompositions(1);
  CHECK(std::find(d1.begin(), d1.end(), std::array<int, 5>{3, 5, 6, 8, 9}) != d1.end());
}

TEST_CASE("symplectic relabellings") {
  const auto& g = symplectic_permutations();
  CHECK(g.size() == 720);
  CHECK(g.front() == CharPermutation::identity());
  // every element permutes both label sets and preserves azygetic triples
  for (const auto& p : g) {
    CHECK(std::set<int>(p.even.begin(), p.even.end()).size() == 10);
    CHECK(std::set<int>(p.odd.begin(), p.odd.end()).size() == 6);
  }
  const auto& p = g[17];
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      for (int k = 1; k <= 10; ++k)
        CHECK(is_azygetic(odd(i), odd(j), even(k)) ==
              is_azygetic(odd(p.odd[i - 1] + 1), odd(p.odd[j - 1] + 1), even(p.even[k - 1] + 1)));
}
