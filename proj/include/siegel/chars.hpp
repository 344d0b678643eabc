#pragma once

// Genus-2 theta characteristics m = (a1, a2; b1, b2) over Z/2 and the fixed
// labelling of the ten even and six odd ones used by every catalog.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace siegel {

class Characteristic {
 public:
  constexpr Characteristic() = default;
  constexpr Characteristic(int a1, int a2, int b1, int b2)
      : bits_(static_cast<std::uint8_t>((a1 & 1) << 3 | (a2 & 1) << 2 | (b1 & 1) << 1 | (b2 & 1))) {}
  static constexpr Characteristic from_bits(int bits) {
    return Characteristic(bits >> 3 & 1, bits >> 2 & 1, bits >> 1 & 1, bits & 1);
  }

  constexpr int a(int i) const { return bits_ >> (3 - i) & 1; }
  constexpr int b(int i) const { return bits_ >> (1 - i) & 1; }
  constexpr int bits() const { return bits_; }
  // Entries in the order a1, a2, b1, b2.
  constexpr std::array<int, 4> vector() const { return {a(0), a(1), b(0), b(1)}; }

  constexpr bool is_even() const { return ((a(0) * b(0) + a(1) * b(1)) & 1) == 0; }
  // e(m) = (-1)^(a^T b).
  constexpr int sign() const { return is_even() ? 1 : -1; }

  constexpr Characteristic operator+(Characteristic o) const { return from_bits(bits_ ^ o.bits_); }
  constexpr bool operator==(const Characteristic&) const = default;

  std::string to_string() const;

 private:
  std::uint8_t bits_ = 0;
};

enum class Parity { Even, Odd };
Parity parity(Characteristic m);

// m(1)..m(10) and n(1)..n(6); callers use 1-based labels via even(i), odd(i).
const std::array<Characteristic, 10>& even_characteristics();
const std::array<Characteristic, 6>& odd_characteristics();
Characteristic even(int i);
Characteristic odd(int i);
// 1-based label of an even (resp. odd) characteristic, or 0.
int even_index(Characteristic m);
int odd_index(Characteristic m);

bool is_azygetic(Characteristic m1, Characteristic m2, Characteristic m3);

// Even labels k with (n(i), n(j), m(k)) azygetic, ascending. Requires 1 <= i < j <= 6.
std::array<int, 4> azygetic_quadruple(int i, int j);

// All 5-subsets of even labels (ascending within each subset, lexicographic
// overall) whose characteristics sum to n(odd_label).
std::vector<std::array<int, 5>> five_term_decompositions(int odd_label);

// Relabelling of the even and odd characteristics induced by an element of
// Sp(4, Z) through m -> [[D, -C], [-B, A]] m + (diag(C D^T), diag(A B^T)) mod 2.
// Arrays are 0-based: even[k] is the 0-based image of m(k+1).
struct CharPermutation {
  std::array<int, 10> even{};
  std::array<int, 6> odd{};
  bool operator==(const CharPermutation&) const = default;
  CharPermutation then(const CharPermutation& next) const;
  static CharPermutation identity();
};

// The 16-point action of one integral symplectic 4x4 matrix given in block form.
CharPermutation symplectic_relabelling(const std::array<std::array<int, 4>, 4>& M);
// Closure of the relabellings of a standard generating set of Sp(4, Z); 720 elements,
// sorted, identity first.
const std::vector<CharPermutation>& symplectic_permutations();

}  // namespace siegel
