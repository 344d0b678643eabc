#include "siegel/chars.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace siegel {

std::string Characteristic::to_string() const {
  std::string s = "(";
  s += char('0' + a(0));
  s += char('0' + a(1));
  s += ';';
  s += char('0' + b(0));
  s += char('0' + b(1));
  return s + ")";
}

Parity parity(Characteristic m) { return m.is_even() ? Parity::Even : Parity::Odd; }

const std::array<Characteristic, 10>& even_characteristics() {
  static const std::array<Characteristic, 10> kEven = {
      Characteristic(0, 0, 0, 0), Characteristic(0, 0, 0, 1), Characteristic(0, 0, 1, 0),
      Characteristic(0, 0, 1, 1), Characteristic(0, 1, 0, 0), Characteristic(0, 1, 1, 0),
      Characteristic(1, 0, 0, 0), Characteristic(1, 0, 0, 1), Characteristic(1, 1, 0, 0),
      Characteristic(1, 1, 1, 1)};
  return kEven;
}

const std::array<Characteristic, 6>& odd_characteristics() {
  static const std::array<Characteristic, 6> kOdd = {
      Characteristic(0, 1, 0, 1), Characteristic(0, 1, 1, 1), Characteristic(1, 0, 1, 0),
      Characteristic(1, 0, 1, 1), Characteristic(1, 1, 0, 1), Characteristic(1, 1, 1, 0)};
  return kOdd;
}

Characteristic even(int i) {
  if (i < 1 || i > 10) throw std::out_of_range("even label must be 1..10");
  return even_characteristics()[i - 1];
}
Characteristic odd(int i) {
  if (i < 1 || i > 6) throw std::out_of_range("odd label must be 1..6");
  return odd_characteristics()[i - 1];
}

int even_index(Characteristic m) {
  const auto& e = even_characteristics();
  auto it = std::find(e.begin(), e.end(), m);
  return it == e.end() ? 0 : static_cast<int>(it - e.begin()) + 1;
}
int odd_index(Characteristic m) {
  const auto& o = odd_characteristics();
  auto it = std::find(o.begin(), o.end(), m);
  return it == o.end() ? 0 : static_cast<int>(it - o.begin()) + 1;
}

bool is_azygetic(Characteristic m1, Characteristic m2, Characteristic m3) {
  if (m1 == m2 || m1 == m3 || m2 == m3) return false;
  return m1.sign() * m2.sign() * m3.sign() * (m1 + m2 + m3).sign() == -1;
}

std::array<int, 4> azygetic_quadruple(int i, int j) {
  if (!(1 <= i && i < j && j <= 6)) throw std::invalid_argument("odd pair must satisfy 1 <= i < j <= 6");
  std::vector<int> ks;
  for (int k = 1; k <= 10; ++k)
    if (is_azygetic(odd(i), odd(j), even(k))) ks.push_back(k);
  if (ks.size() != 4)
    throw std::logic_error("azygetic set of size " + std::to_string(ks.size()) + " for an odd pair");
  return {ks[0], ks[1], ks[2], ks[3]};
}

std::vector<std::array<int, 5>> five_term_decompositions(int odd_label) {
  const Characteristic n = odd(odd_label);
  std::vector<std::array<int, 5>> out;
  for (int mask = 0; mask < 1 << 10; ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) != 5) continue;
    Characteristic s;
    std::array<int, 5> pick{};
    int c = 0;
    for (int k = 0; k < 10; ++k)
      if (mask >> k & 1) {
        s = s + even_characteristics()[k];
        pick[c++] = k + 1;
      }
    if (s == n) out.push_back(pick);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CharPermutation CharPermutation::then(const CharPermutation& next) const {
  CharPermutation r;
  for (int k = 0; k < 10; ++k) r.even[k] = next.even[even[k]];
  for (int k = 0; k < 6; ++k) r.odd[k] = next.odd[odd[k]];
  return r;
}

CharPermutation CharPermutation::identity() {
  CharPermutation r;
  for (int k = 0; k < 10; ++k) r.even[k] = k;
  for (int k = 0; k < 6; ++k) r.odd[k] = k;
  return r;
}

CharPermutation symplectic_relabelling(const std::array<std::array<int, 4>, 4>& M) {
  auto blk = [&](int r0, int c0, int r, int c) { return M[r0 + r][c0 + c]; };
  auto A = [&](int r, int c) { return blk(0, 0, r, c); };
  auto B = [&](int r, int c) { return blk(0, 2, r, c); };
  auto C = [&](int r, int c) { return blk(2, 0, r, c); };
  auto D = [&](int r, int c) { return blk(2, 2, r, c); };
  auto mod2 = [](int v) { return ((v % 2) + 2) % 2; };
  auto image = [&](Characteristic m) {
    const auto v = m.vector();
    // [[D, -C], [-B, A]] v
    std::array<int, 4> w{};
    for (int r = 0; r < 2; ++r) {
      w[r] = D(r, 0) * v[0] + D(r, 1) * v[1] - C(r, 0) * v[2] - C(r, 1) * v[3];
      w[2 + r] = -B(r, 0) * v[0] - B(r, 1) * v[1] + A(r, 0) * v[2] + A(r, 1) * v[3];
    }
    for (int r = 0; r < 2; ++r) {
      w[r] += C(r, 0) * D(r, 0) + C(r, 1) * D(r, 1);
      w[2 + r] += A(r, 0) * B(r, 0) + A(r, 1) * B(r, 1);
    }
    return Characteristic(mod2(w[0]), mod2(w[1]), mod2(w[2]), mod2(w[3]));
  };
  CharPermutation p;
  for (int k = 0; k < 10; ++k) {
    const int t = even_index(image(even_characteristics()[k]));
    if (!t) throw std::logic_error("symplectic image of an even characteristic is odd");
    p.even[k] = t - 1;
  }
  for (int k = 0; k < 6; ++k) {
    const int t = odd_index(image(odd_characteristics()[k]));
    if (!t) throw std::logic_error("symplectic image of an odd characteristic is even");
    p.odd[k] = t - 1;
  }
  return p;
}

namespace {

using Mat4 = std::array<std::array<int, 4>, 4>;

Mat4 block(const int A[2][2], const int B[2][2], const int C[2][2], const int D[2][2]) {
  Mat4 M{};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      M[r][c] = A[r][c];
      M[r][c + 2] = B[r][c];
      M[r + 2][c] = C[r][c];
      M[r + 2][c + 2] = D[r][c];
    }
  return M;
}

std::vector<Mat4> generators() {
  const int E[2][2] = {{1, 0}, {0, 1}}, Z[2][2] = {{0, 0}, {0, 0}}, mE[2][2] = {{-1, 0}, {0, -1}};
  const int S1[2][2] = {{1, 0}, {0, 0}}, S2[2][2] = {{0, 0}, {0, 1}}, S3[2][2] = {{0, 1}, {1, 0}};
  const int U[2][2] = {{1, 1}, {0, 1}}, Uinv_t[2][2] = {{1, 0}, {-1, 1}};
  const int W[2][2] = {{0, 1}, {1, 0}};
  return {block(Z, mE, E, Z),  block(E, S1, Z, E), block(E, S2, Z, E), block(E, S3, Z, E),
          block(U, Z, Z, Uinv_t), block(W, Z, Z, W)};
}

auto perm_key(const CharPermutation& p) {
  std::array<int, 16> k{};
  std::copy(p.even.begin(), p.even.end(), k.begin());
  std::copy(p.odd.begin(), p.odd.end(), k.begin() + 10);
  return k;
}

}  // namespace

const std::vector<CharPermutation>& symplectic_permutations() {
  static const std::vector<CharPermutation> kGroup = [] {
    std::vector<CharPermutation> gens;
    for (const auto& M : generators()) gens.push_back(symplectic_relabelling(M));
    std::set<std::array<int, 16>> seen;
    std::vector<CharPermutation> all{CharPermutation::identity()};
    seen.insert(perm_key(all.front()));
    for (std::size_t i = 0; i < all.size(); ++i)
      for (const auto& g : gens) {
        CharPermutation q = all[i].then(g);
        if (seen.insert(perm_key(q)).second) all.push_back(q);
      }
    std::sort(all.begin() + 1, all.end(),
              [](const CharPermutation& a, const CharPermutation& b) { return perm_key(a) < perm_key(b); });
    return all;
  }();
  return kGroup;
}

}  // namespace siegel
