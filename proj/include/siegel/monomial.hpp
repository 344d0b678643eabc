#pragma once

// Dense exponent vectors packed into two 64-bit words, one byte per variable.
// Exponents stay below 128 so byte-parallel arithmetic never carries.

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace siegel {

inline constexpr int kMaxVars = 16;

class Monomial {
 public:
  Monomial() = default;

  static Monomial from_exponents(std::span<const int> e) {
    if (e.size() > kMaxVars) throw std::invalid_argument("too many variables");
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) m.set(static_cast<int>(i), e[i]);
    return m;
  }
  static Monomial variable(int i, int power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  int exp(int i) const { return static_cast<int>((w_[i >> 3] >> ((i & 7) * 8)) & 0xffu); }
  void set(int i, int e) {
    if (e < 0 || e > 127) throw std::out_of_range("exponent out of range");
    const int old = exp(i);
    const int shift = (i & 7) * 8;
    w_[i >> 3] = (w_[i >> 3] & ~(std::uint64_t{0xff} << shift)) |
                 (static_cast<std::uint64_t>(e) << shift);
    deg_ = deg_ - old + e;
  }
  int degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  Monomial operator*(const Monomial& o) const {
    if (deg_ + o.deg_ > 127) check_product(o);
    Monomial r;
    r.w_[0] = w_[0] + o.w_[0];
    r.w_[1] = w_[1] + o.w_[1];
    r.deg_ = deg_ + o.deg_;
    return r;
  }
  // Requires o | *this.
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    r.w_[0] = w_[0] - o.w_[0];
    r.w_[1] = w_[1] - o.w_[1];
    r.deg_ = deg_ - o.deg_;
    return r;
  }

  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    constexpr std::uint64_t kHigh = 0x8080808080808080ull;
    return ((((o.w_[0] | kHigh) - w_[0]) & kHigh) == kHigh) &&
           ((((o.w_[1] | kHigh) - w_[1]) & kHigh) == kHigh);
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      const int ea = a.exp(i), eb = b.exp(i);
      if (ea || eb) r.set(i, ea > eb ? ea : eb);
    }
    return r;
  }
  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      const int ea = a.exp(i), eb = b.exp(i);
      if (ea && eb) r.set(i, ea < eb ? ea : eb);
    }
    return r;
  }
  static bool coprime(const Monomial& a, const Monomial& b) {
    return (a.support() & b.support()) == 0;
  }

  std::uint32_t support() const {
    std::uint32_t s = 0;
    for (int i = 0; i < kMaxVars; ++i)
      if (exp(i)) s |= 1u << i;
    return s;
  }

  // Graded reverse lexicographic comparison: -1, 0, +1.
  static int grevlex(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_ ? -1 : 1;
    return revlex(a, b);
  }
  // Reverse lexicographic tie-break on raw exponent vectors: at the last
  // variable where they differ, the smaller exponent is the larger monomial.
  static int revlex(const Monomial& a, const Monomial& b) {
    for (int word = 1; word >= 0; --word) {
      const std::uint64_t x = a.w_[word] ^ b.w_[word];
      if (x == 0) continue;
      const int byte = (63 - std::countl_zero(x)) / 8;
      const int ea = static_cast<int>((a.w_[word] >> (byte * 8)) & 0xffu);
      const int eb = static_cast<int>((b.w_[word] >> (byte * 8)) & 0xffu);
      return ea < eb ? 1 : -1;
    }
    return 0;
  }

  bool operator==(const Monomial& o) const { return w_ == o.w_; }

  std::size_t hash() const {
    std::uint64_t h = w_[0] * 0x9e3779b97f4a7c15ull ^ (w_[1] + 0x632be59bd9b4e019ull);
    h ^= h >> 29;
    return static_cast<std::size_t>(h * 0xbf58476d1ce4e5b9ull);
  }

  std::vector<int> exponents(int nvars) const {
    std::vector<int> e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = exp(i);
    return e;
  }

 private:
  void check_product(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exp(i) + o.exp(i) > 127) throw std::overflow_error("monomial exponent overflow");
  }

  std::array<std::uint64_t, 2> w_{};
  int deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace siegel
