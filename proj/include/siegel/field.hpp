#pragma once

// Coefficient fields for the exact polynomial engine: word-sized prime fields
// and the rationals (GMP). Every field type exposes the same small surface so
// the polynomial and Groebner code can be instantiated over any of them.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace siegel {

template <std::uint32_t P>
class Fp {
  static_assert(P > 2 && P < (1u << 31), "prime must fit in 31 bits");

 public:
  static constexpr std::uint32_t kPrime = P;

  constexpr Fp() = default;

  static constexpr Fp zero() { return Fp(); }
  static constexpr Fp one() { return raw(1); }

  static Fp from_int(long long v) {
    long long r = v % static_cast<long long>(P);
    if (r < 0) r += P;
    return raw(static_cast<std::uint32_t>(r));
  }
  static Fp from_mpz(const mpz_class& z) {
    mpz_class r = z % P;
    if (r < 0) r += P;
    return raw(static_cast<std::uint32_t>(r.get_ui()));
  }
  static Fp from_rational(const mpq_class& q) {
    Fp den = from_mpz(q.get_den());
    if (den.is_zero()) throw std::domain_error("denominator divisible by the field prime");
    return from_mpz(q.get_num()) * den.inv();
  }

  static std::string name() { return "GF(" + std::to_string(P) + ")"; }
  static constexpr bool kExact = false;

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  std::uint32_t value() const { return v_; }

  Fp operator+(Fp o) const {
    std::uint32_t s = v_ + o.v_;
    return raw(s >= P ? s - P : s);
  }
  Fp operator-(Fp o) const { return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + P - o.v_); }
  Fp operator-() const { return raw(v_ == 0 ? 0 : P - v_); }
  Fp operator*(Fp o) const {
    return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % P));
  }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  bool operator==(const Fp&) const = default;

  Fp inv() const {
    if (v_ == 0) throw std::domain_error("inverse of zero");
    // extended Euclid on (v, P)
    long long a = v_, b = P, x0 = 1, x1 = 0;
    while (b != 0) {
      long long q = a / b;
      std::tie(a, b) = std::pair(b, a - q * b);
      std::tie(x0, x1) = std::pair(x1, x0 - q * x1);
    }
    return from_int(x0);
  }

  // Rational reconstruction n/d with |n|, d <= sqrt(P/2); nullopt if none.
  std::optional<mpq_class> lift() const {
    long long r0 = P, r1 = v_, s0 = 0, s1 = 1;
    const long long bound = 32767;  // floor(sqrt(P/2)) for 31-bit primes
    while (r1 > bound) {
      long long q = r0 / r1;
      std::tie(r0, r1) = std::pair(r1, r0 - q * r1);
      std::tie(s0, s1) = std::pair(s1, s0 - q * s1);
    }
    if (s1 == 0 || (s1 < 0 ? -s1 : s1) > bound) return std::nullopt;
    mpq_class q(mpz_class(static_cast<long>(r1)), mpz_class(static_cast<long>(s1)));
    q.canonicalize();
    return q;
  }

  std::string to_string() const {
    if (auto q = lift()) return q->get_str();
    return "[" + std::to_string(v_) + "]";
  }

 private:
  static constexpr Fp raw(std::uint32_t v) {
    Fp f;
    f.v_ = v;
    return f;
  }
  std::uint32_t v_ = 0;
};

class Rational {
 public:
  Rational() = default;
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(mpq_class(1)); }
  static Rational from_int(long long v) { return Rational(mpq_class(static_cast<long>(v))); }
  static Rational from_mpz(const mpz_class& z) { return Rational(mpq_class(z)); }
  static Rational from_rational(const mpq_class& q) { return Rational(q); }

  static std::string name() { return "QQ"; }
  static constexpr bool kExact = true;

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  const mpq_class& value() const { return v_; }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  bool operator==(const Rational& o) const { return v_ == o.v_; }

  Rational inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1 / v_));
  }
  std::optional<mpq_class> lift() const { return v_; }
  std::string to_string() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

// The two word-sized primes used for dual-prime verification runs.
inline constexpr std::uint32_t kPrime1 = 2147483647u;
inline constexpr std::uint32_t kPrime2 = 2147483629u;
using GF1 = Fp<kPrime1>;
using GF2 = Fp<kPrime2>;

}  // namespace siegel
