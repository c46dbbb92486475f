#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace casimir {

/// Exact rational number on 128-bit integers. Every operation is
/// overflow-checked and throws std::overflow_error rather than wrapping.
class Rational {
 public:
  using Int = __int128;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  constexpr Rational(Int num, Int den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  constexpr Int num() const { return num_; }
  constexpr Int den() const { return den_; }

  constexpr bool is_zero() const { return num_ == 0; }
  constexpr bool is_integer() const { return den_ == 1; }

  double to_double() const {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
  }

  std::string str() const;

  constexpr Rational operator-() const { return Rational(checked_neg(num_), den_); }

  constexpr friend Rational operator+(const Rational& a, const Rational& b) {
    const Int g = gcd(a.den_, b.den_);
    const Int da = a.den_ / g;
    const Int db = b.den_ / g;
    return Rational(checked_add(checked_mul(a.num_, db), checked_mul(b.num_, da)),
                    checked_mul(a.den_, db));
  }
  constexpr friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  constexpr friend Rational operator*(const Rational& a, const Rational& b) {
    const Int g1 = gcd(abs(a.num_), b.den_);
    const Int g2 = gcd(abs(b.num_), a.den_);
    return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
  }
  constexpr friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return a * Rational(b.den_, b.num_);
  }

  constexpr Rational& operator+=(const Rational& o) { return *this = *this + o; }
  constexpr Rational& operator-=(const Rational& o) { return *this = *this - o; }
  constexpr Rational& operator*=(const Rational& o) { return *this = *this * o; }
  constexpr Rational& operator/=(const Rational& o) { return *this = *this / o; }

  constexpr friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  constexpr friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Int lhs = checked_mul(a.num_, b.den_);
    const Int rhs = checked_mul(b.num_, a.den_);
    return lhs <=> rhs;
  }

  /// Exact integer power, negative exponents allowed for nonzero values.
  constexpr Rational pow(int e) const {
    if (e < 0) return Rational(1) / pow(-e);
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
  }

 private:
  static constexpr Int abs(Int v) { return v < 0 ? -v : v; }
  static constexpr Int gcd(Int a, Int b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
      const Int t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  static constexpr Int checked_mul(Int a, Int b) {
    Int r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rational: overflow");
    return r;
  }
  static constexpr Int checked_add(Int a, Int b) {
    Int r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Rational: overflow");
    return r;
  }
  static constexpr Int checked_neg(Int a) { return checked_mul(a, -1); }

  constexpr void normalize() {
    if (den_ < 0) {
      num_ = checked_neg(num_);
      den_ = checked_neg(den_);
    }
    const Int g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_ = 0;
  Int den_ = 1;
};

inline std::string Rational::str() const {
  auto to_string = [](Int v) {
    if (v == 0) return std::string("0");
    const bool neg = v < 0;
    std::string s;
    while (v != 0) {
      const int digit = static_cast<int>(v % 10);
      s.insert(s.begin(), static_cast<char>('0' + (digit < 0 ? -digit : digit)));
      v /= 10;
    }
    if (neg) s.insert(s.begin(), '-');
    return s;
  };
  if (den_ == 1) return to_string(num_);
  return to_string(num_) + "/" + to_string(den_);
}

}  // namespace casimir
