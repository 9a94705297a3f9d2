#pragma once

// Checked 128-bit integers and exact rationals.
//
// Every arithmetic operation on Integer traps on overflow by throwing
// OverflowError; nothing wraps around silently.

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tricover {

class OverflowError : public std::overflow_error {
public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

/// Invalid building data (parity violation, asymmetric pairing, ...).
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

class Integer {
public:
  using raw_type = __int128;

  constexpr Integer() = default;
  constexpr Integer(std::int64_t v) : value_(v) {}  // NOLINT: implicit by intent
  constexpr Integer(int v) : value_(v) {}           // NOLINT

  static constexpr Integer from_raw(raw_type v) {
    Integer r;
    r.value_ = v;
    return r;
  }

  constexpr raw_type raw() const { return value_; }

  bool fits_int64() const {
    return value_ >= std::numeric_limits<std::int64_t>::min() &&
           value_ <= std::numeric_limits<std::int64_t>::max();
  }

  std::int64_t to_int64() const {
    if (!fits_int64()) throw OverflowError("integer does not fit in 64 bits: " + to_string());
    return static_cast<std::int64_t>(value_);
  }

  std::string to_string() const {
    if (value_ == 0) return "0";
    // Work on the negative side so the minimum value needs no special case.
    raw_type v = value_ > 0 ? -value_ : value_;
    std::string digits;
    while (v != 0) {
      digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
      v /= 10;
    }
    if (value_ < 0) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
  }

  static Integer parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    bool negative = false;
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+') {
      negative = text[0] == '-';
      pos = 1;
    }
    if (pos == text.size()) throw std::invalid_argument("malformed integer: " + std::string(text));
    Integer acc;
    for (; pos < text.size(); ++pos) {
      const char ch = text[pos];
      if (ch < '0' || ch > '9') throw std::invalid_argument("malformed integer: " + std::string(text));
      acc = acc * 10 + (negative ? -(ch - '0') : (ch - '0'));
    }
    return acc;
  }

  friend Integer operator+(Integer a, Integer b) {
    raw_type r;
    if (__builtin_add_overflow(a.value_, b.value_, &r)) throw OverflowError("integer overflow in addition");
    return from_raw(r);
  }
  friend Integer operator-(Integer a, Integer b) {
    raw_type r;
    if (__builtin_sub_overflow(a.value_, b.value_, &r)) throw OverflowError("integer overflow in subtraction");
    return from_raw(r);
  }
  friend Integer operator*(Integer a, Integer b) {
    raw_type r;
    if (__builtin_mul_overflow(a.value_, b.value_, &r)) throw OverflowError("integer overflow in multiplication");
    return from_raw(r);
  }
  Integer operator-() const { return Integer{} - *this; }

  /// Truncating division, as for built-in integers.
  friend Integer operator/(Integer a, Integer b) {
    if (b.value_ == 0) throw std::domain_error("integer division by zero");
    if (b.value_ == -1) return -a;
    return from_raw(a.value_ / b.value_);
  }
  friend Integer operator%(Integer a, Integer b) {
    if (b.value_ == 0) throw std::domain_error("integer division by zero");
    if (b.value_ == -1) return Integer{};
    return from_raw(a.value_ % b.value_);
  }

  Integer& operator+=(Integer o) { return *this = *this + o; }
  Integer& operator-=(Integer o) { return *this = *this - o; }
  Integer& operator*=(Integer o) { return *this = *this * o; }

  friend constexpr bool operator==(Integer, Integer) = default;
  friend constexpr auto operator<=>(Integer a, Integer b) { return a.value_ <=> b.value_; }

  friend std::ostream& operator<<(std::ostream& os, Integer v) { return os << v.to_string(); }

private:
  raw_type value_ = 0;
};

inline Integer abs(Integer v) { return v < 0 ? -v : v; }

inline Integer gcd(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Floor division (rounds toward negative infinity).
inline Integer floor_div(Integer a, Integer b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

/// Exact rational in lowest terms with positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(Integer n) : num_(n) {}  // NOLINT
  Rational(std::int64_t n) : num_(n) {}  // NOLINT
  Rational(int n) : num_(n) {}  // NOLINT
  Rational(Integer n, Integer d) : num_(n), den_(d) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    normalize();
  }

  Integer num() const { return num_; }
  Integer den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Integer to_integer() const {
    if (!is_integer()) throw DataError("expected an integer, got " + to_string());
    return num_;
  }

  /// "p" when integral, otherwise "p/q".
  std::string to_string() const {
    return is_integer() ? num_.to_string() : num_.to_string() + "/" + den_.to_string();
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const Integer g = gcd(a.den_, b.den_);
    return {a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g), a.den_ / g * b.den_};
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    const Integer g1 = gcd(a.num_, b.den_);
    const Integer g2 = gcd(b.num_, a.den_);
    const Integer s1 = g1 == 0 ? Integer{1} : g1;
    const Integer s2 = g2 == 0 ? Integer{1} : g2;
    return {(a.num_ / s1) * (b.num_ / s2), (a.den_ / s2) * (b.den_ / s1)};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return a * Rational(b.den_, b.num_);
  }
  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const Integer g = gcd(num_, den_);
    if (g > 1) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }

  Integer num_ = 0;
  Integer den_ = 1;
};

inline Rational abs(const Rational& r) { return r < Rational{} ? -r : r; }

}  // namespace tricover
