#pragma once

#include "enriques/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <variant>

namespace enriques {

/// Exact signed integer. Values live in an int64 while they fit; any
/// operation that would overflow is redone in arbitrary precision and the
/// result is demoted again when it fits.
class Integer {
 public:
  using Big = boost::multiprecision::cpp_int;

  Integer() noexcept = default;

  template <std::signed_integral T>
  Integer(T v) noexcept : rep_(static_cast<std::int64_t>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral T>
  Integer(T v) {  // NOLINT(google-explicit-constructor)
    if (v <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      rep_ = static_cast<std::int64_t>(v);
    } else {
      rep_ = Big(v);
    }
  }

  explicit Integer(const Big& v) { assign_big(v); }

  static Integer from_string(const std::string& text);

  bool is_small() const noexcept { return std::holds_alternative<std::int64_t>(rep_); }
  std::int64_t small() const noexcept { return std::get<std::int64_t>(rep_); }
  Big big() const { return is_small() ? Big(small()) : std::get<Big>(rep_); }

  bool fits_int64() const noexcept { return is_small(); }
  /// Throws Errc::Overflow when the value does not fit.
  std::int64_t to_int64() const;
  double to_double() const;
  std::string to_string() const;

  int sign() const noexcept;
  bool is_zero() const noexcept { return is_small() && small() == 0; }
  bool is_odd() const noexcept;

  Integer operator-() const;
  Integer& operator+=(const Integer& o) { return *this = *this + o; }
  Integer& operator-=(const Integer& o) { return *this = *this - o; }
  Integer& operator*=(const Integer& o) { return *this = *this * o; }
  Integer& operator/=(const Integer& o) { return *this = *this / o; }
  Integer& operator%=(const Integer& o) { return *this = *this % o; }

  friend Integer operator+(const Integer& a, const Integer& b);
  friend Integer operator-(const Integer& a, const Integer& b);
  friend Integer operator*(const Integer& a, const Integer& b);
  /// Truncating division, matching built-in integer semantics.
  friend Integer operator/(const Integer& a, const Integer& b);
  friend Integer operator%(const Integer& a, const Integer& b);

  friend bool operator==(const Integer& a, const Integer& b) noexcept;
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept;

  friend std::ostream& operator<<(std::ostream& os, const Integer& v);

 private:
  void assign_big(const Big& v);

  std::variant<std::int64_t, Big> rep_{std::int64_t{0}};
};

Integer abs(const Integer& v);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
/// Quotient rounded toward negative infinity.
Integer floor_div(const Integer& a, const Integer& b);
/// Remainder in [0, |m|).
Integer mod_floor(const Integer& a, const Integer& m);
/// Largest r with r*r <= v; v must be non-negative.
Integer isqrt(const Integer& v);
Integer pow(const Integer& base, unsigned exponent);

/// Exact rational number with positive denominator, always in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(const Integer& n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  Rational(T n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n, const Integer& d);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == Integer(1); }
  int sign() const noexcept { return num_.sign(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  Integer floor() const { return floor_div(num_, den_); }
  Integer ceil() const { return -floor_div(-num_, den_); }
  double to_double() const;
  std::string to_string() const;

  Rational operator-() const { return Rational(-num_, den_, Normalized{}); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& v);

 private:
  struct Normalized {};
  Rational(Integer n, Integer d, Normalized) : num_(std::move(n)), den_(std::move(d)) {}

  Integer num_{0};
  Integer den_{1};
};

Rational abs(const Rational& v);

/// Reduces `v` into [0, m) for a positive rational modulus m.
Rational mod_rational(const Rational& v, const Rational& m);

}  // namespace enriques

namespace Eigen {

template <>
struct NumTraits<enriques::Integer> : GenericNumTraits<enriques::Integer> {
  using Real = enriques::Integer;
  using NonInteger = enriques::Rational;
  using Literal = enriques::Integer;
  using Nested = enriques::Integer;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 8,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<enriques::Rational> : GenericNumTraits<enriques::Rational> {
  using Real = enriques::Rational;
  using NonInteger = enriques::Rational;
  using Literal = enriques::Rational;
  using Nested = enriques::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 16,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
