#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plg {

using Rational = mpq_class;

/// Parses "p/q", "p", or "-p/q". Throws MalformedInput otherwise.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

Rational abs(const Rational& q);
int sign(const Rational& q);
Rational floor_div(const Rational& x, const Rational& period);

/// Largest positive rational d with x/d and y/d both integers; gcd(0, y) = |y|.
Rational rational_gcd(const Rational& x, const Rational& y);
/// Smallest positive rational that is an integer multiple of both.
Rational rational_lcm(const Rational& x, const Rational& y);
bool is_integer_multiple(const Rational& x, const Rational& step);

Rational pow2(long exponent);

/// A rational number or one of the two infinities.
class ExtRational {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtRational() : kind_(Kind::Finite) {}
  ExtRational(Rational value) : kind_(Kind::Finite), value_(std::move(value)) {}  // NOLINT
  ExtRational(long value) : kind_(Kind::Finite), value_(value) {}                 // NOLINT

  static ExtRational neg_inf() { return ExtRational(Kind::NegInf); }
  static ExtRational pos_inf() { return ExtRational(Kind::PosInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }

  const Rational& value() const {
    if (!is_finite()) throw std::logic_error("ExtRational: value of an infinity");
    return value_;
  }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.is_finite() || a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

 private:
  explicit ExtRational(Kind kind) : kind_(kind) {}

  Kind kind_;
  Rational value_;
};

/// "-inf", "inf", or the rational text.
std::string to_string(const ExtRational& q);
ExtRational parse_ext_rational(std::string_view text);

}  // namespace plg
