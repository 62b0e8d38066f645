#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "hassett/error.hpp"

namespace hassett {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(implicit)
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(ErrorCode::syntax, "zero denominator");
    value_ = den < 0 ? boost::multiprecision::cpp_rational(BigInt(-num), BigInt(-den))
                     : boost::multiprecision::cpp_rational(num, den);
  }

  /// Parses "<int>" or "<int>/<int>" (optional leading '-', decimal digits
  /// only). Decimal points and exponents are rejected.
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    auto num = parse_integer(text.substr(0, slash), text);
    if (slash == std::string_view::npos) return Rational(num, 1);
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-')
      throw Error(ErrorCode::syntax, "negative denominator in '" + std::string(text) + "'");
    auto den = parse_integer(den_text, text);
    return Rational(num, den);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  std::string str() const {
    auto num = numerator();
    auto den = denominator();
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.value_ == 0) throw Error(ErrorCode::invalid_argument, "division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(0) - a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static BigInt parse_integer(std::string_view digits, std::string_view whole) {
    std::size_t pos = 0;
    bool negative = false;
    if (!digits.empty() && digits.front() == '-') {
      negative = true;
      pos = 1;
    }
    if (pos == digits.size())
      throw Error(ErrorCode::syntax, "malformed rational '" + std::string(whole) + "'");
    BigInt value = 0;
    for (; pos < digits.size(); ++pos) {
      char c = digits[pos];
      if (c < '0' || c > '9')
        throw Error(ErrorCode::syntax, "malformed rational '" + std::string(whole) + "'");
      value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
  }

  boost::multiprecision::cpp_rational value_{0};
};

}  // namespace hassett
