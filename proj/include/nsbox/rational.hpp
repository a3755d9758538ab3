#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nsbox {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator. Box entries, polytope coefficients and LP data
/// all use this type; floating point enters only through to_double().
class Rational {
public:
  struct NoNormalize {};

  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {} // NOLINT: implicit by design
  Rational(BigInt v) : num_(std::move(v)), den_(1) {}

  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  // Caller guarantees gcd(|num|, den) == 1 and den > 0. Used on hot paths
  // (distillation recurrence) where the reduced form is known a priori.
  Rational(BigInt num, BigInt den, NoNormalize)
      : num_(std::move(num)), den_(std::move(den)) {}

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  /// True iff the value is 0 or 1 (the integrality test for box entries).
  bool is_zero_or_one() const { return den_ == 1 && (num_ == 0 || num_ == 1); }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  friend Rational operator-(const Rational& a) {
    return Rational(-a.num_, a.den_, NoNormalize{});
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_)
      return Rational(a.num_ + b.num_, a.den_);
    BigInt g = gcd(a.den_, b.den_);
    if (g == 1)
      return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    BigInt bd = b.den_ / g;
    BigInt n = a.num_ * bd + b.num_ * (a.den_ / g);
    return Rational(std::move(n), a.den_ * bd);
  }

  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce first so the gcds run on the inputs, not the product.
    BigInt g1 = gcd(abs(a.num_), b.den_);
    BigInt g2 = gcd(abs(b.num_), a.den_);
    return Rational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1),
                    NoNormalize{});
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    Rational inv(b.den_, b.num_, NoNormalize{});
    if (inv.den_ < 0) { inv.num_ = -inv.num_; inv.den_ = -inv.den_; }
    return a * inv;
  }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  double to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
  }

  /// Canonical form "p/q", q > 0, lowest terms (e.g. "0/1", "-3/4").
  std::string str() const {
    return num_.str() + "/" + den_.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

private:
  void normalize() {
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    if (num_ == 0) { den_ = 1; return; }
    BigInt g = gcd(abs(num_), den_);
    if (g != 1) { num_ /= g; den_ /= g; }
  }

  BigInt num_;
  BigInt den_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Parses the canonical "p/q" form. Rejects anything non-canonical:
/// missing slash, q <= 0, leading zeros, or a non-reduced fraction.
inline Rational parse_rational(std::string_view s) {
  auto fail = [&](const char* why) {
    throw std::invalid_argument("bad rational \"" + std::string(s) + "\": " + why);
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) fail("expected \"p/q\"");
  std::string_view ns = s.substr(0, slash), ds = s.substr(slash + 1);
  auto check_digits = [&](std::string_view t, bool allow_sign) {
    if (allow_sign && !t.empty() && t.front() == '-') t.remove_prefix(1);
    if (t.empty()) fail("empty numerator or denominator");
    for (char c : t)
      if (c < '0' || c > '9') fail("non-digit character");
    if (t.size() > 1 && t.front() == '0') fail("leading zero");
  };
  check_digits(ns, true);
  check_digits(ds, false);
  BigInt num(std::string(ns)), den(std::string(ds));
  if (den <= 0) fail("denominator must be positive");
  if (num == 0 && den != 1) fail("zero must be written 0/1");
  if (gcd(abs(num), den) != 1) fail("fraction not in lowest terms");
  return Rational(std::move(num), std::move(den), Rational::NoNormalize{});
}

/// Largest rational p/den with p/den <= v. Requires |v|*den to fit a double
/// exactly enough for std::floor; fine for the eigenvalue magnitudes here.
inline Rational rational_floor(double v, std::uint64_t den) {
  double scaled = std::floor(v * static_cast<double>(den));
  BigInt p(static_cast<long long>(scaled));
  return Rational(std::move(p), BigInt(den));
}

} // namespace nsbox
