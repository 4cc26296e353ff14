#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace invopt {

/// Exact rational number backed by GMP.  Always kept in canonical form:
/// positive denominator, gcd(|numerator|, denominator) = 1.  All arithmetic
/// is exact; there is no floating point anywhere in the solver path.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, weights read naturally
  Rational(long num, long den);

  /// Parses "3", "-3/2", "+1/2".  Throws std::invalid_argument on malformed
  /// text or a zero denominator.
  static Rational from_string(const std::string& text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const;

  /// Canonical text form: "num/den", or just "num" when the value is integral.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on /0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

/// Builds num/den in canonical form; throws std::invalid_argument when den = 0.
Rational make_rational(long num, long den);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace invopt
