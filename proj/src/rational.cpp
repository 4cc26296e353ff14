#include "invopt/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace invopt {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool is_signed_integer(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_mpz(const std::string& s) {
  return mpz_class(s[0] == '+' ? s.substr(1) : s);  // GMP rejects a leading '+'
}

}  // namespace

Rational Rational::from_string(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  if (!is_signed_integer(num_part)) {
    throw std::invalid_argument("Rational: malformed number '" + text + "'");
  }
  mpq_class v;
  if (slash == std::string::npos) {
    v = mpq_class(parse_mpz(num_part));
  } else {
    const std::string den_part = text.substr(slash + 1);
    if (!is_signed_integer(den_part)) {
      throw std::invalid_argument("Rational: malformed number '" + text + "'");
    }
    mpz_class den = parse_mpz(den_part);
    if (den == 0) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
    v = mpq_class(parse_mpz(num_part), den);
    v.canonicalize();
  }
  Rational r;
  r.v_ = std::move(v);
  return r;
}

Rational Rational::abs() const {
  Rational r = *this;
  if (sgn(r.v_) < 0) r.v_ = -r.v_;
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_str();
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.v_ = -r.v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational make_rational(long num, long den) { return Rational(num, den); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace invopt
