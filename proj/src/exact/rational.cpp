#include "farkas/exact/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace farkas {

namespace {

bool is_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, 1);
  value_ /= den;
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  if (!is_integer_text(num_text)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpq_class value;
  value.get_num() = parse_integer(num_text);
  if (slash == std::string_view::npos) {
    value.get_den() = 1;
  } else {
    const std::string_view den_text = text.substr(slash + 1);
    if (!is_integer_text(den_text) || den_text[0] == '-' || den_text[0] == '+') {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    value.get_den() = parse_integer(den_text);
    if (value.get_den() == 0) throw std::domain_error("zero denominator in '" + std::string(text) + "'");
  }
  value.canonicalize();
  return Rational(std::move(value));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational out = *this;
  mpq_neg(out.value_.get_mpq_t(), value_.get_mpq_t());
  return out;
}

std::size_t Rational::hash() const {
  const std::hash<std::string> h;
  return h(value_.get_num().get_str(16)) * 31u ^ h(value_.get_den().get_str(16));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  const mpz_class num = r.numerator();
  const mpz_class den = r.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class a, b;
  mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
  return Rational(mpq_class(a, b));
}

namespace {

// floor(sqrt(r) * 2^bits) as an integer.
mpz_class scaled_isqrt(const Rational& r, unsigned bits) {
  // sqrt(p/q) * 2^b = sqrt(p * q * 4^b) / q
  mpz_class radicand = r.numerator() * r.denominator();
  mpz_mul_2exp(radicand.get_mpz_t(), radicand.get_mpz_t(), 2 * bits);
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  return root;
}

}  // namespace

Rational sqrt_lower(const Rational& r, unsigned bits) {
  if (r.sign() < 0) throw std::domain_error("sqrt of a negative rational");
  if (auto exact = exact_sqrt(r)) return *exact;
  // root / (q * 2^bits) <= sqrt(p*q)/q
  mpz_class den = r.denominator();
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  return Rational(mpq_class(scaled_isqrt(r, bits), den));
}

Rational sqrt_upper(const Rational& r, unsigned bits) {
  if (r.sign() < 0) throw std::domain_error("sqrt of a negative rational");
  if (auto exact = exact_sqrt(r)) return *exact;
  mpz_class den = r.denominator();
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  // Not a perfect square, so the floor root is strictly below; add one.
  return Rational(mpq_class(scaled_isqrt(r, bits) + 1, den));
}

}  // namespace farkas
