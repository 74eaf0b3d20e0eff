#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace farkas {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class that hides the
/// expression-template machinery and pins the canonical form.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)

  template <std::unsigned_integral I>
  Rational(I value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT

  /// Throws std::domain_error when `den` is zero.
  Rational(long num, long den);

  explicit Rational(mpq_class value);

  /// Parses "p/q", "p", or "-p/q" (decimal integers, optional leading sign).
  /// Throws std::invalid_argument on malformed text and std::domain_error on a
  /// zero denominator.
  static Rational parse(std::string_view text);

  /// "p/q", with "/q" omitted when q = 1.
  std::string str() const;

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  Rational abs() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Exact square root when `r` is the square of a rational, nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& r);

/// Rational bounds on sqrt(r) for r >= 0 with error at most 2^-bits:
/// sqrt_lower(r)^2 <= r <= sqrt_upper(r)^2. Exact when r is a square.
Rational sqrt_lower(const Rational& r, unsigned bits = 64);
Rational sqrt_upper(const Rational& r, unsigned bits = 64);

/// Complex number with exact rational parts.
struct ComplexRational {
  Rational re;
  Rational im;

  Rational norm_squared() const { return re * re + im * im; }
  ComplexRational conj() const { return {re, -im}; }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const ComplexRational&, const ComplexRational&) = default;
};

}  // namespace farkas

template <>
struct std::hash<farkas::Rational> {
  std::size_t operator()(const farkas::Rational& r) const { return r.hash(); }
};
