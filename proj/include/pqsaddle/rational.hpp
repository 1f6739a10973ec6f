#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pqs {

/// Exact fraction over arbitrary-precision integers.
///
/// Always canonical: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
class Rational {
public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpz_class& n) : value_(n) {}
  explicit Rational(mpq_class q);

  /// Accepts "n", "-n", "n/d", "-n/d" with decimal digits only.
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return value_.get_num(); }
  const mpz_class& den() const { return value_.get_den(); }
  const mpq_class& gmp() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return den() == 1; }
  int sign() const { return sgn(value_); }

  Rational abs() const;
  Rational inverse() const;
  /// Integer power; negative exponents require a nonzero base.
  Rational pow(long exponent) const;

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  /// True iff the stored representation is reduced.
  bool is_canonical() const;

private:
  void check() const;
  mpq_class value_;
};

}  // namespace pqs
