#include "pqsaddle/rational.hpp"

#include <cassert>
#include <stdexcept>

namespace pqs {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
  check();
}

Rational::Rational(mpq_class q) : value_(std::move(q)) {
  value_.canonicalize();
  check();
}

Rational Rational::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  auto slash = text.find('/');
  std::string_view n = text.substr(0, slash);
  std::string_view d = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(n) || !all_digits(d)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  mpz_class num(std::string(n), 10);
  mpz_class den(std::string(d), 10);
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Rational r;
  r.value_ = 1 / value_;
  r.value_.canonicalize();
  return r;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Rational r;
  mpz_pow_ui(r.value_.get_num_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(r.value_.get_den_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(exponent));
  r.check();
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  check();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  check();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  check();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  check();
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

bool Rational::is_canonical() const {
  if (den() < 1) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return g == 1;
}

void Rational::check() const {
#ifndef NDEBUG
  assert(is_canonical());
#endif
}

}  // namespace pqs
