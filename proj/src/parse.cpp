#include <cctype>
#include <sstream>

#include "pqsaddle/polynomial.hpp"

namespace pqs {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

// Recursive descent over
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer ('/' integer)? | identifier | '(' expr ')'
class Parser {
public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::string_view digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (!accept('^')) return base;
    skip_space();
    auto d = digits();
    if (d.empty()) fail("expected non-negative integer exponent");
    unsigned long e = std::stoul(std::string(d));
    if (e > 100000) fail("exponent too large");
    return base.pow(static_cast<unsigned>(e));
  }

  Polynomial primary() {
    char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num(digits());
      std::string den = "1";
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        den = std::string(digits());
        if (den.empty()) fail("expected denominator after '/'");
        if (mpz_class(den) == 0) fail("zero denominator");
      }
      return Polynomial::constant(ring_, Rational(mpz_class(num), mpz_class(den)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (!ring_->contains(name)) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, name);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

void print_monomial(std::ostringstream& os, const Monomial& m, const VariableSet& vars) {
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << vars.name(i);
    if (m[i] > 1) os << '^' << m[i];
  }
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) { return Parser(text, ring).run(); }

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.sorted_terms(MonomialOrder::degrevlex())) {
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    Rational a = c.abs();
    if (m.is_one()) {
      os << a.str();
      continue;
    }
    if (!a.is_one()) os << a.str() << '*';
    print_monomial(os, m, *f.ring());
  }
  return os.str();
}

}  // namespace pqs
