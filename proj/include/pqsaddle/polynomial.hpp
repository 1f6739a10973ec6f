#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "pqsaddle/rational.hpp"

namespace pqs {

/// Raised when two operands live in different variable sets.
class RingMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered list of distinct variable names. Position i of a monomial's
/// exponent vector belongs to names()[i]; position 0 is the largest
/// variable for every monomial order.
class VariableSet {
public:
  explicit VariableSet(std::vector<std::string> names);

  static std::shared_ptr<const VariableSet> make(std::vector<std::string> names) {
    return std::make_shared<const VariableSet>(std::move(names));
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  friend bool operator==(const VariableSet& a, const VariableSet& b) { return a.names_ == b.names_; }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using Ring = std::shared_ptr<const VariableSet>;

bool same_ring(const Ring& a, const Ring& b);

class Monomial {
public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0), degree_(0) {}
  explicit Monomial(std::vector<Exponent> exps);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, Exponent e);

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  /// Storage order only (lexicographic on the raw exponent vector); not a monomial order.
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

/// Term order on monomials. Block orders compare the first `elim_count`
/// variables under `outer`, then the rest under `inner`.
class MonomialOrder {
public:
  enum class Kind { Lex, DegLex, DegRevLex, Block };

  MonomialOrder() = default;
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  static MonomialOrder deglex() { return MonomialOrder(Kind::DegLex); }
  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex); }
  /// Non-block order of the given kind.
  static MonomialOrder of(Kind k);
  static MonomialOrder block(std::size_t elim_count, Kind outer, Kind inner);
  /// "lex", "deglex", "degrevlex".
  static MonomialOrder from_name(std::string_view name);

  Kind kind() const { return kind_; }
  Kind outer() const { return outer_; }
  Kind inner() const { return inner_; }
  std::size_t elim_count() const { return elim_count_; }
  std::string name() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

private:
  explicit MonomialOrder(Kind k) : kind_(k) {}

  Kind kind_ = Kind::DegRevLex;
  Kind outer_ = Kind::Lex;
  Kind inner_ = Kind::Lex;
  std::size_t elim_count_ = 0;
};

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Sparse multivariate polynomial over Q. Zero coefficients are never stored.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  Polynomial(Ring ring, TermMap terms);

  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial variable(Ring ring, std::string_view name);
  static Polynomial monomial(Ring ring, Monomial m, const Rational& c = Rational(1));

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant value; throws if the polynomial is not constant.
  Rational constant_value() const;
  Rational coefficient(const Monomial& m) const;
  std::uint64_t total_degree() const;

  /// Terms sorted descending under `order`.
  std::vector<Term> sorted_terms(const MonomialOrder& order) const;
  /// Requires a nonzero polynomial.
  Term leading_term(const MonomialOrder& order) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  Polynomial pow(unsigned exponent) const;
  /// Add c*m without building a temporary polynomial.
  void add_term(const Monomial& m, const Rational& c);
  /// Multiply every term by c*m.
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  Polynomial derivative(std::string_view var) const;

  /// Exact equality of term maps; polynomials over different rings compare unequal.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
  void require_same_ring(const Polynomial& o, const char* op) const;

  Ring ring_;
  TermMap terms_;
};

/// Value bound to a variable by substitute().
using Binding = std::variant<Rational, Polynomial>;

/// Homomorphic image of f in `target`. Unbound variables map to the
/// same-named variable of `target`.
Polynomial substitute(const Polynomial& f, const std::map<std::string, Binding>& bindings, const Ring& target);
/// Same as above with target = f.ring().
Polynomial substitute(const Polynomial& f, const std::map<std::string, Binding>& bindings);
/// Re-express f over `target`, matching variables by name. Variables f
/// does not use need not exist in `target`.
Polynomial embed(const Polynomial& f, const Ring& target);

/// Scale to integer coefficients with content 1 and positive leading
/// coefficient under `order`. Zero maps to zero.
Polynomial primitive_normalize(const Polynomial& f, const MonomialOrder& order = MonomialOrder::degrevlex());

/// Parse failure with the 0-based character offset of the offending token.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Grammar: integers, rational literals p/q, identifiers
/// [A-Za-z][A-Za-z0-9_]*, + - * ^ (non-negative integer powers), parens.
/// Multiplication must be explicit.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

/// Deterministic text form; terms in descending degrevlex order.
std::string to_string(const Polynomial& f);

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace pqs
