#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "pqsaddle/polynomial.hpp"

namespace pqs {

/// Integer pair used for L-levels and first-integral indices (k1, k2).
struct Bidegree {
  long first = 0;
  long second = 0;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// Linear part diag(p, -q) with gcd(p, q) = 1.
struct Resonance {
  long p = 1;
  long q = 1;
  friend bool operator==(const Resonance&, const Resonance&) = default;
};

/// A nonlinear term of the family: a-parameter a_{qu,pv} in the x-equation
/// and its conjugate b_{qv,pu} in the y-equation.
struct TermIndex {
  unsigned u = 0;
  unsigned v = 0;
  friend auto operator<=>(const TermIndex&, const TermIndex&) = default;
};

/// One term with optional numeric values; an empty optional is symbolic.
struct TermSpec {
  TermIndex index;
  std::optional<Rational> a;
  std::optional<Rational> b;
};

/// The family
///   x' =  x (p - sum a_{qu,pv} x^{qu} y^{pv}),
///   y' = -y (q - sum b_{qv,pu} x^{qv} y^{pu})
/// over an ordered index set S.
///
/// S is sorted ascending by u+v with ties broken by descending u. The
/// parameter ring has 2*ell variables a_1..a_ell, b_ell..b_1, so ring
/// position i and 2*ell-1-i are conjugate. An exponent vector over this
/// ring is the tuple nu of the monomial [nu].
class SystemFamily {
public:
  /// Throws std::invalid_argument for non-coprime or non-positive (p, q),
  /// duplicate indices, or an index with u + v = 0.
  static SystemFamily create(long p, long q, std::vector<TermSpec> terms);

  const Resonance& resonance() const { return resonance_; }
  long p() const { return resonance_.p; }
  long q() const { return resonance_.q; }
  std::size_t ell() const { return terms_.size(); }
  const std::vector<TermSpec>& terms() const { return terms_; }
  const Ring& parameter_ring() const { return ring_; }

  /// Ring positions of the k-th term's parameters (0-based).
  std::size_t a_position(std::size_t k) const { return k; }
  std::size_t b_position(std::size_t k) const { return 2 * ell() - 1 - k; }
  /// Term index owning ring position i.
  std::size_t term_of_position(std::size_t i) const { return i < ell() ? i : 2 * ell() - 1 - i; }

  const std::string& a_name(std::size_t k) const { return ring_->name(a_position(k)); }
  const std::string& b_name(std::size_t k) const { return ring_->name(b_position(k)); }
  /// Subscript pair of a_k: (q u_k, p v_k).
  Bidegree a_subscript(std::size_t k) const;
  /// Subscript pair of b_k: (q v_k, p u_k).
  Bidegree b_subscript(std::size_t k) const;
  /// L-contribution of ring position i.
  Bidegree position_weight(std::size_t i) const;

  bool is_numeric() const;
  bool is_symbolic() const;
  /// Value of a_k (resp. b_k) in the parameter ring: the variable itself
  /// when symbolic, otherwise a constant.
  Polynomial a_value(std::size_t k) const;
  Polynomial b_value(std::size_t k) const;

  /// Copy with every parameter replaced by the given values, in S order.
  SystemFamily with_values(const std::vector<std::pair<Rational, Rational>>& values) const;
  /// Copy with all values dropped.
  SystemFamily symbolic() const;

  friend bool operator==(const SystemFamily& a, const SystemFamily& b);

private:
  SystemFamily() = default;
  Resonance resonance_;
  std::vector<TermSpec> terms_;
  Ring ring_;
};

/// Name of a parameter with subscript (j, k): "a20", or "a_12_3" when a
/// subscript needs more than one digit.
std::string parameter_name(char prefix, Bidegree subscript);

/// L(nu) = sum of nu_i times the subscript of ring position i.
Bidegree L_map(const SystemFamily& family, const Monomial& nu);
/// Entry reversal; [hat(nu)] is the conjugate monomial of [nu].
Monomial hat(const Monomial& nu);
/// (q/p)^(a-exponent sum - b-exponent sum).
Rational kappa(const SystemFamily& family, const Monomial& nu);
/// Level k when L(nu) = (qk, pk) for some k >= 0.
std::optional<long> resonant_level(const SystemFamily& family, const Monomial& nu);

/// x -> alpha x, y -> y / alpha acting on a numeric family:
/// a_{qu,pv} -> alpha^{pv-qu} a_{qu,pv}, b_{qv,pu} -> alpha^{pu-qv} b_{qv,pu}.
SystemFamily scale_parameters(const SystemFamily& family, const Rational& alpha);

/// True iff every monomial of f has L-level (j, k).
bool check_jk_homogeneous(const SystemFamily& family, const Polynomial& f, Bidegree jk);

}  // namespace pqs
