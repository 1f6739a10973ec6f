#pragma once

#include <string>
#include <vector>

#include "pqsaddle/integral.hpp"
#include "pqsaddle/system.hpp"

namespace pqs {

struct ReversibilityViolation {
  TermIndex index;
  Rational a;
  Rational b;
  /// (q/p) * a, the value b must take.
  Rational expected_b;
};

struct ReversibilityVerdict {
  bool reversible = true;
  std::vector<ReversibilityViolation> violations;
};

/// Time-reversibility under (x, y) -> (y^{p/q}, x^{q/p}): holds iff
/// b_{qv,pu} = (q/p) a_{qu,pv} for every term. Requires a numeric family.
ReversibilityVerdict is_time_reversible(const SystemFamily& family);

/// Conjugate polynomial: [nu] -> [hat(nu)], coefficients unchanged (they are rational).
Polynomial conjugate_poly(const SystemFamily& family, const Polynomial& f);

struct MonoidElement {
  Monomial nu;
  long level = 0;
};

/// Every nu with L(nu) = (qk, pk), 1 <= k <= K, sorted by exponent vector.
std::vector<MonoidElement> enumerate_monoid(const SystemFamily& family, unsigned K);

struct SibirskyGenerator {
  Monomial nu;
  long level = 0;
  /// kappa[nu] - [hat(nu)], integral with content 1 and positive leading coefficient.
  Polynomial binomial;
};

struct SibirskyGeneratorSet {
  unsigned level_bound = 0;
  std::vector<SibirskyGenerator> generators;

  std::vector<Polynomial> polynomials() const;
};

/// One binomial per conjugate pair {nu, hat(nu)} with nu != hat(nu) and
/// level <= K; the representative is the one with larger [nu] in degrevlex.
SibirskyGeneratorSet sibirsky_generators(const SystemFamily& family, unsigned K);

/// Variable order of the parameter block in implicitization rings.
enum class ParameterOrder {
  /// a_1..a_ell, b_ell..b_1 as in the family's parameter ring.
  Canonical,
  /// Parameter names sorted ascending (a01 > a02 > a20 > ... > b01 > ...).
  ByName,
};

/// The ideal H over (gamma, w, t_1..t_ell, parameters):
///   1 - w*gamma, a_k - t_k, b_k - (q/p) gamma^{zeta_k} t_k  (zeta_k = u_k - v_k),
/// with gamma^{-n} written as w^n.
struct ImplicitizationProblem {
  SystemFamily family;
  Ring ring;
  std::vector<Polynomial> H;
  std::vector<long> zeta;
  /// gamma, w, t_1..t_ell: the leading block of `ring`.
  std::vector<std::string> auxiliary;
};

ImplicitizationProblem build_H_ideal(const SystemFamily& family, ParameterOrder order = ParameterOrder::Canonical);

/// theta: a_k -> t_k, b_k -> (q/p) gamma^{zeta_k} t_k, followed by the normal
/// form modulo w*gamma - 1. f lives in the family's parameter ring; the
/// result lives in problem.ring.
Polynomial theta_reduce(const ImplicitizationProblem& problem, const Polynomial& f);

struct SymmetryFailure {
  Bidegree left;
  Bidegree right;
  Rational left_value;
  Rational right_value;
};

struct SymmetryReport {
  bool ok = true;
  std::size_t pairs_checked = 0;
  std::vector<SymmetryFailure> failures;
};

/// Checks v(q t1, p t2) = v(q t2, p t1) for every pair present in the
/// table. The table's family must be numeric and time-reversible.
SymmetryReport symmetry_check(const FirstIntegralTable& table);

/// g_{qk,pk} rebuilt from its coefficients as
///   (1/2) sum_{L(nu) = (qk,pk)} g^(nu) / kappa(nu) * (kappa(nu)[nu] - [hat(nu)]).
Polynomial decompose_quantity(const SystemFamily& family, long k);

}  // namespace pqs
