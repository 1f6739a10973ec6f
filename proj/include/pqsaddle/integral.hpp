#pragma once

#include <map>
#include <vector>

#include "pqsaddle/system.hpp"

namespace pqs {

/// How the coefficient recursion enumerates its sum.
enum class Summation {
  /// All (s1, s2) with s1 >= -q, s2 >= -p over the whole index domain.
  General,
  /// Only lattice indices (q t1, p t2); valid for the uv-families modelled here.
  Lattice,
};

/// Coefficients v(k1, k2) of the formal first integral
///   Psi = x^q y^p + sum v(k1, k2) x^{k1+q} y^{k2+p},
/// truncated to total degree D in (x, y).
struct FirstIntegralTable {
  SystemFamily family;
  unsigned degree_bound = 0;
  Summation summation = Summation::General;
  /// Every computed index; entries may be zero.
  std::map<Bidegree, Polynomial> v;
  /// g_{qk,pk} collected at resonant indices (qk, pk), keyed by k >= 1.
  std::map<long, Polynomial> quantities;

  /// True iff (k1, k2) lies in the truncated index domain.
  bool in_domain(Bidegree k) const;
  /// v(k1, k2); zero for domain indices the summation never visits.
  Polynomial at(Bidegree k) const;
};

/// Saddle quantities g_{qk,pk}, k = 1..K (g[k-1]).
struct QuantityTable {
  SystemFamily family;
  std::vector<Polynomial> g;
};

/// Requires D >= p + q.
FirstIntegralTable compute_first_integral(const SystemFamily& family, unsigned D,
                                          Summation summation = Summation::General);

/// g_{qk,pk} is minus the bracket sum of the recursion at (qk, pk), so that
/// X Psi = sum_k g_{qk,pk} (x^q y^p)^{k+1} up to the truncation degree.
QuantityTable compute_saddle_quantities(const SystemFamily& family, unsigned K);

/// Memoized coefficient-level recursion V(nu) and the g-coefficient g^(nu).
/// Not thread-safe; use one instance per thread.
class CoefficientRecursion {
public:
  explicit CoefficientRecursion(SystemFamily family);

  const SystemFamily& family() const { return family_; }
  /// Coefficient of [nu] in v(L(nu)).
  Rational V(const Monomial& nu);
  /// Coefficient of [nu] in g_{qk,pk} when L(nu) = (qk, pk), k >= 1; else 0.
  Rational g_coeff(const Monomial& nu);

private:
  Rational bracket(const Monomial& nu);

  SystemFamily family_;
  std::map<Monomial, Rational> memo_;
};

Rational V_of_nu(const SystemFamily& family, const Monomial& nu);
Rational g_coeff_of_nu(const SystemFamily& family, const Monomial& nu);

/// Ring (x, y, parameters...) used for series in x, y with parameter coefficients.
Ring series_ring(const SystemFamily& family);

/// Psi truncated to degree D as a polynomial over series_ring().
Polynomial first_integral_series(const FirstIntegralTable& table);

/// X Psi_D - sum_k g_{qk,pk} (x^q y^p)^{k+1}, keeping only (x, y)-degree <= D.
/// Zero when the table and quantities are consistent.
Polynomial residual(const FirstIntegralTable& table);
Polynomial residual(const SystemFamily& family, unsigned D);

/// Result of the undetermined-coefficient oracle on a numeric family.
struct SeriesOracle {
  std::map<Bidegree, Rational> v;
  /// g[k-1] for every k with (k+1)(p+q) <= D.
  std::vector<Rational> g;
};

/// Builds Psi degree by degree by applying the vector field to every
/// unknown monomial and solving the resulting dense linear system exactly.
/// Independent of the v-recursion. Requires a numeric family and D >= p + q.
SeriesOracle oracle_series(const SystemFamily& family, unsigned D);

}  // namespace pqs
