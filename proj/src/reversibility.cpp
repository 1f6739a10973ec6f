#include "pqsaddle/reversibility.hpp"

#include <algorithm>
#include <set>

#include "pqsaddle/groebner.hpp"

namespace pqs {

ReversibilityVerdict is_time_reversible(const SystemFamily& family) {
  if (!family.is_numeric()) throw std::invalid_argument("is_time_reversible: family has symbolic parameters");
  ReversibilityVerdict verdict;
  const Rational ratio(family.q(), family.p());
  for (const auto& t : family.terms()) {
    Rational expected = ratio * *t.a;
    if (*t.b != expected) {
      verdict.reversible = false;
      verdict.violations.push_back({t.index, *t.a, *t.b, expected});
    }
  }
  return verdict;
}

Polynomial conjugate_poly(const SystemFamily& family, const Polynomial& f) {
  if (!same_ring(f.ring(), family.parameter_ring()))
    throw RingMismatch("conjugate_poly: polynomial is not in the family's parameter ring");
  Polynomial::TermMap out;
  for (const auto& [m, c] : f.terms()) out.emplace(hat(m), c);
  return Polynomial(f.ring(), std::move(out));
}

std::vector<MonoidElement> enumerate_monoid(const SystemFamily& family, unsigned K) {
  const std::size_t n = 2 * family.ell();
  // weights in units of (q, p): position i contributes (u, v) or (v, u)
  std::vector<std::pair<long, long>> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto s = family.position_weight(i);
    w[i] = {s.first / family.q(), s.second / family.p()};
  }
  std::vector<MonoidElement> out;
  std::vector<Monomial::Exponent> nu(n, 0);
  const long bound = static_cast<long>(K);

  auto dfs = [&](auto&& self, std::size_t i, long A, long B) -> void {
    if (i == n) {
      if (A == B && A >= 1) out.push_back({Monomial(nu), A});
      return;
    }
    for (Monomial::Exponent e = 0;; ++e) {
      long a = A + long(e) * w[i].first, b = B + long(e) * w[i].second;
      if (a > bound || b > bound) break;
      nu[i] = e;
      self(self, i + 1, a, b);
    }
    nu[i] = 0;
  };
  if (n > 0) dfs(dfs, 0, 0, 0);
  std::sort(out.begin(), out.end(), [](const MonoidElement& x, const MonoidElement& y) { return x.nu < y.nu; });
  return out;
}

std::vector<Polynomial> SibirskyGeneratorSet::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.binomial);
  return out;
}

SibirskyGeneratorSet sibirsky_generators(const SystemFamily& family, unsigned K) {
  if (K < 1) throw std::invalid_argument("sibirsky_generators: level bound must be positive");
  const Ring& ring = family.parameter_ring();
  const auto order = MonomialOrder::degrevlex();
  SibirskyGeneratorSet out;
  out.level_bound = K;
  for (const auto& e : enumerate_monoid(family, K)) {
    Monomial conj = hat(e.nu);
    if (conj == e.nu) continue;
    if (order.compare(e.nu, conj) < 0) continue;
    Polynomial b = Polynomial::monomial(ring, e.nu, kappa(family, e.nu)) - Polynomial::monomial(ring, conj);
    out.generators.push_back({e.nu, e.level, primitive_normalize(b, order)});
  }
  std::stable_sort(out.generators.begin(), out.generators.end(),
                   [](const SibirskyGenerator& x, const SibirskyGenerator& y) { return x.level < y.level; });
  return out;
}

ImplicitizationProblem build_H_ideal(const SystemFamily& family, ParameterOrder order) {
  const std::size_t ell = family.ell();
  std::vector<std::string> aux{"gamma", "w"};
  for (std::size_t k = 1; k <= ell; ++k) aux.push_back("t" + std::to_string(k));
  std::vector<std::string> params = family.parameter_ring()->names();
  if (order == ParameterOrder::ByName) std::sort(params.begin(), params.end());
  std::vector<std::string> names = aux;
  names.insert(names.end(), params.begin(), params.end());

  ImplicitizationProblem prob{family, VariableSet::make(std::move(names)), {}, {}, aux};
  const Ring& R = prob.ring;
  Polynomial gamma = Polynomial::variable(R, "gamma"), w = Polynomial::variable(R, "w");
  const Rational ratio(family.q(), family.p());

  prob.H.push_back(Polynomial::constant(R, 1) - w * gamma);
  for (std::size_t k = 0; k < ell; ++k) {
    const auto& idx = family.terms()[k].index;
    long zeta = long(idx.u) - long(idx.v);
    prob.zeta.push_back(zeta);
    Polynomial t = Polynomial::variable(R, aux[2 + k]);
    prob.H.push_back(Polynomial::variable(R, family.a_name(k)) - t);
    Polynomial shift = zeta >= 0 ? gamma.pow(static_cast<unsigned>(zeta)) : w.pow(static_cast<unsigned>(-zeta));
    prob.H.push_back(Polynomial::variable(R, family.b_name(k)) - ratio * (shift * t));
  }
  return prob;
}

Polynomial theta_reduce(const ImplicitizationProblem& problem, const Polynomial& f) {
  const auto& fam = problem.family;
  if (!same_ring(f.ring(), fam.parameter_ring()))
    throw RingMismatch("theta_reduce: polynomial is not in the family's parameter ring");
  const Ring& R = problem.ring;
  Polynomial gamma = Polynomial::variable(R, "gamma"), w = Polynomial::variable(R, "w");
  const Rational ratio(fam.q(), fam.p());
  std::map<std::string, Binding> images;
  for (std::size_t k = 0; k < fam.ell(); ++k) {
    Polynomial t = Polynomial::variable(R, problem.auxiliary[2 + k]);
    long zeta = problem.zeta[k];
    Polynomial shift = zeta >= 0 ? gamma.pow(static_cast<unsigned>(zeta)) : w.pow(static_cast<unsigned>(-zeta));
    images.emplace(fam.a_name(k), t);
    images.emplace(fam.b_name(k), ratio * (shift * t));
  }
  Polynomial image = substitute(f, images, R);
  std::vector<Polynomial> relation{w * gamma - Polynomial::constant(R, 1)};
  return normal_form(image, relation, MonomialOrder::lex());
}

SymmetryReport symmetry_check(const FirstIntegralTable& table) {
  const auto& fam = table.family;
  if (!fam.is_numeric()) throw std::invalid_argument("symmetry_check: family has symbolic parameters");
  if (!is_time_reversible(fam).reversible) throw std::invalid_argument("symmetry_check: family is not time-reversible");
  const long p = fam.p(), q = fam.q();
  SymmetryReport report;
  for (const auto& [K, value] : table.v) {
    if (K.first < 0 || K.second < 0 || K.first % q != 0 || K.second % p != 0) continue;
    long t1 = K.first / q, t2 = K.second / p;
    if (t1 >= t2) continue;
    Bidegree mirror{q * t2, p * t1};
    if (!table.in_domain(mirror)) continue;
    ++report.pairs_checked;
    Rational left = value.constant_value(), right = table.at(mirror).constant_value();
    if (left != right) {
      report.ok = false;
      report.failures.push_back({K, mirror, left, right});
    }
  }
  return report;
}

Polynomial decompose_quantity(const SystemFamily& family, long k) {
  const Ring& ring = family.parameter_ring();
  CoefficientRecursion rec(family);
  Polynomial acc(ring);
  for (const auto& e : enumerate_monoid(family, static_cast<unsigned>(k))) {
    if (e.level != k) continue;
    Rational g = rec.g_coeff(e.nu);
    if (g.is_zero()) continue;
    Rational kap = kappa(family, e.nu);
    Polynomial b = Polynomial::monomial(ring, e.nu, kap) - Polynomial::monomial(ring, hat(e.nu));
    acc += b * (g / kap);
  }
  return acc * Rational(1, 2);
}

}  // namespace pqs
