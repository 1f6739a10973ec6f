#include "pqsaddle/integral.hpp"

#include <stdexcept>

namespace pqs {

bool FirstIntegralTable::in_domain(Bidegree k) const {
  const long p = family.p(), q = family.q();
  return k.first >= -q && k.second >= -p && k.first + k.second >= 0 &&
         k.first + k.second + p + q <= static_cast<long>(degree_bound);
}

Polynomial FirstIntegralTable::at(Bidegree k) const {
  if (!in_domain(k))
    throw std::out_of_range("v(" + std::to_string(k.first) + "," + std::to_string(k.second) +
                            ") is outside the truncated index domain");
  auto it = v.find(k);
  return it == v.end() ? Polynomial(family.parameter_ring()) : it->second;
}

namespace {

// Sum over the family's terms of
//   (s1 + q) a_{K-s} v(s) - (s2 + p) b_{K-s} v(s)
// for every s in the domain; a/b vanish off the index set S.
Polynomial general_bracket(const FirstIntegralTable& t, const std::vector<Polynomial>& a,
                           const std::vector<Polynomial>& b, Bidegree K) {
  const auto& fam = t.family;
  Polynomial acc(fam.parameter_ring());
  for (std::size_t k = 0; k < fam.ell(); ++k) {
    auto sa = fam.a_subscript(k);
    Bidegree s{K.first - sa.first, K.second - sa.second};
    if (t.in_domain(s)) {
      auto it = t.v.find(s);
      if (it != t.v.end() && !it->second.is_zero()) acc += (it->second * a[k]) * Rational(s.first + fam.q());
    }
    auto sb = fam.b_subscript(k);
    s = {K.first - sb.first, K.second - sb.second};
    if (t.in_domain(s)) {
      auto it = t.v.find(s);
      if (it != t.v.end() && !it->second.is_zero()) acc -= (it->second * b[k]) * Rational(s.second + fam.p());
    }
  }
  return acc;
}

void run_general(FirstIntegralTable& t, const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  const auto& fam = t.family;
  const long p = fam.p(), q = fam.q();
  const long n_max = static_cast<long>(t.degree_bound) - p - q;
  const Ring& ring = fam.parameter_ring();
  for (long n = 0; n <= n_max; ++n) {
    for (long k1 = -q; k1 <= n + p; ++k1) {
      Bidegree K{k1, n - k1};
      if (n == 0) {
        t.v.emplace(K, K == Bidegree{0, 0} ? Polynomial::constant(ring, 1) : Polynomial(ring));
        continue;
      }
      Polynomial br = general_bracket(t, a, b, K);
      long denom = p * K.first - q * K.second;
      if (denom == 0) {
        t.quantities.emplace(K.first / q, -br);
        t.v.emplace(K, Polynomial(ring));
      } else {
        t.v.emplace(K, br * Rational(1, denom));
      }
    }
  }
}

// Lattice form: v(q t1, p t2) = 1/(pq (t1 - t2)) *
//   sum_{r1 <= t1, r2 <= t2} [(r1+1) q a_{q(t1-r1), p(t2-r2)} - (r2+1) p b_{q(t1-r1), p(t2-r2)}] v(q r1, p r2)
void run_lattice(FirstIntegralTable& t, const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  const auto& fam = t.family;
  const long p = fam.p(), q = fam.q();
  const long D = static_cast<long>(t.degree_bound);
  const Ring& ring = fam.parameter_ring();
  std::map<Bidegree, std::size_t> a_at, b_at;
  for (std::size_t k = 0; k < fam.ell(); ++k) {
    a_at.emplace(fam.a_subscript(k), k);
    b_at.emplace(fam.b_subscript(k), k);
  }
  auto fits = [&](long t1, long t2) { return q * t1 + p * t2 + p + q <= D; };
  for (long n = 0;; ++n) {
    bool any = false;
    for (long t1 = n; t1 >= 0; --t1) {
      long t2 = n - t1;
      if (!fits(t1, t2)) continue;
      any = true;
      Bidegree K{q * t1, p * t2};
      if (n == 0) {
        t.v.emplace(K, Polynomial::constant(ring, 1));
        continue;
      }
      Polynomial acc(ring);
      for (long r1 = 0; r1 <= t1; ++r1) {
        for (long r2 = 0; r2 <= t2; ++r2) {
          auto it = t.v.find({q * r1, p * r2});
          if (it == t.v.end() || it->second.is_zero()) continue;
          Bidegree sub{q * (t1 - r1), p * (t2 - r2)};
          if (auto ia = a_at.find(sub); ia != a_at.end())
            acc += (it->second * a[ia->second]) * Rational((r1 + 1) * q);
          if (auto ib = b_at.find(sub); ib != b_at.end())
            acc -= (it->second * b[ib->second]) * Rational((r2 + 1) * p);
        }
      }
      if (t1 == t2) {
        t.quantities.emplace(t1, -acc);
        t.v.emplace(K, Polynomial(ring));
      } else {
        t.v.emplace(K, acc * Rational(1, p * q * (t1 - t2)));
      }
    }
    if (!any) break;
  }
}

}  // namespace

FirstIntegralTable compute_first_integral(const SystemFamily& family, unsigned D, Summation summation) {
  if (static_cast<long>(D) < family.p() + family.q())
    throw std::invalid_argument("degree bound " + std::to_string(D) + " is below p + q");
  FirstIntegralTable t{family, D, summation, {}, {}};
  std::vector<Polynomial> a, b;
  for (std::size_t k = 0; k < family.ell(); ++k) {
    a.push_back(family.a_value(k));
    b.push_back(family.b_value(k));
  }
  if (summation == Summation::General)
    run_general(t, a, b);
  else
    run_lattice(t, a, b);
  return t;
}

QuantityTable compute_saddle_quantities(const SystemFamily& family, unsigned K) {
  if (K < 1) throw std::invalid_argument("number of saddle quantities must be positive");
  unsigned D = (K + 1) * static_cast<unsigned>(family.p() + family.q());
  auto table = compute_first_integral(family, D, Summation::Lattice);
  QuantityTable out{family, {}};
  for (unsigned k = 1; k <= K; ++k) out.g.push_back(table.quantities.at(k));
  return out;
}

// ------------------------------------------------------------------ V(nu)

CoefficientRecursion::CoefficientRecursion(SystemFamily family) : family_(std::move(family)) {}

Rational CoefficientRecursion::bracket(const Monomial& nu) {
  const std::size_t ell = family_.ell();
  Rational acc;
  for (std::size_t j = 0; j < nu.size(); ++j) {
    if (nu[j] == 0) continue;
    Monomial prev = nu;
    prev.set(j, nu[j] - 1);
    Rational vp = V(prev);
    if (vp.is_zero()) continue;
    auto l = L_map(family_, prev);
    if (j < ell)
      acc += vp * Rational(l.first + family_.q());
    else
      acc -= vp * Rational(l.second + family_.p());
  }
  return acc;
}

Rational CoefficientRecursion::V(const Monomial& nu) {
  if (nu.is_one()) {
    if (nu.size() != 2 * family_.ell()) throw std::invalid_argument("exponent tuple length mismatch");
    return Rational(1);
  }
  if (auto it = memo_.find(nu); it != memo_.end()) return it->second;
  auto l = L_map(family_, nu);
  long denom = family_.p() * l.first - family_.q() * l.second;
  Rational value = denom == 0 ? Rational(0) : bracket(nu) / Rational(denom);
  memo_.emplace(nu, value);
  return value;
}

Rational CoefficientRecursion::g_coeff(const Monomial& nu) {
  auto level = resonant_level(family_, nu);
  if (!level || *level < 1) return Rational(0);
  return -bracket(nu);
}

Rational V_of_nu(const SystemFamily& family, const Monomial& nu) { return CoefficientRecursion(family).V(nu); }

Rational g_coeff_of_nu(const SystemFamily& family, const Monomial& nu) {
  return CoefficientRecursion(family).g_coeff(nu);
}

// --------------------------------------------------------------- residual

Ring series_ring(const SystemFamily& family) {
  std::vector<std::string> names{"x", "y"};
  const auto& params = family.parameter_ring()->names();
  names.insert(names.end(), params.begin(), params.end());
  return VariableSet::make(std::move(names));
}

namespace {

Monomial xy(const Ring& ring, long ex, long ey) {
  Monomial m(ring->size());
  m.set(0, static_cast<Monomial::Exponent>(ex));
  m.set(1, static_cast<Monomial::Exponent>(ey));
  return m;
}

}  // namespace

Polynomial first_integral_series(const FirstIntegralTable& table) {
  const auto& fam = table.family;
  Ring ring = series_ring(fam);
  Polynomial psi(ring);
  for (const auto& [K, coeff] : table.v) {
    if (coeff.is_zero()) continue;
    psi += embed(coeff, ring).mul_term(xy(ring, K.first + fam.q(), K.second + fam.p()), Rational(1));
  }
  return psi;
}

Polynomial residual(const FirstIntegralTable& table) {
  const auto& fam = table.family;
  const long p = fam.p(), q = fam.q();
  Ring ring = series_ring(fam);
  Polynomial psi = first_integral_series(table);

  Polynomial xdot = Polynomial::constant(ring, p), ydot = Polynomial::constant(ring, q);
  for (std::size_t k = 0; k < fam.ell(); ++k) {
    auto sa = fam.a_subscript(k), sb = fam.b_subscript(k);
    xdot -= embed(fam.a_value(k), ring).mul_term(xy(ring, sa.first, sa.second), Rational(1));
    ydot -= embed(fam.b_value(k), ring).mul_term(xy(ring, sb.first, sb.second), Rational(1));
  }
  xdot = xdot.mul_term(xy(ring, 1, 0), Rational(1));
  ydot = ydot.mul_term(xy(ring, 0, 1), Rational(-1));

  Polynomial r = xdot * psi.derivative("x") + ydot * psi.derivative("y");
  for (const auto& [k, g] : table.quantities)
    r -= embed(g, ring).mul_term(xy(ring, q * (k + 1), p * (k + 1)), Rational(1));

  Polynomial::TermMap kept;
  for (const auto& [m, c] : r.terms())
    if (m[0] + m[1] <= table.degree_bound) kept.emplace(m, c);
  return Polynomial(ring, std::move(kept));
}

Polynomial residual(const SystemFamily& family, unsigned D) { return residual(compute_first_integral(family, D)); }

}  // namespace pqs
