#pragma once

#include <random>
#include <string_view>
#include <vector>

#include "pqsaddle/implicitize.hpp"
#include "pqsaddle/integral.hpp"
#include "pqsaddle/reversibility.hpp"
#include "pqsaddle/system.hpp"

namespace pqs::testing {

inline std::vector<TermSpec> uv_terms(std::initializer_list<std::pair<unsigned, unsigned>> idx) {
  std::vector<TermSpec> out;
  for (auto [u, v] : idx) out.push_back({{u, v}, std::nullopt, std::nullopt});
  return out;
}

/// The degree-five 1:-2 family.
inline SystemFamily example5() { return SystemFamily::create(1, 2, uv_terms({{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}})); }

/// A p:-q family with every term of u + v <= 2.
inline SystemFamily quadratic_uv(long p, long q) {
  return SystemFamily::create(p, q, uv_terms({{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}));
}

inline SystemFamily family_2_3() { return quadratic_uv(2, 3); }

/// Numerator in [-bound, bound], denominator in [1, bound].
inline Rational random_rational(std::mt19937_64& rng, long bound = 9) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero(std::mt19937_64& rng, long bound = 9) {
  for (;;)
    if (auto r = random_rational(rng, bound); !r.is_zero()) return r;
}

inline Polynomial random_polynomial(const Ring& ring, std::mt19937_64& rng, int max_terms = 4, int max_exp = 2) {
  std::uniform_int_distribution<int> nterms(0, max_terms), exp(0, max_exp);
  Polynomial f(ring);
  for (int t = nterms(rng); t > 0; --t) {
    Monomial m(ring->size());
    for (std::size_t i = 0; i < ring->size(); ++i) m.set(i, static_cast<Monomial::Exponent>(exp(rng)));
    f.add_term(m, random_rational(rng, 5));
  }
  return f;
}

inline SystemFamily random_instance(const SystemFamily& shape, std::mt19937_64& rng) {
  std::vector<std::pair<Rational, Rational>> values;
  for (std::size_t k = 0; k < shape.ell(); ++k) values.emplace_back(random_rational(rng), random_rational(rng));
  return shape.with_values(values);
}

/// b = (q/p) a on every term.
inline SystemFamily random_reversible(const SystemFamily& shape, std::mt19937_64& rng) {
  const Rational ratio(shape.q(), shape.p());
  std::vector<std::pair<Rational, Rational>> values;
  for (std::size_t k = 0; k < shape.ell(); ++k) {
    Rational a = random_rational(rng);
    values.emplace_back(a, ratio * a);
  }
  return shape.with_values(values);
}

inline Polynomial P(const SystemFamily& fam, std::string_view text) {
  return parse_polynomial(text, fam.parameter_ring());
}

/// Exponent tuple of a monomial written over the family's parameters, e.g. "a20^2*b02".
inline Monomial nu(const SystemFamily& fam, std::string_view text) {
  return P(fam, text).leading_term(MonomialOrder::degrevlex()).monomial;
}

/// The nine published generators for example5().
inline std::vector<Polynomial> published_example5_ideal(const SystemFamily& fam) {
  std::vector<Polynomial> out;
  for (const char* s : {"2*a21 - b21", "a40*b01^2 - 2*a20^2*b02", "4*a02*a40 - b02*b40",
                        "8*a02*a20^2 - b01^2*b40", "2*a02*a20*b20 - a01*b01*b40", "2*a01*a40*b01 - a20*b02*b20",
                        "4*a01*a20 - b01*b20", "a02*b20^2 - 2*a01^2*b40", "8*a01^2*a40 - b02*b20^2"})
    out.push_back(P(fam, s));
  return out;
}

/// Evaluate a parameter polynomial at a numeric family's values.
inline Rational evaluate(const Polynomial& f, const SystemFamily& numeric) {
  std::map<std::string, Binding> values;
  for (std::size_t k = 0; k < numeric.ell(); ++k) {
    values.emplace(numeric.a_name(k), *numeric.terms()[k].a);
    values.emplace(numeric.b_name(k), *numeric.terms()[k].b);
  }
  return substitute(f, values).constant_value();
}

}  // namespace pqs::testing
