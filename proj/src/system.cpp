#include "pqsaddle/system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pqs {

std::string parameter_name(char prefix, Bidegree s) {
  std::string out(1, prefix);
  if (s.first >= 0 && s.first <= 9 && s.second >= 0 && s.second <= 9)
    return out + std::to_string(s.first) + std::to_string(s.second);
  return out + "_" + std::to_string(s.first) + "_" + std::to_string(s.second);
}

SystemFamily SystemFamily::create(long p, long q, std::vector<TermSpec> terms) {
  if (p <= 0 || q <= 0) throw std::invalid_argument("resonance p, q must be positive");
  if (std::gcd(p, q) != 1)
    throw std::invalid_argument("resonance " + std::to_string(p) + ":-" + std::to_string(q) + " is not coprime");
  std::set<TermIndex> seen;
  for (const auto& t : terms) {
    if (t.index.u + t.index.v == 0) throw std::invalid_argument("term index (0,0) is not a nonlinear term");
    if (!seen.insert(t.index).second)
      throw std::invalid_argument("duplicate term (" + std::to_string(t.index.u) + "," + std::to_string(t.index.v) + ")");
  }
  std::sort(terms.begin(), terms.end(), [](const TermSpec& x, const TermSpec& y) {
    unsigned dx = x.index.u + x.index.v, dy = y.index.u + y.index.v;
    if (dx != dy) return dx < dy;
    return x.index.u > y.index.u;
  });

  SystemFamily f;
  f.resonance_ = {p, q};
  f.terms_ = std::move(terms);
  const std::size_t ell = f.terms_.size();
  std::vector<std::string> names(2 * ell);
  for (std::size_t k = 0; k < ell; ++k) {
    names[k] = parameter_name('a', f.a_subscript(k));
    names[2 * ell - 1 - k] = parameter_name('b', f.b_subscript(k));
  }
  f.ring_ = VariableSet::make(std::move(names));
  return f;
}

Bidegree SystemFamily::a_subscript(std::size_t k) const {
  const auto& t = terms_.at(k).index;
  return {q() * static_cast<long>(t.u), p() * static_cast<long>(t.v)};
}

Bidegree SystemFamily::b_subscript(std::size_t k) const {
  const auto& t = terms_.at(k).index;
  return {q() * static_cast<long>(t.v), p() * static_cast<long>(t.u)};
}

Bidegree SystemFamily::position_weight(std::size_t i) const {
  return i < ell() ? a_subscript(i) : b_subscript(2 * ell() - 1 - i);
}

bool SystemFamily::is_numeric() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const TermSpec& t) { return t.a && t.b; });
}

bool SystemFamily::is_symbolic() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const TermSpec& t) { return !t.a && !t.b; });
}

Polynomial SystemFamily::a_value(std::size_t k) const {
  const auto& t = terms_.at(k);
  return t.a ? Polynomial::constant(ring_, *t.a) : Polynomial::variable(ring_, a_name(k));
}

Polynomial SystemFamily::b_value(std::size_t k) const {
  const auto& t = terms_.at(k);
  return t.b ? Polynomial::constant(ring_, *t.b) : Polynomial::variable(ring_, b_name(k));
}

SystemFamily SystemFamily::with_values(const std::vector<std::pair<Rational, Rational>>& values) const {
  if (values.size() != ell()) throw std::invalid_argument("with_values: expected one (a, b) pair per term");
  SystemFamily out = *this;
  for (std::size_t k = 0; k < ell(); ++k) {
    out.terms_[k].a = values[k].first;
    out.terms_[k].b = values[k].second;
  }
  return out;
}

SystemFamily SystemFamily::symbolic() const {
  SystemFamily out = *this;
  for (auto& t : out.terms_) t.a.reset(), t.b.reset();
  return out;
}

bool operator==(const SystemFamily& x, const SystemFamily& y) {
  if (x.resonance_ != y.resonance_ || x.terms_.size() != y.terms_.size()) return false;
  for (std::size_t k = 0; k < x.terms_.size(); ++k) {
    const auto &s = x.terms_[k], &t = y.terms_[k];
    if (s.index != t.index || s.a != t.a || s.b != t.b) return false;
  }
  return true;
}

namespace {

void require_tuple(const SystemFamily& family, const Monomial& nu) {
  if (nu.size() != 2 * family.ell())
    throw std::invalid_argument("exponent tuple has length " + std::to_string(nu.size()) + ", expected " +
                                std::to_string(2 * family.ell()));
}

}  // namespace

Bidegree L_map(const SystemFamily& family, const Monomial& nu) {
  require_tuple(family, nu);
  Bidegree l;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (nu[i] == 0) continue;
    auto w = family.position_weight(i);
    l.first += static_cast<long>(nu[i]) * w.first;
    l.second += static_cast<long>(nu[i]) * w.second;
  }
  return l;
}

Monomial hat(const Monomial& nu) {
  auto e = nu.exponents();
  std::reverse(e.begin(), e.end());
  return Monomial(std::move(e));
}

Rational kappa(const SystemFamily& family, const Monomial& nu) {
  require_tuple(family, nu);
  long diff = 0;
  for (std::size_t i = 0; i < nu.size(); ++i) diff += i < family.ell() ? long(nu[i]) : -long(nu[i]);
  return Rational(family.q(), family.p()).pow(diff);
}

std::optional<long> resonant_level(const SystemFamily& family, const Monomial& nu) {
  auto l = L_map(family, nu);
  if (l.first % family.q() != 0 || l.second % family.p() != 0) return std::nullopt;
  long k = l.first / family.q();
  if (l.second / family.p() != k) return std::nullopt;
  return k;
}

SystemFamily scale_parameters(const SystemFamily& family, const Rational& alpha) {
  if (alpha.is_zero()) throw std::invalid_argument("scale_parameters: alpha must be nonzero");
  if (!family.is_numeric()) throw std::invalid_argument("scale_parameters: family has symbolic parameters");
  std::vector<std::pair<Rational, Rational>> values;
  for (std::size_t k = 0; k < family.ell(); ++k) {
    const auto& t = family.terms()[k];
    long pu = family.p() * long(t.index.u), pv = family.p() * long(t.index.v);
    long qu = family.q() * long(t.index.u), qv = family.q() * long(t.index.v);
    values.emplace_back(alpha.pow(pv - qu) * *t.a, alpha.pow(pu - qv) * *t.b);
  }
  return family.with_values(values);
}

bool check_jk_homogeneous(const SystemFamily& family, const Polynomial& f, Bidegree jk) {
  if (!same_ring(f.ring(), family.parameter_ring()))
    throw RingMismatch("check_jk_homogeneous: polynomial is not in the family's parameter ring");
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& t) { return L_map(family, t.first) == jk; });
}

}  // namespace pqs
