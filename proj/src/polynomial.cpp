#include "pqsaddle/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace pqs {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty variable name");
    if (!index_.emplace(names_[i], i).second) throw std::invalid_argument("duplicate variable name '" + names_[i] + "'");
  }
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool same_ring(const Ring& a, const Ring& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

void Monomial::set(std::size_t i, Exponent e) {
  degree_ = degree_ - exps_.at(i) + e;
  exps_[i] = e;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw RingMismatch("monomial length mismatch");
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r(size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (divisor.exps_[i] > exps_[i]) throw std::invalid_argument("monomial quotient: not divisible");
    r.exps_[i] = exps_[i] - divisor.exps_[i];
  }
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(size());
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    d += r.exps_[i];
  }
  r.degree_ = d;
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

// ----------------------------------------------------------- MonomialOrder

namespace {

std::strong_ordering cmp_u64(std::uint64_t a, std::uint64_t b) { return a <=> b; }

std::strong_ordering compare_range(MonomialOrder::Kind kind, const Monomial& a, const Monomial& b, std::size_t lo,
                                   std::size_t hi) {
  using Kind = MonomialOrder::Kind;
  if (kind != Kind::Lex && lo == 0 && hi == a.size()) {
    if (auto c = cmp_u64(a.degree(), b.degree()); c != 0) return c;
  } else if (kind != Kind::Lex) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (auto c = cmp_u64(da, db); c != 0) return c;
  }
  if (kind == Kind::DegRevLex) {
    for (std::size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = lo; i < hi; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

const char* kind_name(MonomialOrder::Kind k) {
  switch (k) {
    case MonomialOrder::Kind::Lex: return "lex";
    case MonomialOrder::Kind::DegLex: return "deglex";
    case MonomialOrder::Kind::DegRevLex: return "degrevlex";
    case MonomialOrder::Kind::Block: return "block";
  }
  return "?";
}

}  // namespace

MonomialOrder MonomialOrder::of(Kind k) {
  if (k == Kind::Block) throw std::invalid_argument("block order needs an elimination count");
  return MonomialOrder(k);
}

MonomialOrder MonomialOrder::block(std::size_t elim_count, Kind outer, Kind inner) {
  if (elim_count == 0) throw std::invalid_argument("block order needs a positive elimination count");
  if (outer == Kind::Block || inner == Kind::Block) throw std::invalid_argument("nested block orders are not supported");
  MonomialOrder o(Kind::Block);
  o.elim_count_ = elim_count;
  o.outer_ = outer;
  o.inner_ = inner;
  return o;
}

MonomialOrder MonomialOrder::from_name(std::string_view name) {
  if (name == "lex") return lex();
  if (name == "deglex") return deglex();
  if (name == "degrevlex" || name == "grevlex") return degrevlex();
  throw std::invalid_argument("unknown monomial order '" + std::string(name) + "'");
}

std::string MonomialOrder::name() const {
  if (kind_ != Kind::Block) return kind_name(kind_);
  return std::string("block(") + std::to_string(elim_count_) + "," + kind_name(outer_) + "," + kind_name(inner_) + ")";
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw RingMismatch("monomial length mismatch in comparison");
  if (kind_ != Kind::Block) return compare_range(kind_, a, b, 0, a.size());
  std::size_t k = std::min(elim_count_, a.size());
  if (auto c = compare_range(outer_, a, b, 0, k); c != 0) return c;
  return compare_range(inner_, a, b, k, a.size());
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(Ring ring, TermMap terms) : ring_(std::move(ring)) {
  for (auto& [m, c] : terms) {
    if (m.size() != ring_->size()) throw RingMismatch("monomial length does not match ring");
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
  }
}

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.emplace(Monomial(p.ring_->size()), c);
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::string_view name) {
  auto idx = ring->index_of(name);
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  Monomial m(ring->size());
  m.set(*idx, 1);
  return monomial(std::move(ring), std::move(m));
}

Polynomial Polynomial::monomial(Ring ring, Monomial m, const Rational& c) {
  if (m.size() != ring->size()) throw RingMismatch("monomial length does not match ring");
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw std::invalid_argument("polynomial is not constant: " + to_string(*this));
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::vector<Term> Polynomial::sorted_terms(const MonomialOrder& order) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back({m, c});
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
  return out;
}

Term Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::invalid_argument("leading term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (order.compare(it->first, best->first) > 0) best = it;
  return {best->first, best->second};
}

void Polynomial::require_same_ring(const Polynomial& o, const char* op) const {
  if (!same_ring(ring_, o.ring_)) throw RingMismatch(std::string(op) + ": polynomials over different variable sets");
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(o, "add");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_ring(o, "subtract");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b, "multiply");
  Polynomial r(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, Rational(1));
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [mm, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, v * c);
  return r;
}

Polynomial Polynomial::derivative(std::string_view var) const {
  auto idx = ring_->index_of(var);
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(var) + "'");
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) {
    auto e = m[*idx];
    if (e == 0) continue;
    Monomial d = m;
    d.set(*idx, e - 1);
    r.add_term(d, c * Rational(static_cast<long>(e)));
  }
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  return a.terms_.size() == b.terms_.size() &&
         std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
}

// ------------------------------------------------------------ substitution

Polynomial substitute(const Polynomial& f, const std::map<std::string, Binding>& bindings, const Ring& target) {
  const auto& src = *f.ring();
  for (const auto& [name, value] : bindings) {
    if (!src.contains(name)) throw std::invalid_argument("substitute: unknown variable '" + name + "'");
    if (auto* p = std::get_if<Polynomial>(&value); p && !same_ring(p->ring(), target))
      throw RingMismatch("substitute: image of '" + name + "' is not in the target ring");
  }
  std::vector<Polynomial> images;
  images.reserve(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto it = bindings.find(src.name(i));
    if (it == bindings.end()) {
      if (!target->contains(src.name(i)))
        throw std::invalid_argument("substitute: unbound variable '" + src.name(i) + "' missing from target ring");
      images.push_back(Polynomial::variable(target, src.name(i)));
    } else if (auto* r = std::get_if<Rational>(&it->second)) {
      images.push_back(Polynomial::constant(target, *r));
    } else {
      images.push_back(std::get<Polynomial>(it->second));
    }
  }
  // powers[i][e] = images[i]^e, grown on demand
  std::vector<std::vector<Polynomial>> powers(src.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial out(target);
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.size() && !term.is_zero(); ++i)
      if (m[i] != 0) term *= power(i, m[i]);
    out += term;
  }
  return out;
}

Polynomial substitute(const Polynomial& f, const std::map<std::string, Binding>& bindings) {
  return substitute(f, bindings, f.ring());
}

Polynomial embed(const Polynomial& f, const Ring& target) {
  if (same_ring(f.ring(), target)) return f;
  const auto& src = *f.ring();
  std::vector<bool> used(src.size(), false);
  for (const auto& [m, c] : f.terms())
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) used[i] = true;
  std::vector<std::size_t> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (!used[i]) continue;
    auto idx = target->index_of(src.name(i));
    if (!idx) throw RingMismatch("embed: variable '" + src.name(i) + "' not in target ring");
    map[i] = *idx;
  }
  Polynomial::TermMap out;
  for (const auto& [m, c] : f.terms()) {
    Monomial t(target->size());
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t.set(map[i], m[i]);
    out.emplace(std::move(t), c);
  }
  return Polynomial(target, std::move(out));
}

Polynomial primitive_normalize(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) return f;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& [m, c] : f.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
  }
  // c * den_lcm / num_gcd is integral with content 1
  Rational scale(den_lcm, num_gcd);
  if (f.leading_term(order).coefficient.sign() < 0) scale = -scale;
  return f * scale;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << to_string(f); }

}  // namespace pqs
