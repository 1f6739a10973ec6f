#include "pqsaddle/groebner.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace pqs {

namespace {

// Polynomial with terms sorted descending under the engine's order.
// Basis elements are kept monic so reduction needs no fraction-free scaling.
struct QPoly {
  std::vector<Monomial> mon;
  std::vector<mpq_class> coef;

  bool empty() const { return mon.empty(); }
  std::size_t size() const { return mon.size(); }
  const Monomial& lm() const { return mon.front(); }
  const mpq_class& lc() const { return coef.front(); }
};

class Engine {
public:
  explicit Engine(MonomialOrder order) : order_(std::move(order)) {}

  const MonomialOrder& order() const { return order_; }

  QPoly from(const Polynomial& f) const {
    QPoly out;
    for (const auto& t : f.sorted_terms(order_)) {
      out.mon.push_back(t.monomial);
      out.coef.push_back(t.coefficient.gmp());
    }
    return out;
  }

  Polynomial to(const Ring& ring, const QPoly& f) const {
    Polynomial::TermMap terms;
    for (std::size_t i = 0; i < f.size(); ++i) terms.emplace(f.mon[i], Rational(f.coef[i]));
    return Polynomial(ring, std::move(terms));
  }

  static void make_monic(QPoly& f) {
    if (f.empty() || f.lc() == 1) return;
    mpq_class inv = 1 / f.lc();
    for (auto& c : f.coef) c *= inv;
  }

  // f[from..] - c * (m * g[1..]) for monic g
  QPoly combine(QPoly& f, std::size_t from, const QPoly& g, const Monomial& m, const mpq_class& c) const {
    QPoly out;
    out.mon.reserve(f.size() - from + g.size());
    out.coef.reserve(f.size() - from + g.size());
    std::size_t i = from, j = 1;
    Monomial mg;
    bool have_mg = false;
    while (i < f.size() || j < g.size()) {
      if (j < g.size() && !have_mg) {
        mg = g.mon[j] * m;
        have_mg = true;
      }
      std::strong_ordering cmp = std::strong_ordering::greater;
      if (i == f.size())
        cmp = std::strong_ordering::less;
      else if (j < g.size())
        cmp = order_.compare(f.mon[i], mg);
      if (cmp > 0) {
        out.mon.push_back(std::move(f.mon[i]));
        out.coef.push_back(std::move(f.coef[i]));
        ++i;
      } else if (cmp < 0) {
        out.mon.push_back(std::move(mg));
        out.coef.push_back(-c * g.coef[j]);
        ++j;
        have_mg = false;
      } else {
        mpq_class v = f.coef[i] - c * g.coef[j];
        if (v != 0) {
          out.mon.push_back(std::move(f.mon[i]));
          out.coef.push_back(std::move(v));
        }
        ++i;
        ++j;
        have_mg = false;
      }
    }
    return out;
  }

  // Full reduction by monic divisors: f - r lies in the ideal of G.
  QPoly reduce(QPoly f, const std::vector<const QPoly*>& G) const {
    QPoly r;
    std::size_t head = 0;
    while (head < f.size()) {
      const Monomial& lead = f.mon[head];
      const QPoly* div = nullptr;
      for (const QPoly* g : G)
        if (g->lm().divides(lead)) {
          div = g;
          break;
        }
      if (!div) {
        r.mon.push_back(std::move(f.mon[head]));
        r.coef.push_back(std::move(f.coef[head]));
        ++head;
        continue;
      }
      mpq_class c = f.coef[head];
      Monomial m = lead.quotient(div->lm());
      f = combine(f, head + 1, *div, m, c);
      head = 0;
    }
    return r;
  }

  // S-polynomial of monic f and g.
  QPoly spoly(const QPoly& f, const QPoly& g) const {
    Monomial l = f.lm().lcm(g.lm());
    QPoly fs;
    Monomial mf = l.quotient(f.lm());
    for (std::size_t i = 1; i < f.size(); ++i) {
      fs.mon.push_back(f.mon[i] * mf);
      fs.coef.push_back(f.coef[i]);
    }
    return combine(fs, 0, g, l.quotient(g.lm()), mpq_class(1));
  }

private:
  MonomialOrder order_;
};

void require_ring(const Ring& ring, const Polynomial& f, const char* op) {
  if (!same_ring(ring, f.ring())) throw RingMismatch(std::string(op) + ": polynomials over different variable sets");
}

Ring common_ring(std::span<const Polynomial> F, const char* op) {
  if (F.empty()) return nullptr;
  Ring ring = F.front().ring();
  for (const auto& f : F) require_ring(ring, f, op);
  return ring;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Completion {
public:
  explicit Completion(const Engine& engine)
      : engine_(engine),
        graded_(engine.order().kind() == MonomialOrder::Kind::DegLex ||
                engine.order().kind() == MonomialOrder::Kind::DegRevLex) {}

  void add_input(QPoly f) {
    QPoly h = engine_.reduce(std::move(f), active_ptrs());
    if (h.empty()) return;
    insert(std::move(h));
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (better(pairs_[k], pairs_[best])) best = k;
      Pair pr = std::move(pairs_[best]);
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      ++stats_.pairs_reduced;
      QPoly s = engine_.reduce(engine_.spoly(basis_[pr.i], basis_[pr.j]), active_ptrs());
      if (s.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      insert(std::move(s));
    }
  }

  std::vector<const QPoly*> active_ptrs() const {
    std::vector<const QPoly*> out;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) out.push_back(&basis_[k]);
    return out;
  }

  const BuchbergerStats& stats() const { return stats_; }

private:
  bool better(const Pair& a, const Pair& b) const {
    if (graded_ && a.lcm.degree() != b.lcm.degree())
      return a.lcm.degree() < b.lcm.degree();
    auto c = engine_.order().compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  }

  // Gebauer-Moeller update for a new element h.
  void insert(QPoly h) {
    Engine::make_monic(h);
    const std::size_t hi = basis_.size();
    basis_.push_back(std::move(h));
    active_.push_back(false);
    const Monomial& lh = basis_[hi].lm();

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g]) candidates.push_back({g, hi, lh.lcm(basis_[g].lm())});

    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& pr = candidates[c];
      bool coprime = lh.coprime(basis_[pr.i].lm());
      bool dominated = false;
      if (!coprime) {
        for (std::size_t d = c + 1; d < candidates.size() && !dominated; ++d)
          dominated = candidates[d].lcm.divides(pr.lcm);
        for (std::size_t d = 0; d < kept.size() && !dominated; ++d) dominated = kept[d].lcm.divides(pr.lcm);
      }
      if (!dominated) kept.push_back(pr);
    }

    std::vector<Pair> next;
    for (auto& pr : pairs_) {
      bool drop = lh.divides(pr.lcm) && basis_[pr.i].lm().lcm(lh) != pr.lcm &&
                  basis_[pr.j].lm().lcm(lh) != pr.lcm;
      if (!drop) next.push_back(std::move(pr));
    }
    for (auto& pr : kept) {
      if (lh.coprime(basis_[pr.i].lm())) continue;
      ++stats_.pairs_created;
      next.push_back(std::move(pr));
    }
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(basis_[g].lm())) active_[g] = false;
    active_[hi] = true;
  }

public:
  std::vector<QPoly> basis_;
  std::vector<bool> active_;

private:
  const Engine& engine_;
  bool graded_;
  std::vector<Pair> pairs_;
  BuchbergerStats stats_;
};

std::vector<QPoly> to_engine(const Engine& e, std::span<const Polynomial> G) {
  std::vector<QPoly> out;
  for (const auto& g : G)
    if (!g.is_zero()) {
      out.push_back(e.from(g));
      Engine::make_monic(out.back());
    }
  return out;
}

std::vector<const QPoly*> pointers(const std::vector<QPoly>& v) {
  std::vector<const QPoly*> out;
  for (const auto& x : v) out.push_back(&x);
  return out;
}

GroebnerBasis reduce_unchecked(const GroebnerBasis& G) {
  Engine e(G.order);
  auto polys = to_engine(e, G.elements);
  // minimal basis: drop elements whose leading monomial is divisible by another's
  std::vector<QPoly> minimal;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < polys.size() && !redundant; ++j) {
      if (i == j || !polys[j].lm().divides(polys[i].lm())) continue;
      // equal leading monomials: keep the first occurrence
      redundant = polys[j].lm() != polys[i].lm() || j < i;
    }
    if (!redundant) minimal.push_back(polys[i]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const QPoly& a, const QPoly& b) { return e.order().compare(a.lm(), b.lm()) < 0; });
  std::vector<QPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const QPoly*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    reduced.push_back(e.reduce(minimal[i], others));
  }
  GroebnerBasis out{G.ring, G.order, {}, true, G.stats};
  for (const auto& r : reduced) out.elements.push_back(primitive_normalize(e.to(G.ring, r), G.order));
  return out;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, const MonomialOrder& order) {
  for (const auto& g : G) require_ring(f.ring(), g, "normal_form");
  if (f.is_zero()) return f;
  Engine e(order);
  auto basis = to_engine(e, G);
  return e.to(f.ring(), e.reduce(e.from(f), pointers(basis)));
}

GroebnerBasis buchberger(std::span<const Polynomial> F, const MonomialOrder& order) {
  if (F.empty()) throw std::invalid_argument("buchberger: empty generator list");
  Ring ring = common_ring(F, "buchberger");
  Engine e(order);
  auto inputs = to_engine(e, F);
  std::stable_sort(inputs.begin(), inputs.end(), [&](const QPoly& a, const QPoly& b) {
    if (a.lm().degree() != b.lm().degree()) return a.lm().degree() < b.lm().degree();
    return order.compare(a.lm(), b.lm()) < 0;
  });
  Completion c(e);
  for (auto& f : inputs) c.add_input(std::move(f));
  GroebnerBasis out{ring, order, {}, false, c.stats()};
  for (std::size_t k = 0; k < c.basis_.size(); ++k)
    if (c.active_[k]) out.elements.push_back(primitive_normalize(e.to(ring, c.basis_[k]), order));
  return out;
}

bool satisfies_buchberger_criterion(const GroebnerBasis& G) {
  Engine e(G.order);
  auto polys = to_engine(e, G.elements);
  auto ptrs = pointers(polys);
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      if (polys[i].lm().coprime(polys[j].lm())) continue;
      if (!e.reduce(e.spoly(polys[i], polys[j]), ptrs).empty()) return false;
    }
  return true;
}

GroebnerBasis reduce_basis(const GroebnerBasis& G) {
  if (!satisfies_buchberger_criterion(G)) throw std::invalid_argument("reduce_basis: input is not a Groebner basis");
  return reduce_unchecked(G);
}

GroebnerBasis reduced_groebner_basis(std::span<const Polynomial> F, const MonomialOrder& order) {
  return reduce_unchecked(buchberger(F, order));
}

std::vector<Polynomial> eliminate(std::span<const Polynomial> F, const std::vector<std::string>& elim_vars,
                                  MonomialOrder::Kind inner, MonomialOrder::Kind outer) {
  if (F.empty()) return {};
  Ring ring = common_ring(F, "eliminate");
  const std::size_t k = elim_vars.size();
  if (k > ring->size()) throw std::invalid_argument("eliminate: more variables than the ring has");
  for (const auto& v : elim_vars) {
    auto idx = ring->index_of(v);
    if (!idx) throw std::invalid_argument("eliminate: unknown variable '" + v + "'");
    if (*idx >= k) throw std::invalid_argument("eliminate: '" + v + "' is not in the leading block of the ring");
  }
  MonomialOrder order = k == 0 ? MonomialOrder::of(inner) : MonomialOrder::block(k, outer, inner);
  auto G = reduced_groebner_basis(F, order);
  std::vector<Polynomial> out;
  for (const auto& g : G.elements) {
    bool free = std::all_of(g.terms().begin(), g.terms().end(), [&](const auto& t) {
      for (std::size_t i = 0; i < k; ++i)
        if (t.first[i] != 0) return false;
      return true;
    });
    if (free) out.push_back(g);
  }
  return out;
}

bool ideal_membership(const Polynomial& f, std::span<const Polynomial> F, const MonomialOrder& order) {
  for (const auto& g : F) require_ring(f.ring(), g, "ideal_membership");
  if (f.is_zero()) return true;
  bool all_zero = std::all_of(F.begin(), F.end(), [](const Polynomial& g) { return g.is_zero(); });
  if (all_zero) return false;
  auto G = buchberger(F, order);
  return normal_form(f, G.elements, order).is_zero();
}

bool ideal_equal(std::span<const Polynomial> F1, std::span<const Polynomial> F2, const MonomialOrder& order) {
  std::vector<Polynomial> all(F1.begin(), F1.end());
  all.insert(all.end(), F2.begin(), F2.end());
  common_ring(all, "ideal_equal");
  auto basis_of = [&](std::span<const Polynomial> F) {
    bool zero = std::all_of(F.begin(), F.end(), [](const Polynomial& g) { return g.is_zero(); });
    return zero ? std::vector<Polynomial>{} : buchberger(F, order).elements;
  };
  auto contained = [&](std::span<const Polynomial> F, const std::vector<Polynomial>& G) {
    return std::all_of(F.begin(), F.end(),
                       [&](const Polynomial& f) { return normal_form(f, G, order).is_zero(); });
  };
  auto G1 = basis_of(F1), G2 = basis_of(F2);
  return contained(F1, G2) && contained(F2, G1);
}

}  // namespace pqs
