#pragma once

#include <span>
#include <string>
#include <vector>

#include "pqsaddle/polynomial.hpp"

namespace pqs {

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

/// Generators with the order they form a Groebner basis under.
/// Elements are integral with content 1 and positive leading coefficient.
struct GroebnerBasis {
  Ring ring;
  MonomialOrder order;
  std::vector<Polynomial> elements;
  bool reduced = false;
  BuchbergerStats stats;
};

/// Multivariate division remainder r: f - r lies in <G> and no term of r
/// is divisible by a leading monomial of G. Divisors are tried in list order.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, const MonomialOrder& order);

/// Buchberger completion with the coprime and chain criteria
/// (Gebauer-Moeller update) and normal pair selection. Zero inputs are
/// ignored; an all-zero input yields the empty basis of the zero ideal.
/// Throws std::invalid_argument for an empty input list.
GroebnerBasis buchberger(std::span<const Polynomial> F, const MonomialOrder& order);

/// Every S-polynomial of G reduces to zero modulo G.
bool satisfies_buchberger_criterion(const GroebnerBasis& G);

/// Unique reduced basis, sorted by leading monomial ascending. Throws
/// std::invalid_argument when G fails the Buchberger criterion.
GroebnerBasis reduce_basis(const GroebnerBasis& G);

/// reduce_basis(buchberger(F, order)) without re-validating.
GroebnerBasis reduced_groebner_basis(std::span<const Polynomial> F, const MonomialOrder& order);

/// Reduced basis of <F> intersected with the polynomials free of `elim_vars`.
/// `elim_vars` must be exactly the leading variables of F's ring (in any
/// order); they are compared under `outer`, the rest under `inner`.
std::vector<Polynomial> eliminate(std::span<const Polynomial> F, const std::vector<std::string>& elim_vars,
                                  MonomialOrder::Kind inner, MonomialOrder::Kind outer = MonomialOrder::Kind::Lex);

bool ideal_membership(const Polynomial& f, std::span<const Polynomial> F, const MonomialOrder& order);

/// Mutual reduction: each generator set reduces to zero modulo a Groebner
/// basis of the other.
bool ideal_equal(std::span<const Polynomial> F1, std::span<const Polynomial> F2,
                 const MonomialOrder& order = MonomialOrder::degrevlex());

}  // namespace pqs
