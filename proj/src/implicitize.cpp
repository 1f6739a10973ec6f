#include "pqsaddle/implicitize.hpp"

#include <algorithm>

namespace pqs {

std::vector<Polynomial> implicitize(const SystemFamily& family, const ImplicitizeOptions& options) {
  auto prob = build_H_ideal(family, options.parameter_order);
  auto eliminated = eliminate(prob.H, prob.auxiliary, options.inner, MonomialOrder::Kind::Lex);
  const auto order = MonomialOrder::degrevlex();
  std::vector<Polynomial> out;
  for (const auto& g : eliminated) out.push_back(primitive_normalize(embed(g, family.parameter_ring()), order));
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_term(order).monomial, b.leading_term(order).monomial) < 0;
  });
  return out;
}

StabilizationReport sibirsky_stabilization(const SystemFamily& family, unsigned K) {
  auto lower = sibirsky_generators(family, K).polynomials();
  auto upper = sibirsky_generators(family, K + 1).polynomials();
  StabilizationReport r{K, lower.size(), upper.size(), false};
  if (lower.empty() || upper.empty()) {
    r.stable = lower.size() == upper.size();
    return r;
  }
  r.stable = ideal_equal(lower, upper);
  return r;
}

}  // namespace pqs
