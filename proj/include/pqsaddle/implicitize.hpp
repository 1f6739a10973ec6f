#pragma once

#include <vector>

#include "pqsaddle/groebner.hpp"
#include "pqsaddle/reversibility.hpp"

namespace pqs {

struct ImplicitizeOptions {
  /// Order inside the parameter block; the auxiliary block is always lex.
  MonomialOrder::Kind inner = MonomialOrder::Kind::Lex;
  ParameterOrder parameter_order = ParameterOrder::Canonical;
};

/// Generators of H intersected with Q[a, b], returned in the family's
/// parameter ring, normalized and sorted by degrevlex leading monomial.
std::vector<Polynomial> implicitize(const SystemFamily& family, const ImplicitizeOptions& options = {});

struct StabilizationReport {
  unsigned level = 0;
  std::size_t generators_at_level = 0;
  std::size_t generators_at_next = 0;
  bool stable = false;
};

/// Compares the ideals generated at levels K and K+1.
StabilizationReport sibirsky_stabilization(const SystemFamily& family, unsigned K);

}  // namespace pqs
