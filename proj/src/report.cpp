#include "report.hpp"

#include <cstdio>

namespace pqs::report {

std::string fraction(const Rational& r) { return r.num().get_str() + "/" + r.den().get_str(); }

ordered_json polynomial(const Polynomial& f) {
  ordered_json terms = ordered_json::array();
  const auto& names = f.ring()->names();
  for (const auto& t : f.sorted_terms(MonomialOrder::degrevlex())) {
    ordered_json mono = ordered_json::array();
    for (std::size_t i = 0; i < t.monomial.size(); ++i)
      if (t.monomial[i]) mono.push_back({{"variable", names[i]}, {"exponent", t.monomial[i]}});
    terms.push_back({{"coefficient", fraction(t.coefficient)}, {"monomial", std::move(mono)}});
  }
  return {{"text", to_string(f)}, {"terms", std::move(terms)}};
}

ordered_json family(const SystemFamily& fam) {
  ordered_json terms = ordered_json::array();
  for (std::size_t k = 0; k < fam.ell(); ++k) {
    const auto& t = fam.terms()[k];
    ordered_json entry{{"u", t.index.u}, {"v", t.index.v}, {"a_name", fam.a_name(k)}, {"b_name", fam.b_name(k)}};
    entry["a"] = t.a ? ordered_json(fraction(*t.a)) : ordered_json(nullptr);
    entry["b"] = t.b ? ordered_json(fraction(*t.b)) : ordered_json(nullptr);
    terms.push_back(std::move(entry));
  }
  return {{"p", fam.p()}, {"q", fam.q()}, {"terms", std::move(terms)}};
}

std::string digest(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace pqs::report
