#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "pqsaddle/system.hpp"

namespace pqs::report {

using nlohmann::ordered_json;

/// "num/den", with den = 1 spelled out.
std::string fraction(const Rational& r);

/// {"text": ..., "terms": [{"coefficient": "n/d", "monomial": [{"variable", "exponent"}...]}...]}
/// with terms in printing order.
ordered_json polynomial(const Polynomial& f);

ordered_json family(const SystemFamily& family);

/// FNV-1a, 64-bit, as 16 lowercase hex digits.
std::string digest(std::string_view data);

}  // namespace pqs::report
