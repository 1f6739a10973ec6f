#include "pqsaddle/system_file.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <vector>

namespace pqs {

SystemFileError::SystemFileError(const std::string& what, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

long parse_count(const std::string& word, std::size_t line, const char* what) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size() || value < 0)
    throw SystemFileError(std::string("expected non-negative integer for ") + what + ", got '" + word + "'", line);
  return value;
}

}  // namespace

SystemFamily parse_system_file(std::string_view text) {
  std::optional<std::pair<long, long>> resonance;
  std::size_t resonance_line = 0;
  std::vector<TermSpec> terms;
  std::set<TermIndex> seen;

  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_words(line);
    if (words.empty()) continue;

    if (words[0] == "resonance") {
      if (resonance) throw SystemFileError("duplicate resonance line", lineno);
      if (!terms.empty()) throw SystemFileError("resonance must precede the terms", lineno);
      if (words.size() != 3) throw SystemFileError("expected 'resonance <p> <q>'", lineno);
      long p = parse_count(words[1], lineno, "p"), q = parse_count(words[2], lineno, "q");
      try {
        SystemFamily::create(p, q, {});
      } catch (const std::invalid_argument& e) {
        throw SystemFileError(e.what(), lineno);
      }
      resonance = {p, q};
      resonance_line = lineno;
    } else if (words[0] == "term") {
      if (!resonance) throw SystemFileError("term before resonance line", lineno);
      if (words.size() < 3 || words.size() > 5) throw SystemFileError("expected 'term <u> <v> [a=..] [b=..]'", lineno);
      TermSpec spec;
      spec.index.u = static_cast<unsigned>(parse_count(words[1], lineno, "u"));
      spec.index.v = static_cast<unsigned>(parse_count(words[2], lineno, "v"));
      if (spec.index.u + spec.index.v == 0) throw SystemFileError("term index (0,0) is not a nonlinear term", lineno);
      for (std::size_t i = 3; i < words.size(); ++i) {
        const auto& w = words[i];
        if (w.size() < 3 || (w[0] != 'a' && w[0] != 'b') || w[1] != '=')
          throw SystemFileError("expected a=<rational> or b=<rational>, got '" + w + "'", lineno);
        auto& slot = w[0] == 'a' ? spec.a : spec.b;
        if (slot) throw SystemFileError(std::string("duplicate value for ") + w[0], lineno);
        try {
          slot = Rational::parse(std::string_view(w).substr(2));
        } catch (const std::exception& e) {
          throw SystemFileError(e.what(), lineno);
        }
      }
      if (!seen.insert(spec.index).second)
        throw SystemFileError("duplicate term (" + std::to_string(spec.index.u) + "," + std::to_string(spec.index.v) + ")",
                              lineno);
      terms.push_back(std::move(spec));
    } else {
      throw SystemFileError("unknown directive '" + words[0] + "'", lineno);
    }
  }
  if (!resonance) throw SystemFileError("missing 'resonance <p> <q>' line", 0);
  try {
    return SystemFamily::create(resonance->first, resonance->second, std::move(terms));
  } catch (const std::invalid_argument& e) {
    throw SystemFileError(e.what(), resonance_line);
  }
}

std::string emit_system_file(const SystemFamily& family) {
  std::ostringstream os;
  os << "resonance " << family.p() << ' ' << family.q() << '\n';
  for (const auto& t : family.terms()) {
    os << "term " << t.index.u << ' ' << t.index.v;
    if (t.a) os << " a=" << t.a->str();
    if (t.b) os << " b=" << t.b->str();
    os << '\n';
  }
  return os.str();
}

}  // namespace pqs
