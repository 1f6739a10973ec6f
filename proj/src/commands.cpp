#include "pqsaddle/commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "pqsaddle/integral.hpp"
#include "pqsaddle/system_file.hpp"
#include "report.hpp"

namespace pqs {

namespace {

using report::ordered_json;

struct Output {
  ordered_json family = nullptr;
  ordered_json result = ordered_json::object();
  std::ostringstream text;
  int exit_code = 0;
};

template <class Body>
RunReport run(std::string command, std::string_view digest_input, Body&& body) {
  auto start = std::chrono::steady_clock::now();
  Output out;
  body(out);
  double millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  RunReport r;
  r.command = std::move(command);
  r.inputs_digest = report::digest(std::string(r.command) + '\0' + std::string(digest_input));
  r.text = out.text.str();
  r.exit_code = out.exit_code;
  r.millis = millis;
  ordered_json j{{"command", r.command},
                 {"inputs_digest", r.inputs_digest},
                 {"family", std::move(out.family)},
                 {"result", std::move(out.result)},
                 {"millis", millis}};
  r.json = j.dump(2);
  return r;
}

std::string args_key(std::initializer_list<std::string> parts) {
  std::string s;
  for (const auto& p : parts) s += p + '\0';
  return s;
}

ordered_json polynomial_list(const std::vector<Polynomial>& polys) {
  ordered_json arr = ordered_json::array();
  for (const auto& f : polys) arr.push_back(report::polynomial(f));
  return arr;
}

ordered_json exponents(const Monomial& m) {
  ordered_json arr = ordered_json::array();
  for (auto e : m.exponents()) arr.push_back(e);
  return arr;
}

const char* bool_word(bool b) { return b ? "true" : "false"; }

std::string order_word(MonomialOrder::Kind k) { return MonomialOrder::of(k).name(); }

}  // namespace

RunReport cmd_quantities(std::string_view system_text, unsigned K) {
  if (K < 1) throw InputError("--level must be at least 1");
  auto fam = parse_system_file(system_text);
  return run("quantities", args_key({std::string(system_text), std::to_string(K)}), [&](Output& out) {
    out.family = report::family(fam);
    auto table = compute_saddle_quantities(fam, K);
    ordered_json qs = ordered_json::array();
    bool all_zero = true;
    for (std::size_t i = 0; i < table.g.size(); ++i) {
      long k = long(i) + 1;
      Bidegree idx{fam.q() * k, fam.p() * k};
      const auto& g = table.g[i];
      all_zero = all_zero && g.is_zero();
      out.text << parameter_name('g', idx) << " = " << g << '\n';
      qs.push_back({{"k", k}, {"index", {idx.first, idx.second}}, {"polynomial", report::polynomial(g)}});
    }
    out.result = {{"level", K}, {"quantities", std::move(qs)}, {"all_zero", all_zero}};
  });
}

RunReport cmd_integral(std::string_view system_text, unsigned D) {
  auto fam = parse_system_file(system_text);
  if (long(D) < fam.p() + fam.q())
    throw InputError("--degree must be at least p + q = " + std::to_string(fam.p() + fam.q()));
  return run("integral", args_key({std::string(system_text), std::to_string(D)}), [&](Output& out) {
    out.family = report::family(fam);
    auto table = compute_first_integral(fam, D);
    std::vector<std::pair<Bidegree, const Polynomial*>> nonzero;
    for (const auto& [k, v] : table.v)
      if (!v.is_zero()) nonzero.emplace_back(k, &v);
    std::stable_sort(nonzero.begin(), nonzero.end(), [](const auto& x, const auto& y) {
      return x.first.first + x.first.second < y.first.first + y.first.second;
    });
    ordered_json coeffs = ordered_json::array();
    for (const auto& [k, v] : nonzero) {
      out.text << "v(" << k.first << "," << k.second << ") = " << *v << '\n';
      coeffs.push_back({{"index", {k.first, k.second}}, {"polynomial", report::polynomial(*v)}});
    }
    ordered_json qs = ordered_json::array();
    for (const auto& [k, g] : table.quantities) {
      Bidegree idx{fam.q() * k, fam.p() * k};
      if ((k + 1) * (fam.p() + fam.q()) > long(D)) continue;
      out.text << parameter_name('g', idx) << " = " << g << '\n';
      qs.push_back({{"k", k}, {"index", {idx.first, idx.second}}, {"polynomial", report::polynomial(g)}});
    }
    bool consistent = residual(table).is_zero();
    out.text << "residual zero: " << bool_word(consistent) << '\n';
    out.result = {{"degree", D},
                  {"coefficients", std::move(coeffs)},
                  {"quantities", std::move(qs)},
                  {"residual_zero", consistent}};
  });
}

RunReport cmd_reversible(std::string_view system_text) {
  auto fam = parse_system_file(system_text);
  if (!fam.is_numeric()) throw InputError("reversible: every term needs numeric a= and b= values");
  return run("reversible", args_key({std::string(system_text)}), [&](Output& out) {
    out.family = report::family(fam);
    auto verdict = is_time_reversible(fam);
    out.text << "reversible: " << bool_word(verdict.reversible) << '\n';
    ordered_json violations = ordered_json::array();
    for (const auto& v : verdict.violations) {
      out.text << "term (" << v.index.u << "," << v.index.v << "): b = " << v.b << ", expected " << v.expected_b
               << '\n';
      violations.push_back({{"u", v.index.u},
                            {"v", v.index.v},
                            {"a", report::fraction(v.a)},
                            {"b", report::fraction(v.b)},
                            {"expected_b", report::fraction(v.expected_b)}});
    }
    out.result = {{"reversible", verdict.reversible}, {"violations", std::move(violations)}};
    out.exit_code = verdict.reversible ? 0 : 1;
  });
}

RunReport cmd_sibirsky(std::string_view system_text, unsigned K) {
  if (K < 1) throw InputError("--level must be at least 1");
  auto fam = parse_system_file(system_text);
  return run("sibirsky", args_key({std::string(system_text), std::to_string(K)}), [&](Output& out) {
    out.family = report::family(fam);
    auto set = sibirsky_generators(fam, K);
    ordered_json gens = ordered_json::array();
    for (const auto& g : set.generators) {
      out.text << "level " << g.level << ": " << g.binomial << '\n';
      gens.push_back({{"level", g.level}, {"nu", exponents(g.nu)}, {"polynomial", report::polynomial(g.binomial)}});
    }
    out.result = {{"level", K}, {"generators", std::move(gens)}};
  });
}

RunReport cmd_implicitize(std::string_view system_text, const ImplicitizeCommandOptions& options) {
  if (options.check_sibirsky_level && *options.check_sibirsky_level < 1)
    throw InputError("--level must be at least 1");
  auto fam = parse_system_file(system_text);
  std::string param_word = options.parameter_order == ParameterOrder::ByName ? "name" : "canonical";
  std::string check_word = options.check_sibirsky_level ? std::to_string(*options.check_sibirsky_level) : "-";
  return run("implicitize",
             args_key({std::string(system_text), order_word(options.inner), param_word, check_word}),
             [&](Output& out) {
               out.family = report::family(fam);
               auto gens = implicitize(fam, {options.inner, options.parameter_order});
               for (const auto& g : gens) out.text << g << '\n';
               out.result = {{"order", order_word(options.inner)},
                             {"parameter_order", param_word},
                             {"generators", polynomial_list(gens)}};
               if (options.check_sibirsky_level) {
                 auto sib = sibirsky_generators(fam, *options.check_sibirsky_level).polynomials();
                 bool equal = ideal_equal(gens, sib);
                 out.text << "ideals equal: " << bool_word(equal) << '\n';
                 out.result["check"] = {
                     {"against", "sibirsky"}, {"level", *options.check_sibirsky_level}, {"equal", equal}};
                 out.exit_code = equal ? 0 : 1;
               }
             });
}

namespace {

RunReport membership_report(const SystemFamily& fam, std::string command, std::string key, const Polynomial& f,
                            unsigned K, ordered_json subject) {
  return run(std::move(command), key, [&](Output& out) {
    out.family = report::family(fam);
    auto sib = sibirsky_generators(fam, K).polynomials();
    const auto order = MonomialOrder::degrevlex();
    Polynomial nf = f;
    if (!sib.empty()) nf = normal_form(f, reduced_groebner_basis(sib, order).elements, order);
    bool member = nf.is_zero();
    out.text << "member: " << bool_word(member) << '\n';
    out.text << "normal form: " << nf << '\n';
    out.result = {{"subject", std::move(subject)},
                  {"level", K},
                  {"member", member},
                  {"normal_form", report::polynomial(nf)}};
    out.exit_code = member ? 0 : 1;
  });
}

}  // namespace

RunReport cmd_membership(std::string_view system_text, std::string_view expression, unsigned K) {
  if (K < 1) throw InputError("--level must be at least 1");
  auto fam = parse_system_file(system_text);
  Polynomial f = parse_polynomial(expression, fam.parameter_ring());
  return membership_report(fam, "membership", args_key({std::string(system_text), std::string(expression),
                                                        std::to_string(K)}),
                           f, K, report::polynomial(f));
}

RunReport cmd_quantity_membership(std::string_view system_text, unsigned k, unsigned K) {
  if (K < 1 || k < 1) throw InputError("--level and --quantity must be at least 1");
  auto fam = parse_system_file(system_text).symbolic();
  Polynomial g = compute_saddle_quantities(fam, k).g.back();
  ordered_json subject{{"quantity", parameter_name('g', {fam.q() * long(k), fam.p() * long(k)})},
                       {"polynomial", report::polynomial(g)}};
  return membership_report(fam, "membership",
                           args_key({std::string(system_text), "g" + std::to_string(k), std::to_string(K)}), g, K,
                           std::move(subject));
}

RunReport cmd_groebner(std::string_view poly_text, std::string_view order_name) {
  MonomialOrder order;
  try {
    order = MonomialOrder::from_name(order_name);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  std::vector<std::string> vars;
  std::vector<std::pair<std::size_t, std::string>> lines;
  bool explicit_vars = false;
  {
    std::istringstream is{std::string(poly_text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      std::istringstream ws(line);
      std::string first;
      ws >> first;
      if (first == "vars") {
        if (explicit_vars || !lines.empty()) throw InputError("line " + std::to_string(lineno) + ": misplaced vars line");
        explicit_vars = true;
        std::string rest;
        std::getline(ws, rest);
        for (char& c : rest)
          if (c == ',') c = ' ';
        std::istringstream names(rest);
        for (std::string n; names >> n;) vars.push_back(n);
        continue;
      }
      lines.emplace_back(lineno, line);
    }
  }
  if (lines.empty()) throw InputError("no polynomials in input");
  if (!explicit_vars) {
    static const std::regex ident("[A-Za-z][A-Za-z0-9_]*");
    for (const auto& [_, line] : lines)
      for (std::sregex_iterator it(line.begin(), line.end(), ident), end; it != end; ++it)
        if (std::find(vars.begin(), vars.end(), it->str()) == vars.end()) vars.push_back(it->str());
  }
  Ring ring;
  try {
    ring = VariableSet::make(vars);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  std::vector<Polynomial> polys;
  for (const auto& [lineno, line] : lines) {
    try {
      polys.push_back(parse_polynomial(line, ring));
    } catch (const ParseError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return run("groebner", args_key({std::string(poly_text), order.name()}), [&](Output& out) {
    auto basis = reduced_groebner_basis(polys, order);
    for (const auto& g : basis.elements) out.text << g << '\n';
    ordered_json var_list = ordered_json::array();
    for (const auto& v : vars) var_list.push_back(v);
    out.result = {{"order", order.name()},
                  {"variables", std::move(var_list)},
                  {"basis", polynomial_list(basis.elements)},
                  {"pairs_reduced", basis.stats.pairs_reduced}};
  });
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MonomialOrder::Kind order_kind(const std::string& name) {
  try {
    return MonomialOrder::from_name(name).kind();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Saddle quantities, first integrals and Sibirsky ideals of p:-q resonant systems", "pqsaddle"};
  app.require_subcommand(1);

  std::string file, json_path, order = "lex", param_order = "canonical", check_against, expression;
  unsigned level = 3, degree = 12, quantity = 0;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "input file")->required();
    sub->add_option("--json", json_path, "write the JSON report to this path");
  };
  auto* quantities = app.add_subcommand("quantities", "saddle quantities g up to --level");
  quantities->add_option("--level", level, "number of quantities")->capture_default_str();
  add_file(quantities);
  auto* integral = app.add_subcommand("integral", "first integral coefficients up to --degree");
  integral->add_option("--degree", degree, "truncation degree in x, y")->capture_default_str();
  add_file(integral);
  auto* reversible = app.add_subcommand("reversible", "test a numeric family for time-reversibility");
  add_file(reversible);
  auto* sibirsky = app.add_subcommand("sibirsky", "Sibirsky binomials up to --level");
  sibirsky->add_option("--level", level, "monoid level bound")->capture_default_str();
  add_file(sibirsky);
  auto* implicit = app.add_subcommand("implicitize", "eliminate the scaling parametrization");
  implicit->add_option("--order", order, "order on the parameters: lex, deglex or degrevlex")->capture_default_str();
  implicit->add_option("--param-order", param_order, "parameter variable order: canonical or name")
      ->capture_default_str();
  implicit->add_option("--check-against", check_against, "compare with: sibirsky");
  implicit->add_option("--level", level, "Sibirsky level for --check-against")->capture_default_str();
  add_file(implicit);
  auto* membership = app.add_subcommand("membership", "membership in the Sibirsky ideal of --level");
  membership->add_option("--level", level, "monoid level bound")->capture_default_str();
  auto* poly_opt = membership->add_option("--poly", expression, "polynomial over the family's parameters");
  auto* quantity_opt = membership->add_option("--quantity", quantity, "test the k-th saddle quantity instead");
  poly_opt->excludes(quantity_opt);
  add_file(membership);
  auto* groebner = app.add_subcommand("groebner", "reduced Groebner basis of a polynomial file");
  std::string groebner_order = "degrevlex";
  groebner->add_option("--order", groebner_order, "lex, deglex or degrevlex")->capture_default_str();
  add_file(groebner);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    std::string text = read_file(file);
    RunReport r;
    if (*quantities) {
      r = cmd_quantities(text, level);
    } else if (*integral) {
      r = cmd_integral(text, degree);
    } else if (*reversible) {
      r = cmd_reversible(text);
    } else if (*sibirsky) {
      r = cmd_sibirsky(text, level);
    } else if (*implicit) {
      ImplicitizeCommandOptions opts;
      opts.inner = order_kind(order);
      if (param_order == "name")
        opts.parameter_order = ParameterOrder::ByName;
      else if (param_order != "canonical")
        throw InputError("--param-order must be canonical or name");
      if (!check_against.empty()) {
        if (check_against != "sibirsky") throw InputError("--check-against supports only 'sibirsky'");
        opts.check_sibirsky_level = level;
      }
      r = cmd_implicitize(text, opts);
    } else if (*membership) {
      if (*quantity_opt)
        r = cmd_quantity_membership(text, quantity, level);
      else if (*poly_opt)
        r = cmd_membership(text, expression, level);
      else
        throw InputError("membership needs --poly or --quantity");
    } else {
      r = cmd_groebner(text, groebner_order);
    }
    out << r.text;
    if (!json_path.empty()) {
      std::ofstream js(json_path, std::ios::binary);
      if (!js) throw InputError("cannot write '" + json_path + "'");
      js << r.json << '\n';
    }
    return r.exit_code;
  } catch (const SystemFileError& e) {
    err << "error: " << file << ": " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace pqs
