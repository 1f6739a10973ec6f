#include <random>

#include "doctest.h"
#include "pqsaddle/system_file.hpp"
#include "support.hpp"

using namespace pqs;
using namespace pqs::testing;

TEST_CASE("example family layout") {
  auto fam = example5();
  CHECK(fam.ell() == 5);
  CHECK(fam.parameter_ring()->names() ==
        std::vector<std::string>{"a20", "a01", "a40", "a21", "a02", "b40", "b21", "b02", "b20", "b01"});
  CHECK(fam.a_name(0) == "a20");
  CHECK(fam.b_name(0) == "b01");
  CHECK(fam.a_name(4) == "a02");
  CHECK(fam.b_name(4) == "b40");
  CHECK(fam.a_subscript(3) == Bidegree{2, 1});
  CHECK(fam.b_subscript(3) == Bidegree{2, 1});
  CHECK(fam.b_subscript(1) == Bidegree{2, 0});
  CHECK(fam.is_symbolic());
  CHECK_FALSE(fam.is_numeric());
  for (std::size_t i = 0; i < 10; ++i) CHECK(fam.term_of_position(i) == fam.term_of_position(9 - i));
}

TEST_CASE("canonical ordering is independent of input order") {
  auto shuffled = SystemFamily::create(1, 2, uv_terms({{0, 2}, {1, 1}, {0, 1}, {2, 0}, {1, 0}}));
  CHECK(shuffled == example5());
  auto fam = SystemFamily::create(2, 3, uv_terms({{0, 3}, {3, 0}, {1, 0}, {2, 1}}));
  CHECK(fam.terms()[0].index == TermIndex{1, 0});
  CHECK(fam.terms()[1].index == TermIndex{3, 0});
  CHECK(fam.terms()[2].index == TermIndex{2, 1});
  CHECK(fam.terms()[3].index == TermIndex{0, 3});
}

TEST_CASE("family validation") {
  CHECK_NOTHROW(SystemFamily::create(1, 1, uv_terms({{1, 0}, {0, 1}})));
  CHECK_THROWS_AS(SystemFamily::create(2, 4, uv_terms({{1, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(SystemFamily::create(0, 1, uv_terms({{1, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(SystemFamily::create(1, 2, uv_terms({{1, 0}, {1, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(SystemFamily::create(1, 2, uv_terms({{0, 0}})), std::invalid_argument);
}

TEST_CASE("parameter names") {
  CHECK(parameter_name('a', {2, 0}) == "a20");
  CHECK(parameter_name('b', {12, 3}) == "b_12_3");
  CHECK(parameter_name('a', {0, 10}) == "a_0_10");
  auto fam = SystemFamily::create(2, 3, uv_terms({{4, 1}}));
  CHECK(fam.a_name(0) == "a_12_2");
  CHECK(fam.b_name(0) == "b38");
  CHECK(SystemFamily::create(2, 5, uv_terms({{1, 2}})).b_name(0) == "b_10_2");
}

TEST_CASE("numeric values") {
  auto fam = example5().with_values({{3, 6}, {1, 2}, {7, 14}, {5, 10}, {Rational(1, 2), 1}});
  CHECK(fam.is_numeric());
  CHECK(fam.a_value(4).constant_value() == Rational(1, 2));
  CHECK(fam.b_value(4).constant_value() == Rational(1));
  CHECK(fam.symbolic() == example5());
  CHECK(example5().a_value(0) == P(example5(), "a20"));
  CHECK_THROWS(example5().with_values({{1, 1}}));
}

TEST_CASE("L map") {
  auto fam = example5();
  CHECK(L_map(fam, nu(fam, "a20^2*b02")) == Bidegree{4, 2});
  CHECK(L_map(fam, Monomial(10)) == Bidegree{0, 0});
  CHECK(L_map(fam, nu(fam, "a01")) == Bidegree{0, 1});
  CHECK(L_map(fam, nu(fam, "b20")) == Bidegree{2, 0});
  CHECK(L_map(fam, nu(fam, "a21")) == Bidegree{2, 1});
  CHECK(L_map(fam, nu(fam, "a01*a20")) == Bidegree{2, 1});
  CHECK_THROWS(L_map(fam, Monomial(3)));
  CHECK(resonant_level(fam, nu(fam, "b21")) == 1);
  CHECK(resonant_level(fam, nu(fam, "a01*a20^2*b01")) == 2);
  CHECK_FALSE(resonant_level(fam, nu(fam, "a01")).has_value());
}

TEST_CASE("hat and kappa") {
  auto fam = example5();
  CHECK(hat(nu(fam, "a20")) == nu(fam, "b01"));
  CHECK(hat(nu(fam, "a01^2*b40")) == nu(fam, "b20^2*a02"));
  auto palindrome = nu(fam, "a20*b01");
  CHECK(hat(palindrome) == palindrome);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> e(0, 3);
  for (int i = 0; i < 200; ++i) {
    Monomial m(10);
    for (std::size_t j = 0; j < 10; ++j) m.set(j, static_cast<Monomial::Exponent>(e(rng)));
    REQUIRE(hat(hat(m)) == m);
    auto L = L_map(fam, m), Lh = L_map(fam, hat(m));
    // conjugation swaps the roles of the two subscripts: (q t1, p t2) -> (q t2, p t1)
    REQUIRE(Lh == Bidegree{fam.q() * (L.second / fam.p()), fam.p() * (L.first / fam.q())});
    REQUIRE(kappa(fam, m) * kappa(fam, hat(m)) == Rational(1));
  }
  CHECK(kappa(fam, nu(fam, "a01")) == Rational(2));
  CHECK(kappa(fam, nu(fam, "b20")) == Rational(1, 2));
  CHECK(kappa(fam, nu(fam, "a21*b21")) == Rational(1));
  CHECK(kappa(fam, nu(fam, "a01^3*a40^2")) == Rational(32));
  auto fam23 = family_2_3();
  CHECK(kappa(fam23, nu(fam23, fam23.a_name(0) + "^2")) == Rational(9, 4));
}

TEST_CASE("scaling acts on monomials by alpha^(L2 - L1)") {
  std::mt19937_64 rng(2);
  auto shape = example5();
  auto fam = random_instance(shape, rng);
  Rational alpha(3, 2);
  auto scaled = scale_parameters(fam, alpha);
  for (const auto& e : enumerate_monoid(shape, 2)) {
    auto monomial = Polynomial::monomial(shape.parameter_ring(), e.nu);
    auto L = L_map(shape, e.nu);
    CHECK(evaluate(monomial, scaled) == alpha.pow(L.second - L.first) * evaluate(monomial, fam));
  }
  CHECK_THROWS(scale_parameters(fam, Rational(0)));
  CHECK_THROWS(scale_parameters(shape, alpha));
}

TEST_CASE("homogeneity check") {
  auto fam = example5();
  CHECK(check_jk_homogeneous(fam, P(fam, "2*a21 - b21"), {2, 1}));
  CHECK(check_jk_homogeneous(fam, P(fam, "4*a01*a20 - b01*b20"), {2, 1}));
  CHECK_FALSE(check_jk_homogeneous(fam, P(fam, "a21 - a01"), {2, 1}));
  CHECK(check_jk_homogeneous(fam, P(fam, "0"), {2, 1}));
}

TEST_CASE("system file parsing") {
  auto fam = parse_system_file("resonance 1 2\nterm 1 0\nterm 0 1\nterm 2 0\nterm 1 1\nterm 0 2");
  CHECK(fam == example5());
  auto single = parse_system_file("resonance 1 2\nterm 0 1 a=1 b=2");
  CHECK(single.is_numeric());
  CHECK(is_time_reversible(single).reversible);
  auto commented = parse_system_file("# header\n\nresonance 2 3   # 2:-3\n  term 1 0 a=-3/4\n");
  CHECK(commented.p() == 2);
  CHECK(commented.terms()[0].a == Rational(-3, 4));
  CHECK_FALSE(commented.terms()[0].b.has_value());
}

TEST_CASE("system file errors carry line numbers") {
  auto line_of = [](std::string_view text) {
    try {
      parse_system_file(text);
    } catch (const SystemFileError& e) {
      return e.line();
    }
    return std::size_t(999);
  };
  CHECK(line_of("resonance 2 4\nterm 1 0") == 1);
  CHECK(line_of("resonance 1 2\nterm 1 0\nterm 1 0") == 3);
  CHECK(line_of("resonance 1 2\nterm 1") == 2);
  CHECK(line_of("resonance 1 2\n\nterm 1 0 c=2") == 3);
  CHECK(line_of("resonance 1 2\nterm 1 0 a=1/0") == 2);
  CHECK(line_of("term 1 0") == 1);
  CHECK(line_of("resonance 1 2\nterm 0 0") == 2);
  CHECK(line_of("resonance 1 2\nterm -1 2") == 2);
  CHECK(line_of("resonance 1 2\nbogus") == 2);
  CHECK(line_of("# nothing") == 0);
}

TEST_CASE("system file round trip") {
  std::mt19937_64 rng(4);
  for (const auto& shape : {example5(), family_2_3(), quadratic_uv(1, 3)}) {
    CHECK(parse_system_file(emit_system_file(shape)) == shape);
    auto numeric = random_instance(shape, rng);
    CHECK(parse_system_file(emit_system_file(numeric)) == numeric);
  }
  auto partial = parse_system_file("resonance 1 3\nterm 2 0 b=5\nterm 0 1 a=-1/3");
  CHECK(parse_system_file(emit_system_file(partial)) == partial);
}
