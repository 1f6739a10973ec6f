#include <algorithm>
#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace pqs;
using pqs::testing::random_polynomial;

namespace {

Ring xyz() { return VariableSet::make({"x", "y", "z"}); }

Polynomial px(std::string_view s) {
  static const Ring r = xyz();
  return parse_polynomial(s, r);
}

Monomial mono(std::initializer_list<Monomial::Exponent> e) { return Monomial(std::vector<Monomial::Exponent>(e)); }

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, -5).str() == "0");
  CHECK(Rational(0, -5).den() == 1);
  CHECK(Rational(-8, 4).str() == "-2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("1/"));
  CHECK_THROWS(Rational::parse("x"));
  CHECK_THROWS(Rational(0).inverse());
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(2, 3).pow(0) == Rational(1));
}

TEST_CASE("rational arithmetic stays canonical") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Rational a = testing::random_rational(rng, 50), b = testing::random_nonzero(rng, 50);
    for (const Rational& r : {a + b, a - b, a * b, a / b, -a, a.abs(), b.inverse(), b.pow(3), b.pow(-3)})
      REQUIRE(r.is_canonical());
    CHECK((a / b) * b == a);
    CHECK(a - a == Rational(0));
  }
}

TEST_CASE("rational exceeds machine words exactly") {
  Rational big = Rational(3, 2).pow(200);
  CHECK(big.is_canonical());
  CHECK(big * Rational(2, 3).pow(200) == Rational(1));
  CHECK(big.num().get_str().size() > 40);
}

TEST_CASE("polynomial ring axioms on random instances") {
  std::mt19937_64 rng(11);
  Ring r = xyz();
  Polynomial zero(r), one = Polynomial::constant(r, 1);
  for (int i = 0; i < 300; ++i) {
    auto a = random_polynomial(r, rng), b = random_polynomial(r, rng), c = random_polynomial(r, rng);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + zero == a);
    REQUIRE(a * one == a);
    REQUIRE((a - a).is_zero());
  }
}

TEST_CASE("polynomial basics") {
  Ring r = xyz();
  auto f = px("x^2*y + 3*x - 1/2");
  CHECK(f.size() == 3);
  CHECK(f.total_degree() == 3);
  CHECK(f.coefficient(mono({1, 0, 0})) == Rational(3));
  CHECK(f.coefficient(mono({0, 0, 1})).is_zero());
  CHECK(px("x - x").is_zero());
  CHECK(px("7/3").is_constant());
  CHECK(px("7/3").constant_value() == Rational(7, 3));
  CHECK_THROWS(f.constant_value());
  CHECK(f.derivative("x") == px("2*x*y + 3"));
  CHECK(f.derivative("z").is_zero());
  CHECK(px("x + 1").pow(3) == px("x^3 + 3*x^2 + 3*x + 1"));
  CHECK(px("x + y").pow(0) == Polynomial::constant(r, 1));
}

TEST_CASE("ring mismatch is rejected") {
  Ring a = VariableSet::make({"x", "y"}), b = VariableSet::make({"y", "x"});
  auto f = Polynomial::variable(a, "x"), g = Polynomial::variable(b, "x");
  CHECK_THROWS_AS(f + g, RingMismatch);
  CHECK_THROWS_AS(f * g, RingMismatch);
  CHECK(embed(f, b) == g);
  Ring same = VariableSet::make({"x", "y"});
  CHECK_NOTHROW(f + Polynomial::variable(same, "y"));
  CHECK_THROWS(Polynomial::variable(a, "w"));
  CHECK_THROWS(VariableSet::make({"x", "x"}));
}

TEST_CASE("substitute and embed") {
  Ring r = xyz();
  std::map<std::string, Binding> b{{"x", px("y + 1")}, {"z", Rational(2)}};
  CHECK(substitute(px("x^2*z - y"), b) == px("2*y^2 + 3*y + 2"));
  Ring small = VariableSet::make({"y", "x"});
  auto g = embed(parse_polynomial("x*y", small), r);
  CHECK(g == px("x*y"));
  CHECK_THROWS_AS(embed(px("z"), small), RingMismatch);
  CHECK(embed(px("x + y"), small) == parse_polynomial("y + x", small));
}

TEST_CASE("primitive normalization") {
  CHECK(primitive_normalize(px("-1/2*x + 3/4*y")) == px("2*x - 3*y"));
  CHECK(primitive_normalize(px("6*x^2 - 4")) == px("3*x^2 - 2"));
  CHECK(primitive_normalize(px("0")).is_zero());
  CHECK(primitive_normalize(px("-y^2 + x*z"), MonomialOrder::lex()) == px("x*z - y^2"));
  CHECK(primitive_normalize(px("-y^2 + x*z"), MonomialOrder::degrevlex()) == px("y^2 - x*z"));
}

TEST_CASE("monomial orders on fixed examples") {
  // x > y > z; x*z against y^2 separates degrevlex from the other two
  auto xz = mono({1, 0, 1}), yy = mono({0, 2, 0}), x = mono({1, 0, 0}), yyy = mono({0, 3, 0});
  CHECK(MonomialOrder::lex().compare(xz, yy) > 0);
  CHECK(MonomialOrder::deglex().compare(xz, yy) > 0);
  CHECK(MonomialOrder::degrevlex().compare(xz, yy) < 0);
  CHECK(MonomialOrder::lex().compare(x, yyy) > 0);
  CHECK(MonomialOrder::deglex().compare(x, yyy) < 0);
  CHECK(MonomialOrder::degrevlex().compare(x, yyy) < 0);
  auto blk = MonomialOrder::block(1, MonomialOrder::Kind::Lex, MonomialOrder::Kind::DegRevLex);
  CHECK(blk.compare(x, yyy) > 0);
  CHECK(blk.compare(yy, xz) < 0);
  CHECK(blk.compare(mono({0, 1, 1}), mono({0, 2, 0})) < 0);
  CHECK(MonomialOrder::from_name("deglex").kind() == MonomialOrder::Kind::DegLex);
  CHECK_THROWS(MonomialOrder::from_name("grevlex2"));
}

TEST_CASE("monomial order properties on random triples") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(0, 3);
  auto random_mono = [&] {
    Monomial m(4);
    for (std::size_t i = 0; i < 4; ++i) m.set(i, static_cast<Monomial::Exponent>(e(rng)));
    return m;
  };
  std::vector<MonomialOrder> orders{MonomialOrder::lex(), MonomialOrder::deglex(), MonomialOrder::degrevlex(),
                                    MonomialOrder::block(2, MonomialOrder::Kind::Lex, MonomialOrder::Kind::DegRevLex),
                                    MonomialOrder::block(1, MonomialOrder::Kind::DegRevLex, MonomialOrder::Kind::Lex)};
  const Monomial one(4);
  for (const auto& ord : orders) {
    CAPTURE(ord.name());
    for (int i = 0; i < 500; ++i) {
      auto a = random_mono(), b = random_mono(), c = random_mono();
      auto ab = ord.compare(a, b);
      REQUIRE((ab == 0) == (a == b));
      REQUIRE(ord.compare(b, a) == (0 <=> ab));
      if (ab < 0) REQUIRE(ord.compare(a * c, b * c) < 0);
      if (ab < 0 && ord.compare(b, c) < 0) REQUIRE(ord.compare(a, c) < 0);
      REQUIRE(ord.compare(one, a * c) <= 0);
      if (!a.is_one()) REQUIRE(ord.compare(one, a) < 0);
    }
  }
}

TEST_CASE("leading terms and sorted terms") {
  auto f = px("x*z - y^2 + 3");
  CHECK(f.leading_term(MonomialOrder::lex()).monomial == mono({1, 0, 1}));
  CHECK(f.leading_term(MonomialOrder::degrevlex()).monomial == mono({0, 2, 0}));
  CHECK(f.leading_term(MonomialOrder::degrevlex()).coefficient == Rational(-1));
  auto ts = f.sorted_terms(MonomialOrder::deglex());
  REQUIRE(ts.size() == 3);
  CHECK(ts.back().monomial.is_one());
  CHECK_THROWS(px("0").leading_term(MonomialOrder::lex()));
}

TEST_CASE("parser accepts the grammar") {
  Ring r = VariableSet::make({"a01", "a20", "b01", "b20"});
  auto f = parse_polynomial("2*a01*a20 - b01*b20", r);
  CHECK(f.size() == 2);
  CHECK(parse_polynomial("(a01 + 1)^2", r) == parse_polynomial("a01^2 + 2*a01 + 1", r));
  CHECK(parse_polynomial("-(a01 - b01)", r) == parse_polynomial("b01 - a01", r));
  CHECK(parse_polynomial("3/4*a01 + 1/4*a01", r) == parse_polynomial("a01", r));
  CHECK(parse_polynomial("  a01*  a20 ", r) == parse_polynomial("a20*a01", r));
  CHECK(parse_polynomial("2^3", r) == Polynomial::constant(r, 8));
  CHECK(parse_polynomial("a01^0", r) == Polynomial::constant(r, 1));
  CHECK(parse_polynomial("-a01*-a20", r) == parse_polynomial("a01*a20", r));
}

TEST_CASE("parser rejects bad input with a position") {
  Ring r = VariableSet::make({"x", "y"});
  CHECK_THROWS_AS(parse_polynomial("x^-1", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("2 x", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x +", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(x + y", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x/y", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/0", r), ParseError);
  try {
    parse_polynomial("x + w", r);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
    CHECK(std::string(e.what()).find("w") != std::string::npos);
  }
}

TEST_CASE("printer is deterministic degrevlex descending") {
  Ring r = VariableSet::make({"a20", "a01", "b20", "b01"});
  CHECK(to_string(parse_polynomial("-b01*b20 + 2*a01*a20", r)) == "2*a20*a01 - b20*b01");
  CHECK(to_string(parse_polynomial("-1/2*a20", r)) == "-1/2*a20");
  CHECK(to_string(parse_polynomial("5/6*a01^3 - 1", r)) == "5/6*a01^3 - 1");
  CHECK(to_string(parse_polynomial("0", r)) == "0");
  CHECK(to_string(parse_polynomial("-1", r)) == "-1");
}

TEST_CASE("parse/print round trip on random polynomials") {
  std::mt19937_64 rng(5);
  Ring r = VariableSet::make({"x", "y", "a_12_3", "b20"});
  for (int i = 0; i < 1000; ++i) {
    auto f = random_polynomial(r, rng, 5, 3);
    auto text = to_string(f);
    auto g = parse_polynomial(text, r);
    REQUIRE(g == f);
    REQUIRE(to_string(g) == text);
  }
}
