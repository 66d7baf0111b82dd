#include "catch_amalgamated.hpp"
#include "support.hpp"

using namespace qsd;
using namespace qsd::test;

TEST_CASE("parse_examples") {
  const DomainAlgebra A(2);
  CHECK(parse_element("z[2,1]*zs[1,1]", A) == Element({z(2, 1), zs(1, 1)}));
  const DElement d = parse_delement("z[2,2]*f0*zs[2,2]", A);
  CHECK(d == DElement({z(2, 2)}, {z(2, 2)}));
  CHECK(parse_element("z[1,1]*z[2,1]", A) == Element({z(2, 1), z(1, 1)}, Q(2)));
  CHECK(parse_element("z[1,1] z[2,1]", A) == parse_element("z[1,1]*z[2,1]", A));
  CHECK(parse_element("(1-q^4)^3", A) == Element((1 - Q(4)).pow(3)));
  CHECK(parse_element("q^(1/2) * z[1,1] - s*z[1,1]", A).is_zero());
  CHECK(parse_uq("E[2]F[1] + q*Kinv[2]", A) ==
        UqExpr(UqLetter::E(2)) * UqLetter::F(1) + Q(1) * UqExpr(UqLetter::Kinv(2)));
  CHECK(parse_delement("f0", A) == DElement::f0());
}

TEST_CASE("parse_errors") {
  const DomainAlgebra A(2);
  CHECK_THROWS_AS(parse_element("z[1,2]", A), IndexError);
  CHECK_THROWS_AS(parse_element("z[3,1]", A), IndexError);
  CHECK_THROWS_AS(parse_uq("E[3]", A), IndexError);
  CHECK_THROWS_AS(parse_element("z[2,2]*f0", A), TypeError);
  CHECK_THROWS_AS(parse_element("E[1]", A), TypeError);
  CHECK_THROWS_AS(parse_expression("E[1] + z[1,1]", A), TypeError);
  CHECK_THROWS_AS(parse_expression("f0 + z[1,1]", A), TypeError);
  CHECK_THROWS_AS(parse_delement("z[1,1]", A), TypeError);
  CHECK_THROWS_AS(parse_expression("", A), ParseError);
  CHECK_THROWS_AS(parse_expression("z[1,1", A), ParseError);
  CHECK_THROWS_AS(parse_expression("w[1,1]", A), ParseError);
  try {
    parse_expression("z[1,1] + + )", A);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 9);
  }
  try {
    parse_expression("z[2,1]*zs[1,2]", A);
    FAIL("expected IndexError");
  } catch (const IndexError& e) {
    CHECK(std::string(e.what()).find("[1,2]") != std::string::npos);
  }
}

TEST_CASE("element_round_trip") {
  for (int n = 2; n <= 3; ++n) {
    const DomainAlgebra A(n);
    Rng rng(20240601);
    for (int t = 0; t < 100; ++t) {
      const Element e = A.normal_form(random_element(A, rng, 3, 4));
      INFO(e.str());
      CHECK(parse_element(e.str(), A) == e);
    }
  }
}

TEST_CASE("rendered_forms_parse_back") {
  const DomainAlgebra A(2);
  for (const char* text : {"-q^-1*(1-q^4) * z[2,1]z[2,1] + z[2,2]z[1,1]",
                           "(1-q^2) + q^2 * z[2,1]zs[2,1] + -(1-q^2) * z[2,2]zs[2,2]",
                           "q^(-3/2)*(1+q^2) * z[2,1]"}) {
    const Element e = parse_element(text, A);
    CHECK(e.str() == text);
  }
}

TEST_CASE("delement_and_uq_round_trip") {
  const DomainAlgebra A(2);
  Rng rng(99);
  for (int t = 0; t < 50; ++t) {
    DElement x = random_delement(A, rng, 2);
    x.add(Word{z(2, 1)}, Word{z(1, 1)}, -Q(1) / (1 - Q(4)));
    CHECK(parse_delement(x.str(), A) == x);
  }
  const UqExpr u = Q(-4) * (UqExpr(UqLetter::F(2)) * UqLetter::Kinv(1)) - UqExpr(UqLetter::E(1));
  CHECK(parse_uq(u.str(), A) == u);
}
