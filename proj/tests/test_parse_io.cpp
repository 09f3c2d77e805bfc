#include <catch2/catch_amalgamated.hpp>

#include "waring_eig/parse.hpp"
#include "waring_eig/serialize.hpp"

using namespace waring_eig;

TEST_CASE("printer round trip") {
    BForm f(5, {GaussRat(Rat(3, 4)), GaussRat(Rat(-1)), GaussRat(0), GaussRat(1, -2),
                GaussRat(Rat(0), Rat(1)), GaussRat(Rat(7))});
    REQUIRE(parse_bform(f.str()) == f);
}

TEST_CASE("variable aliases") {
    REQUIRE(parse_bform("x^3+y^3+(x+y)^3") == parse_bform("x0^3 + x1^3 + (x0+x1)^3"));
    REQUIRE(parse_bform("x0^2*x1") == BForm::monomial(3, 1));
}

TEST_CASE("gaussian literals") {
    REQUIRE(parse_bform("2i*x0 - 3/4i*x1").coeff(0) == GaussRat(Rat(0), Rat(2)));
    REQUIRE(parse_bform("i*x0 + x1").coeff(0) == GaussRat::i());
}

TEST_CASE("n-ary and linear forms") {
    NForm h = parse_form("x0*x1*x2 - x2^3");
    REQUIRE(h.nvars() == 3);
    REQUIRE(h.degree() == 3);
    LinForm l = parse_linform("x0 + 2*x1");
    REQUIRE(l.coords[1] == GaussRat(2));
}

TEST_CASE("parse errors carry positions") {
    REQUIRE_THROWS_AS(parse_form("x0^2 + x1"), ParseError);  // not homogeneous
    REQUIRE_THROWS_AS(parse_form("x0^"), ParseError);
    try {
        parse_form("x0 + @");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(e.pos == 5);
    }
}

TEST_CASE("json round trips") {
    NForm h = parse_form("x0*x1*x2 - x2^3");
    REQUIRE(form_from_json(form_to_json(h)) == h);
    BForm f(3, {GaussRat(1), GaussRat(Rat(-2, 7)), GaussRat(0), GaussRat(0, 1)});
    REQUIRE(bform_from_json(form_to_json(f)) == f);
    ProjPoint p(GaussRat(Rat(2, 3)), GaussRat(1));
    REQUIRE(point_from_json(point_to_json(p)) == p);
}
