#include <doctest.h>

#include "support/gen.hpp"
#include "tropdiff/errors.hpp"
#include "tropdiff/parser.hpp"

using namespace tropdiff;

TEST_CASE("pinned polynomials parse") {
    const DiffPolynomial p = parse_poly("t*x(1,1) + t^2*x(1,3) + t^3", 32);
    CHECK(p.terms().size() == 3);
    CHECK(p.n_vars() == 1);

    const DiffPolynomial f = parse_poly("x(1,0)+x(1,1)+x(1,2)", 32);
    CHECK(f.terms().size() == 3);
    CHECK(f.order() == 2);

    const DiffPolynomial mixed = parse_poly("(1 + t^2)*x(1,3)^2 - 2/3*x(2,0)*x(1,0)", 8);
    CHECK(mixed.n_vars() == 2);
    CHECK(mixed.terms().size() == 2);
}

TEST_CASE("parser errors") {
    CHECK_THROWS_AS(parse_poly("x(0,1)", 8), Error);
    try {
        parse_poly("x(0,1)", 8);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::VariableIndex);
    }
    for (const char* bad : {"", "x(1,)", "1 +", "t^", "(1 + t", "x(1,0))", "1//2", "x[1,0]"}) {
        CHECK_THROWS_AS(parse_poly(bad, 8), Error);
        try {
            parse_poly(bad, 8);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Syntax);
        }
    }
    // error positions name the offending column
    try {
        parse_poly("t + $", 8);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("column 5") != std::string::npos);
    }
}

TEST_CASE("grammar corners") {
    CHECK(parse_poly("-1*x(1,1)", 8).terms().size() == 1);
    CHECK(parse_poly("2-3", 8).terms().begin()->second.coeff(0) == Rational(-1));
    CHECK(parse_poly("2*-3", 8).terms().begin()->second.coeff(0) == Rational(-6));
    CHECK(parse_poly("x(1,0)^0", 8)
              .compare(DiffPolynomial::from_series(TruncatedSeries::constant(Rational(1), 8), 1)) !=
          SeriesEq::Unequal);
    CHECK(parse_poly("((t))", 8).compare(parse_poly("t", 8)) == SeriesEq::Equal);
}

TEST_CASE("series parsing") {
    const TruncatedSeries s = parse_series("1 - 1/2*t^2", 8, true);
    CHECK(s.coeff(0) == Rational(1));
    CHECK(s.coeff(2) == make_rational(-1, 2));
    CHECK(s.exact());
    CHECK_FALSE(parse_series("1 + t", 8, false).exact());
    CHECK_THROWS_AS(parse_series("x(1,0)", 8, true), Error);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/6") == make_rational(1, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("a"), Error);
}

TEST_CASE("natset parsing") {
    CHECK(parse_natset("{2,3}").set == NatSet::finite({2, 3}));
    CHECK(parse_natset("{2,3}").was_canonical);
    CHECK(parse_natset("{0,1,2,3,7,8}").set == NatSet::finite({0, 1, 2, 3, 7, 8}));
    CHECK(parse_natset("{}").set.empty());

    const ParsedNatSet periodic = parse_natset("{}+per(0;3;0,2)");
    CHECK(periodic.set == NatSet::make({}, 0, 3, {0, 2}));
    CHECK(periodic.was_canonical);

    const ParsedNatSet reducible = parse_natset("{}+per(0;6;0,2,4)");
    CHECK(reducible.set == NatSet::make({}, 0, 2, {0}));
    CHECK_FALSE(reducible.was_canonical);

    CHECK_FALSE(parse_natset("{3,2}").was_canonical);
    CHECK_THROWS_AS(parse_natset("{1,2"), Error);
    CHECK_THROWS_AS(parse_natset("{}+per(0;0;1)"), Error);
}

TEST_CASE("AST round-trip") {
    for (const char* text : {"t*x(1,1) + t^2*x(1,3) + t^3", "(1+t)*x(1,0)^2 - 3/2", "1 - t - x(2,4)^3",
                             "((x(1,0)))", "-5/7*t^2*x(1,1)"}) {
        const Ast a = parse_poly_ast(text);
        const Ast b = parse_poly_ast(ast_to_string(a));
        CHECK(ast_equal(a, b));
    }
}

TEST_CASE("semantic round-trip on random polynomials") {
    tdtest::Rng rng(808001);
    for (int i = 0; i < 1000; ++i) {
        const std::uint32_t n = tdtest::pick(rng, 1, 3);
        const DiffPolynomial p = tdtest::random_dp(rng, n, 4, 4, 12);
        const DiffPolynomial back = parse_poly(p.to_string(), 12).with_n_vars(p.n_vars());
        CHECK(p.compare(back) == SeriesEq::Equal);
    }
}
