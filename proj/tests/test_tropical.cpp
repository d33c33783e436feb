#include <doctest.h>

#include "support/gen.hpp"
#include "tropdiff/errors.hpp"
#include "tropdiff/parser.hpp"
#include "tropdiff/tropical.hpp"

using namespace tropdiff;

namespace {

DiffPolynomial P(const std::string& text, std::uint32_t trunc = 16) {
    return parse_poly(text, trunc);
}

} // namespace

TEST_CASE("tropicalisation") {
    CHECK(tropicalize(P("t*x(1,2)^3*x(2,3) + (1+t^2)*x(1,3)^2")).to_string() == "min{1+3x12+x23, 2x13}");
    CHECK(tropicalize(P("x(1,0)")).to_string() == "x10");
    CHECK(tropicalize(P("t^3")).to_string() == "3");

    SUBCASE("flagged coefficients refuse tropicalisation") {
        DiffPolynomial p(1);
        p.add_term(DiffMonomial::variable(1, 0),
                   TruncatedSeries::from_coefficients({Rational(0), Rational(0)}, false));
        CHECK_THROWS_AS(tropicalize(p), Error);
        try {
            tropicalize(p);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::UncertifiedValuation);
        }
    }
}

TEST_CASE("tropical evaluation") {
    const TropDiffPolynomial ex34 = tropicalize(P("t*x(1,1) + t^2*x(1,3) + t^3"));
    const std::vector<NatSet> s23 = {NatSet::finite({2, 3})};
    CHECK(trop_eval(ex34, s23) == TropValue(2));

    const TropDiffPolynomial ex33 = tropicalize(P("t*x(1,4) + t^2*x(1,5)"));
    const std::vector<NatSet> s123 = {NatSet::finite({1, 2, 3})};
    CHECK(trop_eval(ex33, s123).is_infinite());

    const TropDiffPolynomial constant = tropicalize(P("t"));
    CHECK(trop_eval(constant, s123) == TropValue(1));
}

TEST_CASE("tropical solutions") {
    const TropDiffPolynomial phi = tropicalize(P("x(1,2) + t^2*x(1,0) + t"));
    const std::vector<NatSet> s3 = {NatSet::finite({3})};
    const SolutionWitness yes = is_tropical_solution(phi, s3);
    CHECK(yes.is_solution);
    CHECK(yes.argmin.size() == 2);

    const std::vector<NatSet> s2 = {NatSet::finite({2})};
    const SolutionWitness no = is_tropical_solution(phi, s2);
    CHECK_FALSE(no.is_solution);
    CHECK(no.argmin.size() == 1);

    const TropDiffPolynomial x10 = tropicalize(P("x(1,0)"));
    const std::vector<NatSet> empty = {NatSet()};
    const SolutionWitness inf = is_tropical_solution(x10, empty);
    CHECK(inf.is_solution);
    CHECK(inf.infinite_value);
}

TEST_CASE("supports of tuples") {
    const std::vector<TruncatedSeries> phi = {
        parse_series("1 + t", 8, true), parse_series("t^3", 8, true), parse_series("t + t^2", 8, true)};
    const SupportTuple st = trop_supp(phi);
    CHECK(st.supports[0] == NatSet::finite({0, 1}));
    CHECK(st.supports[1] == NatSet::finite({3}));
    CHECK(st.supports[2] == NatSet::finite({1, 2}));
    CHECK(st.windows == std::vector<std::uint32_t>{8, 8, 8});

    const std::vector<TruncatedSeries> zeros = {TruncatedSeries::zero(4), TruncatedSeries::zero(4)};
    const SupportTuple zs = trop_supp(zeros);
    CHECK(zs.supports[0].empty());
    CHECK(zs.supports[1].empty());
}

TEST_CASE("tropical semiring laws") {
    tdtest::Rng rng(404001);
    auto random_value = [&]() {
        return tdtest::pick(rng, 0, 5) == 0 ? TropValue::infinity() : TropValue(tdtest::pick(rng, 0, 20));
    };
    for (int i = 0; i < 500; ++i) {
        const TropValue a = random_value(), b = random_value(), c = random_value();
        CHECK(min(a, b) == min(b, a));
        CHECK(a + b == b + a);
        CHECK(min(min(a, b), c) == min(a, min(b, c)));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + min(b, c) == min(a + b, a + c));
        CHECK(min(a, TropValue::infinity()) == a);
        CHECK(a + TropValue(0) == a);
        CHECK(a + TropValue::infinity() == TropValue::infinity());
    }
}

TEST_CASE("valuation of evaluation vs tropical evaluation") {
    tdtest::Rng rng(404002);
    int checked_eq = 0;
    for (int i = 0; i < 400; ++i) {
        const std::uint32_t w = 16;
        const DiffPolynomial p = tdtest::random_dp(rng, 2, 2, 3, w);
        std::vector<TruncatedSeries> phi = {tdtest::random_series(rng, w, true), tdtest::random_series(rng, w, true)};
        const SupportTuple st = trop_supp(phi);
        const TropDiffPolynomial tp = tropicalize(p);
        const TropValue tv = trop_eval(tp, st.supports);
        const SolutionWitness witness = is_tropical_solution(tp, st.supports);
        const Valuation nu = p.evaluate(phi).valuation();
        if (!nu.truncation_limited) {
            CHECK(nu.value >= tv);
        } else if (!tv.is_infinite()) {
            // the evaluation escaped its window: without a tie that would
            // require a nonzero coefficient at t^tv inside the window
            CHECK((witness.is_solution || tv.finite_value() >= 8));
        }
        if (!witness.is_solution && !tv.is_infinite() && tv.finite_value() < 8) {
            // unique minimizer: no cancellation, the valuation is exact
            REQUIRE_FALSE(nu.truncation_limited);
            CHECK(nu.value == tv);
            ++checked_eq;
        }
    }
    CHECK(checked_eq > 50);
}
