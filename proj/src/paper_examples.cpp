#include <functional>
#include <sstream>

#include "tropdiff/analysis.hpp"
#include "tropdiff/commands.hpp"
#include "tropdiff/errors.hpp"
#include "tropdiff/initial.hpp"
#include "tropdiff/parser.hpp"
#include "tropdiff/solver.hpp"
#include "tropdiff/tropical.hpp"

namespace tropdiff::cmd {

namespace {

constexpr std::uint32_t kTrunc = 32;

struct Check {
    std::string id;
    std::string description;
    std::function<void(std::ostringstream&)> run; // throws or writes detail on failure via exceptions
};

DiffPolynomial poly(const std::string& text) {
    return parse_poly(text, kTrunc);
}

std::vector<NatSet> sets1(const NatSet& s) {
    return {s};
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

NatSet natset(const std::string& text) {
    return parse_natset(text).set;
}

std::vector<Check> make_checks() {
    std::vector<Check> checks;

    checks.push_back({"val-pinned", "pinned Val_S values", [](std::ostringstream& d) {
                          const NatSet s = NatSet::finite({0, 1, 2, 3, 7, 8});
                          d << "Val_S(4) = " << s.val_at(4).to_string() << ", Val_S(9) = " << s.val_at(9).to_string();
                          require(s.val_at(4) == TropValue(3), "Val_S(4) != 3");
                          require(s.val_at(9).is_infinite(), "Val_S(9) != inf");
                      }});

    checks.push_back({"support-tuple", "supports of (1+t, t^3, t+t^2)", [](std::ostringstream& d) {
                          const std::vector<TruncatedSeries> phi = {
                              parse_series("1 + t", kTrunc, true),
                              parse_series("t^3", kTrunc, true),
                              parse_series("t + t^2", kTrunc, true),
                          };
                          const SupportTuple st = trop_supp(phi);
                          d << natset_tuple_to_string(st.supports);
                          require(st.supports[0] == NatSet::finite({0, 1}), "supp(a+bt) != {0,1}");
                          require(st.supports[1] == NatSet::finite({3}), "supp(t^3) != {3}");
                          require(st.supports[2] == NatSet::finite({1, 2}), "supp(t+t^2) != {1,2}");
                      }});

    checks.push_back({"valuation-pinned", "valuations of t and 1+t^2", [](std::ostringstream& d) {
                          const TruncatedSeries a = parse_series("t", kTrunc, true);
                          const TruncatedSeries b = parse_series("1 + t^2", kTrunc, true);
                          d << "nu(t) = " << a.valuation().value.to_string()
                            << ", nu(1+t^2) = " << b.valuation().value.to_string();
                          require(a.valuation().value == TropValue(1), "nu(t) != 1");
                          require(b.valuation().value == TropValue(0), "nu(1+t^2) != 0");
                      }});

    checks.push_back({"trop-pinned", "pinned tropicalisation", [](std::ostringstream& d) {
                          const TropDiffPolynomial tp =
                              tropicalize(poly("t*x(1,2)^3*x(2,3) + (1+t^2)*x(1,3)^2"));
                          d << tp.to_string();
                          require(tp.to_string() == "min{1+3x12+x23, 2x13}",
                                  "expected min{1+3x12+x23, 2x13}, got " + tp.to_string());
                      }});

    checks.push_back({"solution-characterization", "solutions of x12 ⊕ (2⊙x10) ⊕ 1", [](std::ostringstream& d) {
                          const TropDiffPolynomial tp = tropicalize(poly("x(1,2) + t^2*x(1,0) + t"));
                          const std::vector<NatSet> s3 = sets1(NatSet::finite({3}));
                          const std::vector<NatSet> s2 = sets1(NatSet::finite({2}));
                          require(is_tropical_solution(tp, s3).is_solution, "S={3} should solve");
                          require(!is_tropical_solution(tp, s2).is_solution, "S={2} should not solve");
                          const CandidateUniverse u{1, 4, 1};
                          const SolutionReport rep = solve_system({tp}, u);
                          std::size_t candidates = 0;
                          for (const auto& rec : rep.records) {
                              const bool expected = !rec.tuple[0].contains(2) && rec.tuple[0].contains(3);
                              require(rec.is_solution == expected,
                                      "characterization 2∉S, 3∈S fails at " + rec.tuple[0].to_string());
                              ++candidates;
                          }
                          d << rep.solutions.size() << " solutions among " << candidates
                            << " candidates, all with 2∉S and 3∈S";
                      }});

    checks.push_back({"derivative-pinned", "derivative of t·x11 + t^2·x13 + t^3", [](std::ostringstream& d) {
                          const DiffPolynomial dp = poly("t*x(1,1) + t^2*x(1,3) + t^3").derive(1);
                          const DiffPolynomial expected =
                              poly("t*x(1,2) + x(1,1) + t^2*x(1,4) + 2*t*x(1,3) + 3*t^2");
                          d << dp.to_string();
                          require(dp.compare(expected) != SeriesEq::Unequal, "derivative mismatch");
                      }});

    checks.push_back({"initial-pinned", "In_S and in_S at S = {2,3}", [](std::ostringstream& d) {
                          const DiffPolynomial p = poly("t*x(1,1) + t^2*x(1,3) + t^3");
                          const std::vector<NatSet> s = sets1(natset("{2,3}"));
                          const TropValue tv = trop_eval(tropicalize(p), s);
                          require(tv == TropValue(2), "trop(P)(S) != 2");
                          const ResiduePolynomial in = initial_part(p, s);
                          d << "In = " << in.to_string();
                          ResiduePolynomial expected(1);
                          expected.add_term(DiffMonomial::variable(1, 1), Rational(1));
                          expected.add_term(DiffMonomial::variable(1, 3), Rational(1));
                          require(in == expected, "In_S(P) != x11 + x13");
                          const DiffPolynomial hg = initial_part_hu_gao(p, s);
                          d << ", in = " << hg.to_string();
                          require(hg.compare(poly("t*x(1,1) + t^2*x(1,3)")) != SeriesEq::Unequal,
                                  "in_S(P) != t*x11 + t^2*x13");
                      }});

    checks.push_back({"initial-of-derivative", "In_S of the derivative differs from d(In_S)", [](std::ostringstream& d) {
                          // dP = x11 + t*x12 + 2t*x13 + t^2*x14 + 3t^2; at S = {2,3}
                          // the terms x11 (0 + Val(1) = 1), t*x12 (1 + Val(2) = 1)
                          // and 2t*x13 (1 + Val(3) = 1) all attain the minimum.
                          const DiffPolynomial p = poly("t*x(1,1) + t^2*x(1,3) + t^3");
                          const std::vector<NatSet> s = sets1(natset("{2,3}"));
                          const ResiduePolynomial in_dp = initial_part(p.derive(1), s);
                          ResiduePolynomial expected(1);
                          expected.add_term(DiffMonomial::variable(1, 1), Rational(1));
                          expected.add_term(DiffMonomial::variable(1, 2), Rational(1));
                          expected.add_term(DiffMonomial::variable(1, 3), Rational(2));
                          d << "In_S(dP) = " << in_dp.to_string();
                          require(in_dp == expected, "In_S(dP) != x11 + x12 + 2*x13");
                          ResiduePolynomial naive(1); // d applied to In_S(P) inside K{x}
                          naive.add_term(DiffMonomial::variable(1, 2), Rational(1));
                          naive.add_term(DiffMonomial::variable(1, 4), Rational(1));
                          require(!(in_dp == naive), "In_S(dP) must differ from d(In_S(P)) = x12 + x14");
                      }});

    checks.push_back({"initial-vanishing", "vanishing initial part at S = {1,2,3}", [](std::ostringstream& d) {
                          const DiffPolynomial p = poly("t*x(1,4) + t^2*x(1,5)");
                          const std::vector<NatSet> s = sets1(natset("{1,2,3}"));
                          require(trop_eval(tropicalize(p), s).is_infinite(), "trop(P)(S) != inf");
                          require(initial_part(p, s).is_zero(), "In_S(P) != 0");
                          require(q_sub(p, s).is_zero(), "Q_S != 0");
                          d << "trop(P)(S) = inf, In_S(P) = 0";
                      }});

    checks.push_back({"scale-weights", "variable scaling intermediates", [](std::ostringstream& d) {
                          const DiffPolynomial p = poly("t*x(1,1) + t^2*x(1,3) + t^3");
                          const NatSet s = natset("{2,3}");
                          const DiffPolynomial scaled = p.scale_vars(
                              [&](std::uint32_t, std::uint32_t j) { return std::optional(s.val_at(j)); });
                          d << scaled.to_string();
                          require(scaled.compare(poly("t^2*x(1,1) + t^2*x(1,3) + t^3")) != SeriesEq::Unequal,
                                  "scaling by Val_{2,3} mismatch");
                          const DiffPolynomial q = poly("t*x(1,4)");
                          const DiffPolynomial annihilated = q.scale_vars(
                              [](std::uint32_t, std::uint32_t) { return std::optional(TropValue::infinity()); });
                          require(annihilated.is_zero(), "infinite weight must annihilate the term");
                      }});

    checks.push_back({"monomial-predicate", "x11 + x13 is not a monomial", [](std::ostringstream& d) {
                          ResiduePolynomial g(1);
                          g.add_term(DiffMonomial::variable(1, 1), Rational(1));
                          g.add_term(DiffMonomial::variable(1, 3), Rational(1));
                          require(!rp_is_monomial(g), "two-term polynomial flagged as monomial");
                          d << "not a monomial";
                      }});

    checks.push_back({"basis-five-sets", "the tropical differential basis of x + x' + x''", [](std::ostringstream& d) {
                          const std::vector<DiffPolynomial> fg = {poly("x(1,0)+x(1,1)+x(1,2)"),
                                                                  poly("x(1,0)-x(1,3)")};
                          const CandidateUniverse u{1, 3, 3};
                          const SolutionReport rep = solve_diff_ideal(fg, 9, u);
                          const std::vector<std::vector<NatSet>> five = {
                              {natset("{}")},
                              {natset("{}+per(0;1;0)")},
                              {natset("{}+per(0;3;1,2)")}, // Z>=0 \ {3k}
                              {natset("{}+per(0;3;0,2)")}, // Z>=0 \ {3k+1}
                              {natset("{}+per(0;3;0,1)")}, // Z>=0 \ {3k+2}
                          };
                          SolutionReport ref = SolutionReport::from_sets(u, five, 9, "");
                          require(rep.solutions == ref.solutions, "the two generators must cut exactly the five sets");
                          const BasisCheckResult check = check_basis(fg, ref, 9, u);
                          require(check.is_basis, "{f, g} must pass the basis check");
                          d << rep.solutions.size() << " solutions match the five pinned sets";
                      }});

    checks.push_back({"scalar-solutions", "x21 vanishes exactly on scalar second components",
                      [](std::ostringstream& d) {
                          DiffPolynomial p(2);
                          p.add_term(DiffMonomial::variable(2, 1), TruncatedSeries::constant(Rational(1), kTrunc));
                          const std::vector<TruncatedSeries> phi = {
                              parse_series("t^3", kTrunc, true),
                              TruncatedSeries::constant(Rational(5), kTrunc),
                          };
                          require(p.evaluate(phi).is_zero(), "x21 should vanish at a scalar");
                          d << "x21(phi) = 0 for scalar phi_2";
                      }});

    checks.push_back({"denef-series", "the Denef-Lipshitz series", [](std::ostringstream& d) {
                          bool pole = false;
                          try {
                              denef_series(Rational(2), 5);
                          } catch (const Error& e) {
                              pole = e.kind() == ErrorKind::NaturalPole;
                          }
                          require(pole, "phi2 = 2 must raise NaturalPole");
                          const TruncatedSeries s = denef_series(Rational(7), 5);
                          require(s.support().size() == 5, "phi1 must have full support");
                          d << "phi2=2 poles, phi2=7 gives " << s.to_string();
                      }});

    checks.push_back({"val-embedding", "order-4 Val embedding of the pinned set", [](std::ostringstream& d) {
                          const std::vector<NatSet> s = sets1(NatSet::finite({0, 1, 2, 3, 7, 8}));
                          const TropVector v = val_embed(s, 4);
                          d << "(";
                          for (std::size_t i = 0; i < v.size(); ++i) d << (i ? "," : "") << v[i].to_string();
                          d << ")";
                          const TropVector expected = {ExtRat::of(0), ExtRat::of(0), ExtRat::of(0), ExtRat::of(0),
                                                       ExtRat::of(3)};
                          require(v == expected, "Val embedding != (0,0,0,0,3)");
                      }});

    checks.push_back({"band-matrix", "band matrix columns (1, s, 1)", [](std::ostringstream& d) {
                          const PolyMatrix m2 = band_matrix(2);
                          require(m2.rows == 3 && m2.cols == 1, "band_matrix(2) shape");
                          require(m2.at(0, 0) == UniPoly(Rational(1)) && m2.at(1, 0) == UniPoly::variable() &&
                                      m2.at(2, 0) == UniPoly(Rational(1)),
                                  "band_matrix(2) column != (1,s,1)");
                          const PolyMatrix m3 = band_matrix(3);
                          require(m3.rows == 4 && m3.cols == 2, "band_matrix(3) shape");
                          require(m3.at(3, 0).is_zero() && m3.at(0, 1).is_zero(), "band_matrix(3) off-band entries");
                          require(m3.at(1, 1) == UniPoly(Rational(1)) && m3.at(2, 1) == UniPoly::variable(),
                                  "band_matrix(3) second column");
                          d << "shapes 3x1 and 4x2 with (1,s,1) columns";
                      }});

    checks.push_back({"qab-bergman", "q_ab truncations fall outside the Bergman fan",
                      [](std::ostringstream& d) {
                          TropVector q(5, ExtRat::of(0));
                          q[0] = ExtRat::of(1);
                          q[2] = ExtRat::of(1);
                          require(!bergman_membership_u2(q), "q_02 truncation must lie outside V_trop(I_r)");
                          require(bergman_membership_u2(TropVector(5, ExtRat::of(0))), "the origin must lie inside");
                          d << "q_02 outside, origin inside";
                      }});

    checks.push_back({"parse-pinned", "pinned parser examples", [](std::ostringstream& d) {
                          DiffPolynomial p = poly("t*x(1,1) + t^2*x(1,3) + t^3");
                          DiffPolynomial built(1);
                          built.add_term(DiffMonomial::variable(1, 1), TruncatedSeries::t_term(Rational(1), 1, kTrunc));
                          built.add_term(DiffMonomial::variable(1, 3), TruncatedSeries::t_term(Rational(1), 2, kTrunc));
                          built.add_term(DiffMonomial::one(), TruncatedSeries::t_term(Rational(1), 3, kTrunc));
                          require(p.compare(built) == SeriesEq::Equal, "pinned polynomial parse");
                          require(poly("x(1,0)+x(1,1)+x(1,2)").terms().size() == 3, "three-term generator parse");
                          require(natset("{2,3}") == NatSet::finite({2, 3}), "parse {2,3}");
                          require(natset("{0,1,2,3,7,8}") == NatSet::finite({0, 1, 2, 3, 7, 8}),
                                  "pinned set parse");
                          require(natset("{}+per(0;3;0,2)") == NatSet::make({}, 0, 3, {0, 2}),
                                  "parse Z>=0 minus 3k+1");
                          d << "parser reproduces the pinned polynomials and sets";
                      }});

    checks.push_back({"cli-initial-format", "CLI rendering of the pinned initial part",
                      [](std::ostringstream& d) {
                          const Report r =
                              run_initial("t*x(1,1)+t^2*x(1,3)+t^3", kTrunc, {"{2,3}"}, false);
                          const std::string line = r.text.substr(0, r.text.find('\n'));
                          d << line;
                          require(line == "x(1,1) + x(1,3)", "initial output must read x(1,1) + x(1,3)");
                      }});

    return checks;
}

} // namespace

Report run_paper_examples() {
    Report r;
    nlohmann::json results = nlohmann::json::array();
    std::ostringstream out;
    std::size_t passed = 0, failed = 0;
    for (const Check& c : make_checks()) {
        std::ostringstream detail;
        bool ok = true;
        std::string error;
        try {
            c.run(detail);
        } catch (const std::exception& e) {
            ok = false;
            error = e.what();
        }
        results.push_back({{"id", c.id}, {"description", c.description}, {"ok", ok},
                           {"detail", ok ? detail.str() : error}});
        out << (ok ? "ok   " : "FAIL ") << c.id << ": " << c.description;
        const std::string info = ok ? detail.str() : error;
        if (!info.empty()) out << " — " << info;
        out << "\n";
        (ok ? passed : failed) += 1;
    }
    out << passed << " passed, " << failed << " failed\n";
    r.data = {{"command", "paper-examples"}, {"results", results}, {"passed", passed}, {"failed", failed}};
    r.text = out.str();
    r.status = failed == 0 ? 0 : 1;
    return r;
}

} // namespace tropdiff::cmd
