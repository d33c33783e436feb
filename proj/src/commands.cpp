#include "tropdiff/commands.hpp"

#include <sstream>

#include "tropdiff/analysis.hpp"
#include "tropdiff/errors.hpp"
#include "tropdiff/initial.hpp"
#include "tropdiff/parser.hpp"
#include "tropdiff/solver.hpp"
#include "tropdiff/tropical.hpp"

namespace tropdiff::cmd {

namespace {

using nlohmann::json;

std::vector<NatSet> parse_sets(const std::vector<std::string>& texts, Report& report) {
    std::vector<NatSet> sets;
    for (const std::string& t : texts) {
        ParsedNatSet p = parse_natset(t);
        if (!p.was_canonical)
            report.warnings.push_back("set \"" + t + "\" was not canonical; using " + p.set.to_string());
        sets.push_back(std::move(p.set));
    }
    return sets;
}

std::vector<DiffPolynomial> parse_gens(const std::vector<std::string>& texts, std::uint32_t trunc,
                                       std::uint32_t n_vars = 0) {
    std::vector<DiffPolynomial> gens;
    std::uint32_t n = n_vars;
    for (const std::string& t : texts) {
        DiffPolynomial p = parse_poly(t, trunc);
        n = std::max(n, p.n_vars());
        gens.push_back(std::move(p));
    }
    for (DiffPolynomial& g : gens) g = g.with_n_vars(n);
    return gens;
}

json tuple_json(const std::vector<NatSet>& tuple) {
    if (tuple.size() == 1) return tuple.front().to_string();
    json arr = json::array();
    for (const NatSet& s : tuple) arr.push_back(s.to_string());
    return arr;
}

json solutions_json(const std::vector<std::vector<NatSet>>& sols) {
    json arr = json::array();
    for (const auto& s : sols) arr.push_back(tuple_json(s));
    return arr;
}

json universe_json(const CandidateUniverse& u, std::size_t candidates) {
    return json{{"n_vars", u.n_vars}, {"t_max", u.t_max}, {"p_max", u.p_max}, {"candidates", candidates}};
}

void render_warnings(std::ostringstream& out, const Report& r) {
    for (const std::string& w : r.warnings) out << "warning: " << w << "\n";
}

std::string splice(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

} // namespace

Report run_val(const std::string& natset_text, const std::vector<std::uint32_t>& js) {
    Report r;
    const std::vector<NatSet> sets = parse_sets({natset_text}, r);
    const NatSet& s = sets.front();
    r.data = {{"command", "val"}, {"set", s.to_string()}, {"values", json::array()}};
    std::ostringstream out;
    render_warnings(out, r);
    out << "S = " << s.to_string() << "\n";
    for (std::uint32_t j : js) {
        const TropValue v = s.val_at(j);
        r.data["values"].push_back({{"j", j}, {"val", v.to_string()}});
        out << "Val_S(" << j << ") = " << v.to_string() << "\n";
    }
    r.text = out.str();
    return r;
}

Report run_trop(const std::string& poly_text, std::uint32_t trunc) {
    Report r;
    const DiffPolynomial p = parse_poly(poly_text, trunc);
    const TropDiffPolynomial tp = tropicalize(p);
    json terms = json::array();
    for (const auto& [m, a] : tp.terms())
        terms.push_back({{"monomial", m.to_string()}, {"coefficient", a.to_string()}});
    r.data = {{"command", "trop"},
              {"poly", p.to_string()},
              {"truncation", trunc},
              {"trop", tp.to_string()},
              {"terms", terms}};
    std::ostringstream out;
    render_warnings(out, r);
    out << tp.to_string() << "\n";
    r.text = out.str();
    return r;
}

Report run_eval(const std::string& poly_text, std::uint32_t trunc, const std::vector<std::string>& set_texts) {
    Report r;
    std::vector<NatSet> sets = parse_sets(set_texts, r);
    DiffPolynomial p = parse_poly(poly_text, trunc);
    if (p.n_vars() > sets.size())
        fail(ErrorKind::VariableCountMismatch,
             "polynomial uses " + std::to_string(p.n_vars()) + " variables but " + std::to_string(sets.size()) +
                 " sets were given");
    p = p.with_n_vars(static_cast<std::uint32_t>(sets.size()));
    const TropDiffPolynomial tp = tropicalize(p);
    const SolutionWitness w = is_tropical_solution(tp, sets);
    json argmin = json::array();
    for (const DiffMonomial& m : w.argmin) argmin.push_back(m.to_string());
    json set_list = json::array();
    for (const NatSet& s : sets) set_list.push_back(s.to_string());
    r.data = {{"command", "eval"},      {"poly", p.to_string()},   {"truncation", trunc},
              {"trop", tp.to_string()}, {"sets", set_list},        {"value", w.value.to_string()},
              {"argmin", argmin},       {"solution", w.is_solution}};
    std::ostringstream out;
    render_warnings(out, r);
    out << "trop(P) = " << tp.to_string() << "\n";
    out << "trop(P)(S) = " << w.value.to_string() << "\n";
    if (!w.argmin.empty()) {
        out << "argmin:";
        for (const DiffMonomial& m : w.argmin) out << " " << m.to_string();
        out << "\n";
    }
    out << (w.is_solution ? "S is a tropical solution" : "S is not a tropical solution") << "\n";
    r.text = out.str();
    return r;
}

namespace {

Report solve_report(const SolutionReport& sr, json params, std::string headline) {
    Report r;
    r.data = std::move(params);
    r.data["universe"] = universe_json(sr.universe, sr.records.empty() ? 0 : sr.records.size());
    r.data["solutions"] = solutions_json(sr.solutions);
    r.data["solution_count"] = sr.solutions.size();
    if (!sr.note.empty()) r.data["note"] = sr.note;
    std::ostringstream out;
    render_warnings(out, r);
    out << headline << "\n";
    out << "universe: n=" << sr.universe.n_vars << ", T_max=" << sr.universe.t_max << ", p_max=" << sr.universe.p_max
        << " (" << (sr.records.empty() ? 0 : sr.records.size()) << " candidates)\n";
    out << "solutions (" << sr.solutions.size() << "):\n";
    for (const auto& s : sr.solutions) out << "  " << natset_tuple_to_string(s) << "\n";
    if (!sr.note.empty()) out << "note: " << sr.note << "\n";
    r.text = out.str();
    return r;
}

} // namespace

Report run_solve(const std::vector<std::string>& gen_texts, std::uint32_t trunc, int depth, std::uint32_t t_max,
                 std::uint32_t p_max) {
    std::vector<DiffPolynomial> gens = parse_gens(gen_texts, trunc);
    const std::uint32_t n = gens.empty() ? 1 : gens.front().n_vars();
    const CandidateUniverse u{n, t_max, p_max};
    SolutionReport sr;
    json params = {{"command", "solve"}, {"gens", splice(gen_texts, " ; ")}, {"truncation", trunc}};
    std::string headline;
    if (depth < 0) {
        std::vector<TropDiffPolynomial> polys;
        for (const DiffPolynomial& g : gens) polys.push_back(tropicalize(g));
        sr = solve_system(polys, u);
        headline = "tropical solutions of the system";
    } else {
        sr = solve_diff_ideal(gens, static_cast<std::uint32_t>(depth), u);
        params["depth"] = depth;
        headline = "tropical solutions of trop(d^k g), k <= " + std::to_string(depth);
    }
    return solve_report(sr, std::move(params), std::move(headline));
}

Report run_initial(const std::string& poly_text, std::uint32_t trunc, const std::vector<std::string>& set_texts,
                   bool hu_gao) {
    Report r;
    std::vector<NatSet> sets = parse_sets(set_texts, r);
    DiffPolynomial p = parse_poly(poly_text, trunc).with_n_vars(static_cast<std::uint32_t>(sets.size()));
    const TropValue tv = trop_eval(tropicalize(p), sets);
    json set_list = json::array();
    for (const NatSet& s : sets) set_list.push_back(s.to_string());
    std::ostringstream out;
    render_warnings(out, r);
    std::string result_text;
    if (hu_gao) {
        const DiffPolynomial in = initial_part_hu_gao(p, sets);
        result_text = in.to_string();
        r.data = {{"command", "initial-hugao"}, {"poly", p.to_string()}, {"truncation", trunc},
                  {"sets", set_list},           {"trop_value", tv.to_string()}, {"initial", result_text}};
        out << "in_S(P) = " << result_text << "\n";
    } else {
        const ResiduePolynomial in = initial_part(p, sets);
        result_text = in.to_string();
        r.data = {{"command", "initial"}, {"poly", p.to_string()}, {"truncation", trunc},
                  {"sets", set_list},     {"trop_value", tv.to_string()}, {"initial", result_text}};
        out << result_text << "\n";
    }
    out << "trop(P)(S) = " << tv.to_string() << "\n";
    r.text = out.str();
    return r;
}

Report run_lift(const std::vector<std::string>& part_texts, std::uint32_t trunc,
                const std::vector<std::string>& set_texts) {
    Report r;
    std::vector<NatSet> sets = parse_sets(set_texts, r);
    std::vector<LiftPart> parts;
    std::uint32_t n = static_cast<std::uint32_t>(sets.size());
    for (const std::string& text : part_texts) {
        const std::size_t c1 = text.find(';');
        const std::size_t c2 = c1 == std::string::npos ? std::string::npos : text.find(';', c1 + 1);
        if (c2 == std::string::npos)
            fail(ErrorKind::Syntax, "a lift part reads \"alpha; monomial; polynomial\"");
        LiftPart part;
        part.alpha = parse_rational(text.substr(0, c1));
        DiffPolynomial mono = parse_poly(text.substr(c1 + 1, c2 - c1 - 1), trunc);
        if (mono.terms().size() != 1)
            fail(ErrorKind::Syntax, "the lift monomial must be a single monomial");
        const auto& [m, coeff] = *mono.terms().begin();
        if (coeff.compare(TruncatedSeries::constant(Rational(1), trunc)) == SeriesEq::Unequal)
            fail(ErrorKind::Syntax, "the lift monomial must have coefficient 1");
        part.monomial = m;
        part.gen = parse_poly(text.substr(c2 + 1), trunc);
        n = std::max(n, std::max(part.gen.n_vars(), part.monomial.max_var()));
        parts.push_back(std::move(part));
    }
    for (LiftPart& part : parts) part.gen = part.gen.with_n_vars(n);
    if (sets.size() != n)
        fail(ErrorKind::VariableCountMismatch,
             "parts use " + std::to_string(n) + " variables but " + std::to_string(sets.size()) + " sets were given");

    const LiftResult lifted = lift_initial_combination(parts, sets);
    json set_list = json::array();
    for (const NatSet& s : sets) set_list.push_back(s.to_string());
    r.data = {{"command", "lift"},
              {"truncation", trunc},
              {"sets", set_list},
              {"h", lifted.h.to_string()},
              {"initial_of_h", lifted.target.to_string()}};
    std::ostringstream out;
    render_warnings(out, r);
    out << "H = " << lifted.h.to_string() << "\n";
    out << "In_S(H) = " << lifted.target.to_string() << " (postcondition verified)\n";
    r.text = out.str();
    return r;
}

Report run_check_basis(const std::vector<std::string>& gen_texts, const std::vector<std::string>& ref_gen_texts,
                       std::uint32_t trunc, std::uint32_t depth, std::uint32_t t_max, std::uint32_t p_max) {
    Report r;
    std::vector<DiffPolynomial> gens = parse_gens(gen_texts, trunc);
    std::uint32_t n = gens.empty() ? 1 : gens.front().n_vars();
    std::vector<DiffPolynomial> ref = parse_gens(ref_gen_texts, trunc, n);
    if (!ref.empty()) n = std::max(n, ref.front().n_vars());
    gens = parse_gens(gen_texts, trunc, n);
    const CandidateUniverse u{n, t_max, p_max};
    const SolutionReport reference = solve_diff_ideal(ref, depth, u);
    const BasisCheckResult res = check_basis(gens, reference, depth, u);

    json discrepancies = json::array();
    for (const BasisDiscrepancy& d : res.discrepancies) {
        json e = {{"tuple", tuple_json(d.tuple)}, {"kind", d.extra ? "extra" : "missing"}};
        if (d.has_witness) {
            e["generator"] = d.gen_index;
            e["derivative"] = d.k;
        }
        discrepancies.push_back(std::move(e));
    }
    r.data = {{"command", "check-basis"},
              {"gens", splice(gen_texts, " ; ")},
              {"reference_gens", splice(ref_gen_texts, " ; ")},
              {"truncation", trunc},
              {"depth", depth},
              {"universe", universe_json(u, res.candidate.records.size())},
              {"is_basis", res.is_basis},
              {"candidate_solutions", solutions_json(res.candidate.solutions)},
              {"reference_solutions", solutions_json(reference.solutions)},
              {"discrepancies", discrepancies}};
    std::ostringstream out;
    render_warnings(out, r);
    out << (res.is_basis ? "basis check: PASS (solution sets agree within the universe)"
                         : "basis check: FAIL")
        << "\n";
    out << "depth K = " << depth << ", universe T_max=" << t_max << ", p_max=" << p_max << "\n";
    out << "candidate solutions: " << res.candidate.solutions.size()
        << ", reference solutions: " << reference.solutions.size() << "\n";
    for (const BasisDiscrepancy& d : res.discrepancies) {
        out << "  " << (d.extra ? "extra " : "missing ") << natset_tuple_to_string(d.tuple);
        if (d.has_witness) out << " (first failure: generator " << d.gen_index << ", derivative " << d.k << ")";
        out << "\n";
    }
    r.text = out.str();
    return r;
}

Report run_theorem_pp(const std::vector<std::string>& gen_texts, const std::vector<std::string>& solution_texts,
                      std::uint32_t trunc, std::uint32_t depth, std::uint32_t product_depth, std::uint32_t t_max,
                      std::uint32_t p_max) {
    Report r;
    std::vector<DiffPolynomial> gens = parse_gens(gen_texts, trunc);
    const std::uint32_t n = gens.empty() ? 1 : gens.front().n_vars();
    std::vector<std::vector<TruncatedSeries>> solutions;
    for (const std::string& text : solution_texts) {
        std::vector<TruncatedSeries> tuple;
        std::size_t start = 0;
        while (true) {
            const std::size_t cut = text.find(';', start);
            const std::string piece = text.substr(start, cut == std::string::npos ? cut : cut - start);
            tuple.push_back(parse_series(piece, trunc, false));
            if (cut == std::string::npos) break;
            start = cut + 1;
        }
        if (tuple.size() != n)
            fail(ErrorKind::VariableCountMismatch, "solution \"" + text + "\" does not have " + std::to_string(n) +
                                                       " components");
        solutions.push_back(std::move(tuple));
    }
    const CandidateUniverse u{n, t_max, p_max};
    const TheoremPpReport rep = theorem_pp_compare(gens, solutions, depth, u, product_depth);

    r.data = {{"command", "theorem-pp"},
              {"gens", splice(gen_texts, " ; ")},
              {"truncation", trunc},
              {"depth", depth},
              {"product_depth", product_depth},
              {"universe", universe_json(u, 0)},
              {"match_window", rep.match_window},
              {"unmatched_solutions", rep.unmatched_solutions},
              {"supports_of_solutions", solutions_json(rep.supports_of_solutions)},
              {"tropical_solutions", solutions_json(rep.tropical_solutions)},
              {"monomial_free", solutions_json(rep.monomial_free)},
              {"violations_1_in_2", solutions_json(rep.violations_1_in_2)},
              {"violations_2_in_3", solutions_json(rep.violations_2_in_3)},
              {"equal_1_2", rep.equal_1_2},
              {"equal_2_3", rep.equal_2_3},
              {"note", rep.note}};
    std::ostringstream out;
    render_warnings(out, r);
    auto print_set = [&](const char* name, const std::vector<std::vector<NatSet>>& sets) {
        out << name << " (" << sets.size() << "):\n";
        for (const auto& s : sets) out << "  " << natset_tuple_to_string(s) << "\n";
    };
    print_set("(1') supports of known solutions", rep.supports_of_solutions);
    print_set("(2') tropical solutions", rep.tropical_solutions);
    print_set("(3') monomial-free initial parts", rep.monomial_free);
    out << "containment (1')⊆(2'): " << (rep.violations_1_in_2.empty() ? "holds" : "VIOLATED") << "\n";
    out << "containment (2')⊆(3'): " << (rep.violations_2_in_3.empty() ? "holds" : "VIOLATED") << "\n";
    out << "equality (1')=(2'): " << (rep.equal_1_2 ? "yes" : "no") << ", (2')=(3'): "
        << (rep.equal_2_3 ? "yes" : "no") << "\n";
    out << "note: " << rep.note << "\n";
    if (!rep.violations_1_in_2.empty() || !rep.violations_2_in_3.empty()) r.status = 1;
    r.text = out.str();
    return r;
}

Report run_suppmin(const std::string& poly_text, std::uint32_t trunc, std::uint32_t k_max) {
    Report r;
    const DiffPolynomial p = parse_poly(poly_text, trunc);
    const std::set<std::uint32_t> sm = supp_min(p);
    const SuppMinStabilization stab = suppmin_stabilization(p, k_max);
    json sm_json = json::array();
    for (std::uint32_t j : sm) sm_json.push_back(j);
    json trace = json::array();
    for (const auto& step : stab.trace) {
        json row = json::array();
        for (std::uint32_t j : step) row.push_back(j);
        trace.push_back(std::move(row));
    }
    json offsets = json::array();
    for (std::int64_t l : stab.offsets) offsets.push_back(l);
    r.data = {{"command", "suppmin"}, {"poly", p.to_string()},      {"truncation", trunc},
              {"supp_min", sm_json},  {"stabilized", stab.stabilized}, {"k_max", k_max},
              {"offsets", offsets},   {"k_stable", stab.k_stable},  {"trace", trace}};
    std::ostringstream out;
    render_warnings(out, r);
    out << "supp_min(f) = {";
    bool first = true;
    for (std::uint32_t j : sm) {
        if (!first) out << ",";
        out << j;
        first = false;
    }
    out << "}\n";
    if (stab.stabilized) {
        out << "stabilized from k = " << stab.k_stable << " with offsets L = {";
        first = true;
        for (std::int64_t l : stab.offsets) {
            if (!first) out << ",";
            out << l;
            first = false;
        }
        out << "}\n";
    } else {
        out << "not stabilized within k <= " << k_max << "\n";
    }
    r.text = out.str();
    return r;
}

Report run_matroid_check(std::uint32_t r_param) {
    Report r;
    const MatroidCheckResult res = check_uniform_matroid(r_param);
    json minors = json::array();
    for (const MinorRecord& m : res.minors) {
        json rows = json::array();
        for (std::uint32_t i : m.rows) rows.push_back(i);
        minors.push_back({{"rows", rows}, {"det", m.det.to_string()}});
    }
    r.data = {{"command", "matroid-check"},
              {"r", r_param},
              {"uniform", res.uniform},
              {"minor_count", res.minors.size()},
              {"minors", minors}};
    std::ostringstream out;
    render_warnings(out, r);
    out << "band matrix " << (r_param + 1) << "x" << (r_param - 1) << ": " << res.minors.size() << " maximal minors, "
        << (res.uniform ? "all nonzero -> uniform matroid U(2," + std::to_string(r_param + 1) + ")"
                        : "a vanishing minor exists")
        << "\n";
    for (const MinorRecord& m : res.minors) {
        out << "  rows {";
        for (std::size_t i = 0; i < m.rows.size(); ++i) out << (i ? "," : "") << m.rows[i];
        out << "}: " << m.det.to_string() << "\n";
    }
    r.text = out.str();
    return r;
}

Report run_qab_audit(const std::vector<std::string>& gen_texts, std::uint32_t trunc, std::uint32_t r_param,
                     std::uint32_t depth, int a, int b) {
    Report r;
    std::vector<DiffPolynomial> gens = parse_gens(gen_texts, trunc);
    std::ostringstream out;
    if (a >= 0 || b >= 0) {
        if (a < 0 || b < 0) fail(ErrorKind::BadPair, "both a and b must be given");
        const auto w = qab_witness_search(gens, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), depth);
        r.data = {{"command", "qab-audit"}, {"a", a}, {"b", b}, {"depth", depth}, {"witness_found", w.has_value()}};
        if (w) {
            json sm = json::array();
            for (std::uint32_t j : w->supp_min_set) sm.push_back(j);
            r.data["witness"] = {{"generator", w->gen_index}, {"derivative", w->k}, {"argmin", w->argmin},
                                 {"supp_min", sm}};
            out << "witness for q_" << a << b << ": d^" << w->k << " of generator " << w->gen_index
                << ", unique argmin at " << w->argmin << "\n";
        } else {
            out << "no witness for q_" << a << "," << b << " within k <= " << depth << "\n";
        }
        render_warnings(out, r);
        r.text = out.str();
        return r;
    }
    const CoverageReport rep = coverage_audit(gens, r_param, depth);
    json pairs = json::array();
    for (const PairCoverage& pc : rep.pairs) {
        json e = {{"a", pc.a}, {"b", pc.b}, {"covered", pc.witness.has_value()}};
        if (pc.witness) {
            e["generator"] = pc.witness->gen_index;
            e["derivative"] = pc.witness->k;
            e["argmin"] = pc.witness->argmin;
        }
        pairs.push_back(std::move(e));
    }
    json threes = json::array();
    for (const auto& s : rep.suppmin_3sets) {
        json row = json::array();
        for (std::uint32_t j : s) row.push_back(j);
        threes.push_back(std::move(row));
    }
    json uncovered = json::array();
    for (const auto& [ua, ub] : rep.uncovered_pairs) uncovered.push_back({{"a", ua}, {"b", ub}});
    r.data = {{"command", "qab-audit"},
              {"r", rep.r},
              {"depth", rep.depth},
              {"pairs", pairs},
              {"covered", rep.covered},
              {"uncovered", rep.uncovered},
              {"uncovered_pairs", uncovered},
              {"suppmin_3sets", threes},
              {"g_r_size", rep.g_r_size},
              {"inequality_holds", rep.inequality_holds},
              {"counting_forces_failure", rep.counting_forces_failure}};
    render_warnings(out, r);
    out << "q_ab audit for r = " << rep.r << ", derivatives k <= " << rep.depth << "\n";
    out << "pairs covered: " << rep.covered << ", uncovered: " << rep.uncovered << "\n";
    for (const auto& [ua, ub] : rep.uncovered_pairs) out << "  uncovered {" << ua << "," << ub << "}\n";
    out << "|G_r| (3-element supp_min derivatives meeting [0," << rep.r << "]): " << rep.g_r_size << "\n";
    out << "distinct supp_min 3-sets: " << rep.suppmin_3sets.size() << "\n";
    out << "counting inequality 3*|{supp_min}| >= covered: " << (rep.inequality_holds ? "holds" : "VIOLATED") << "\n";
    out << "counting forces uncovered pairs: " << (rep.counting_forces_failure ? "yes" : "no") << "\n";
    r.text = out.str();
    return r;
}

Report run_denef(const std::string& phi2_text, std::uint32_t trunc) {
    Report r;
    const Rational phi2 = parse_rational(phi2_text);
    const TruncatedSeries s = denef_series(phi2, trunc);
    json coeffs = json::array();
    for (const Rational& c : s.coefficients()) coeffs.push_back(c.get_str());
    json supp = json::array();
    for (std::uint32_t i : s.support()) supp.push_back(i);
    r.data = {{"command", "denef"}, {"phi2", phi2.get_str()},      {"truncation", trunc},
              {"series", s.to_string()}, {"coefficients", coeffs}, {"support", supp}};
    std::ostringstream out;
    render_warnings(out, r);
    out << "phi1 = " << s.to_string() << " (mod t^" << trunc << ")\n";
    out << "substitution check against t*x(1,1) - (x(2,0)+t)*x(1,0) - 1 and x(2,1): passed\n";
    r.text = out.str();
    return r;
}

} // namespace tropdiff::cmd
