#include "tropdiff/solver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tropdiff/errors.hpp"
#include "tropdiff/initial.hpp"

namespace tropdiff {

std::vector<NatSet> CandidateUniverse::atoms() const {
    return enumerate_natsets(t_max, p_max);
}

std::vector<std::vector<NatSet>> CandidateUniverse::tuples() const {
    const std::vector<NatSet> a = atoms();
    std::vector<std::vector<NatSet>> out;
    std::vector<std::size_t> idx(n_vars, 0);
    while (true) {
        std::vector<NatSet> tuple;
        tuple.reserve(n_vars);
        for (std::size_t i : idx) tuple.push_back(a[i]);
        out.push_back(std::move(tuple));
        std::size_t pos = n_vars;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < a.size()) break;
            idx[pos] = 0;
            if (pos == 0) return out;
        }
    }
}

bool SolutionReport::contains(const std::vector<NatSet>& tuple) const {
    return std::binary_search(solutions.begin(), solutions.end(), tuple);
}

SolutionReport SolutionReport::from_sets(const CandidateUniverse& u, std::vector<std::vector<NatSet>> sets, int depth,
                                         std::string note) {
    SolutionReport r;
    r.universe = u;
    r.depth = depth;
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    r.solutions = std::move(sets);
    r.note = std::move(note);
    return r;
}

SolutionReport solve_system(const std::vector<TropDiffPolynomial>& polys, const CandidateUniverse& u) {
    for (const TropDiffPolynomial& p : polys)
        if (p.n_vars() != u.n_vars)
            fail(ErrorKind::VariableCountMismatch, "system polynomial arity differs from the universe");
    SolutionReport report;
    report.universe = u;
    for (std::vector<NatSet>& tuple : u.tuples()) {
        CandidateRecord rec;
        rec.is_solution = true;
        for (std::size_t i = 0; i < polys.size(); ++i) {
            const SolutionWitness w = is_tropical_solution(polys[i], tuple);
            if (!w.is_solution) {
                rec.is_solution = false;
                rec.failing_poly = i;
                if (!w.argmin.empty()) rec.unique_argmin = w.argmin.front();
                break;
            }
        }
        rec.tuple = std::move(tuple);
        if (rec.is_solution) report.solutions.push_back(rec.tuple);
        report.records.push_back(std::move(rec));
    }
    return report;
}

namespace {

// trop(d^k g) for all generators through the requested depth, with origins.
std::pair<std::vector<TropDiffPolynomial>, std::vector<std::pair<std::size_t, std::uint32_t>>>
ideal_trop_family(const std::vector<DiffPolynomial>& gens, std::uint32_t depth) {
    std::vector<TropDiffPolynomial> polys;
    std::vector<std::pair<std::size_t, std::uint32_t>> origins;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        DiffPolynomial d = gens[g];
        for (std::uint32_t k = 0; k <= depth; ++k) {
            try {
                polys.push_back(tropicalize(d));
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::UncertifiedValuation || e.kind() == ErrorKind::EmptyPrecision)
                    fail(ErrorKind::UncertifiedValuation,
                         "truncation exhausted at derivative " + std::to_string(k) + " of generator " +
                             std::to_string(g) + ": " + e.what());
                throw;
            }
            origins.emplace_back(g, k);
            if (k < depth) {
                try {
                    d = d.derive(1);
                } catch (const Error& e) {
                    if (e.kind() == ErrorKind::EmptyPrecision)
                        fail(ErrorKind::UncertifiedValuation,
                             "truncation exhausted at derivative " + std::to_string(k + 1) + " of generator " +
                                 std::to_string(g) + ": " + e.what());
                    throw;
                }
            }
        }
    }
    return {std::move(polys), std::move(origins)};
}

} // namespace

SolutionReport solve_diff_ideal(const std::vector<DiffPolynomial>& gens, std::uint32_t depth,
                                const CandidateUniverse& u) {
    for (const DiffPolynomial& g : gens)
        if (g.n_vars() != u.n_vars)
            fail(ErrorKind::VariableCountMismatch, "generator arity differs from the universe");
    auto [polys, origins] = ideal_trop_family(gens, depth);
    SolutionReport report = solve_system(polys, u);
    report.depth = static_cast<int>(depth);
    report.origins = std::move(origins);
    report.note = "over-approximation of Sol(trop(I)): solutions of trop(d^k g) verified for k <= " +
                  std::to_string(depth) + " only";
    return report;
}

BasisCheckResult check_basis(const std::vector<DiffPolynomial>& gens, const SolutionReport& reference,
                             std::uint32_t depth, const CandidateUniverse& u) {
    if (!(reference.universe == u))
        fail(ErrorKind::UniverseMismatch, "reference report was computed over a different universe");
    BasisCheckResult result;
    result.candidate = solve_diff_ideal(gens, depth, u);

    for (const std::vector<NatSet>& s : result.candidate.solutions) {
        if (!reference.contains(s)) {
            BasisDiscrepancy d;
            d.tuple = s;
            d.extra = true;
            result.discrepancies.push_back(std::move(d));
        }
    }
    for (const std::vector<NatSet>& s : reference.solutions) {
        if (result.candidate.contains(s)) continue;
        BasisDiscrepancy d;
        d.tuple = s;
        d.extra = false;
        // locate the record to name the first failing polynomial/derivative
        for (const CandidateRecord& rec : result.candidate.records) {
            if (rec.tuple == s && !rec.is_solution) {
                d.has_witness = true;
                d.gen_index = result.candidate.origins[rec.failing_poly].first;
                d.k = result.candidate.origins[rec.failing_poly].second;
                break;
            }
        }
        result.discrepancies.push_back(std::move(d));
    }
    result.is_basis = result.discrepancies.empty();
    return result;
}

TheoremPpReport theorem_pp_compare(const std::vector<DiffPolynomial>& gens,
                                   const std::vector<std::vector<TruncatedSeries>>& known_solutions,
                                   std::uint32_t depth, const CandidateUniverse& u, std::uint32_t product_depth) {
    TheoremPpReport report;
    report.universe = u;
    report.depth = depth;
    report.product_depth = product_depth;

    // Every known solution must evaluate to zero modulo its truncation.
    for (std::size_t s = 0; s < known_solutions.size(); ++s) {
        if (known_solutions[s].size() != u.n_vars)
            fail(ErrorKind::VariableCountMismatch, "known solution arity differs from the universe");
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const TruncatedSeries value = gens[g].evaluate(known_solutions[s]);
            if (!value.is_zero())
                fail(ErrorKind::NotASolution, "known solution " + std::to_string(s) +
                                                  " does not annihilate generator " + std::to_string(g) +
                                                  " (value " + value.to_string() + ")");
        }
    }

    const std::vector<std::vector<NatSet>> tuples = u.tuples();

    // (1') candidates whose membership pattern matches an observed support
    // over the full observation window.
    std::uint32_t match_window = 0;
    std::set<std::vector<NatSet>> set1;
    for (const std::vector<TruncatedSeries>& phi : known_solutions) {
        const SupportTuple st = trop_supp(phi);
        for (std::uint32_t w : st.windows) match_window = match_window ? std::min(match_window, w) : w;
        bool matched = false;
        for (const std::vector<NatSet>& tuple : tuples) {
            bool all = true;
            for (std::size_t i = 0; i < tuple.size() && all; ++i)
                if (tuple[i].elements_below(st.windows[i]) != st.supports[i].elements_below(st.windows[i])) all = false;
            if (all) {
                set1.insert(tuple);
                matched = true;
            }
        }
        if (!matched) report.unmatched_solutions += 1;
    }
    report.match_window = match_window;
    report.supports_of_solutions.assign(set1.begin(), set1.end());

    // (2') tropical solutions to depth K.
    SolutionReport ideal = solve_diff_ideal(gens, depth, u);
    report.tropical_solutions = ideal.solutions;

    // (3') monomial-freeness over the witness family {x^M d^k g}. Initial
    // parts are multiplicative and In_S(x^M) is either x^M or zero, so a
    // product witness is a monomial exactly when In_S(d^k g) is one; the
    // monomial multipliers never create new exclusions.
    std::vector<std::pair<std::size_t, DiffPolynomial>> derivatives; // (gen index, d^k g) with k implicit
    std::vector<std::uint32_t> orders;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        DiffPolynomial d = gens[g];
        for (std::uint32_t k = 0; k <= depth; ++k) {
            derivatives.emplace_back(g, d);
            orders.push_back(k);
            if (k < depth) d = d.derive(1);
        }
    }
    std::set<std::vector<NatSet>> set3;
    for (const std::vector<NatSet>& tuple : tuples) {
        bool monomial_found = false;
        for (std::size_t i = 0; i < derivatives.size() && !monomial_found; ++i) {
            const ResiduePolynomial in = initial_part(derivatives[i].second, tuple);
            if (rp_is_monomial(in)) {
                monomial_found = true;
                MonomialWitness w;
                w.tuple = tuple;
                w.gen_index = derivatives[i].first;
                w.k = orders[i];
                w.initial_part_text = in.to_string();
                report.exclusions.push_back(std::move(w));
            }
        }
        if (!monomial_found) set3.insert(tuple);
    }
    report.monomial_free.assign(set3.begin(), set3.end());

    for (const std::vector<NatSet>& s : report.supports_of_solutions)
        if (!std::binary_search(report.tropical_solutions.begin(), report.tropical_solutions.end(), s))
            report.violations_1_in_2.push_back(s);
    for (const std::vector<NatSet>& s : report.tropical_solutions)
        if (!set3.contains(s)) report.violations_2_in_3.push_back(s);

    report.equal_1_2 = report.supports_of_solutions == report.tropical_solutions;
    report.equal_2_3 = report.tropical_solutions == report.monomial_free;
    std::ostringstream note;
    note << "equalities verified at depth (K=" << depth << ", product_depth=" << product_depth
         << ") over the finite universe only";
    report.note = note.str();
    return report;
}

} // namespace tropdiff
