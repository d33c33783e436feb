#include "tropdiff/tropical.hpp"

#include <sstream>

#include "tropdiff/errors.hpp"

namespace tropdiff {

void TropDiffPolynomial::add_term(const DiffMonomial& m, TropValue a) {
    if (a.is_infinite()) return;
    if (m.max_var() > n_vars_) fail(ErrorKind::VariableCountMismatch, "monomial variable exceeds arity");
    auto [it, inserted] = terms_.emplace(m, a);
    if (!inserted) it->second = min(it->second, a);
}

std::string TropDiffPolynomial::to_string() const {
    if (terms_.empty()) return "inf";
    std::vector<std::string> rendered;
    for (const auto& [m, a] : terms_) {
        std::ostringstream t;
        bool printed = false;
        if (!a.is_infinite() && (a.finite_value() != 0 || m.is_one())) {
            t << a.finite_value();
            printed = true;
        }
        for (const auto& e : m.entries()) {
            if (printed) t << "+";
            if (e.exp > 1) t << e.exp;
            t << "x" << e.var << e.order;
            printed = true;
        }
        rendered.push_back(t.str());
    }
    if (rendered.size() == 1) return rendered.front();
    std::ostringstream out;
    out << "min{";
    for (std::size_t i = 0; i < rendered.size(); ++i) {
        if (i) out << ", ";
        out << rendered[i];
    }
    out << "}";
    return out.str();
}

TropDiffPolynomial tropicalize(const DiffPolynomial& p) {
    TropDiffPolynomial tp(p.n_vars());
    for (const auto& [m, c] : p.terms()) {
        const Valuation v = c.valuation();
        if (v.truncation_limited)
            fail(ErrorKind::UncertifiedValuation,
                 "coefficient of " + m.to_string() + " is zero modulo t^" + std::to_string(c.trunc_order()));
        tp.add_term(m, v.value);
    }
    return tp;
}

namespace {

TropValue term_value(const DiffMonomial& m, TropValue a, std::span<const NatSet> sets) {
    TropValue v = a;
    for (const auto& e : m.entries()) {
        // M_ij = 0 entries are not stored, so every factor here contributes.
        v += static_cast<std::int64_t>(e.exp) * sets[e.var - 1].val_at(e.order);
    }
    return v;
}

void check_arity(std::uint32_t n_vars, std::span<const NatSet> sets) {
    if (sets.size() != n_vars)
        fail(ErrorKind::VariableCountMismatch,
             "support tuple has " + std::to_string(sets.size()) + " entries, expected " + std::to_string(n_vars));
}

} // namespace

TropValue trop_eval(const TropDiffPolynomial& phi, std::span<const NatSet> sets) {
    check_arity(phi.n_vars(), sets);
    TropValue best = TropValue::infinity();
    for (const auto& [m, a] : phi.terms()) best = min(best, term_value(m, a, sets));
    return best;
}

SolutionWitness is_tropical_solution(const TropDiffPolynomial& phi, std::span<const NatSet> sets) {
    check_arity(phi.n_vars(), sets);
    SolutionWitness w;
    w.value = trop_eval(phi, sets);
    if (w.value.is_infinite()) {
        w.is_solution = true;
        w.infinite_value = true;
        return w;
    }
    for (const auto& [m, a] : phi.terms())
        if (term_value(m, a, sets) == w.value) w.argmin.push_back(m);
    w.is_solution = w.argmin.size() >= 2;
    return w;
}

SupportTuple trop_supp(std::span<const TruncatedSeries> phi) {
    SupportTuple out;
    for (const TruncatedSeries& s : phi) {
        out.supports.push_back(NatSet::finite(s.support()));
        out.windows.push_back(s.trunc_order());
    }
    return out;
}

} // namespace tropdiff
