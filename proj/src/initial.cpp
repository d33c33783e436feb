#include "tropdiff/initial.hpp"

#include <algorithm>

#include "tropdiff/errors.hpp"
#include "tropdiff/tropical.hpp"

namespace tropdiff {

namespace {

void check_sets_arity(const DiffPolynomial& p, std::span<const NatSet> sets) {
    if (sets.size() != p.n_vars())
        fail(ErrorKind::VariableCountMismatch,
             "support tuple has " + std::to_string(sets.size()) + " entries, expected " + std::to_string(p.n_vars()));
}

// a_M + Σ M_ij Val_{S_i}(j) for one term
TropValue term_trop_value(const DiffMonomial& m, const TruncatedSeries& c, std::span<const NatSet> sets) {
    const Valuation v = c.valuation();
    if (v.truncation_limited)
        fail(ErrorKind::UncertifiedValuation,
             "coefficient of " + m.to_string() + " is zero modulo t^" + std::to_string(c.trunc_order()));
    TropValue out = v.value;
    for (const auto& e : m.entries()) out += static_cast<std::int64_t>(e.exp) * sets[e.var - 1].val_at(e.order);
    return out;
}

} // namespace

DiffPolynomial q_sub(const DiffPolynomial& q, std::span<const NatSet> sets) {
    check_sets_arity(q, sets);
    const TropValue trop_value = trop_eval(tropicalize(q), sets);
    if (trop_value.is_infinite()) return DiffPolynomial(q.n_vars());

    DiffPolynomial scaled = q.scale_vars([&](std::uint32_t var, std::uint32_t order) {
        return std::optional<TropValue>(sets[var - 1].val_at(order));
    });
    DiffPolynomial result(q.n_vars());
    bool zero_valuation_seen = false;
    for (const auto& [m, c] : scaled.terms()) {
        TruncatedSeries shifted = [&] {
            try {
                return c.t_shift(-trop_value.finite_value());
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::NegativePowerOfT)
                    fail(ErrorKind::InternalInvariant,
                         "coefficient of " + m.to_string() + " has valuation below trop(Q)(S)");
                throw;
            }
        }();
        const Valuation v = shifted.valuation();
        if (!v.value.is_infinite() && v.value.finite_value() == 0) zero_valuation_seen = true;
        result.add_term(m, shifted);
    }
    if (!zero_valuation_seen)
        fail(ErrorKind::InternalInvariant, "Q_S has no coefficient of valuation zero");
    return result;
}

ResiduePolynomial initial_part(const DiffPolynomial& p, std::span<const NatSet> sets) {
    check_sets_arity(p, sets);
    ResiduePolynomial out(p.n_vars());
    TropValue best = TropValue::infinity();
    for (const auto& [m, c] : p.terms()) best = min(best, term_trop_value(m, c, sets));
    if (best.is_infinite()) return out;
    for (const auto& [m, c] : p.terms())
        if (term_trop_value(m, c, sets) == best) out.add_term(m, c.leading_coefficient());
    if (out.is_zero()) fail(ErrorKind::InternalInvariant, "nonempty argmin produced a zero initial part");
    return out;
}

DiffPolynomial initial_part_hu_gao(const DiffPolynomial& p, std::span<const NatSet> sets) {
    check_sets_arity(p, sets);
    DiffPolynomial out(p.n_vars());
    TropValue best = TropValue::infinity();
    for (const auto& [m, c] : p.terms()) best = min(best, term_trop_value(m, c, sets));
    if (best.is_infinite()) return out;
    for (const auto& [m, c] : p.terms()) {
        if (term_trop_value(m, c, sets) != best) continue;
        const std::uint32_t nu = static_cast<std::uint32_t>(c.valuation().value.finite_value());
        out.add_term(m, TruncatedSeries::t_term(c.leading_coefficient(), nu, nu + 1));
    }
    // Setting t = 1 must recover In_S(P).
    ResiduePolynomial at_one(p.n_vars());
    for (const auto& [m, c] : out.terms()) {
        Rational sum = 0;
        for (const Rational& a : c.coefficients()) sum += a;
        at_one.add_term(m, sum);
    }
    if (!(at_one == initial_part(p, sets)))
        fail(ErrorKind::InternalInvariant, "Hu-Gao initial part does not evaluate to In_S at t=1");
    return out;
}

LiftResult lift_initial_combination(const std::vector<LiftPart>& parts, std::span<const NatSet> sets) {
    if (parts.empty()) fail(ErrorKind::InfiniteTropValue, "no parts supplied");
    const std::uint32_t n_vars = parts.front().gen.n_vars();

    std::vector<TropValue> a_m;
    for (const LiftPart& part : parts) {
        if (part.alpha == 0) fail(ErrorKind::InfiniteTropValue, "part coefficient alpha must be nonzero");
        if (part.gen.n_vars() != n_vars) fail(ErrorKind::VariableCountMismatch, "lift parts disagree on arity");
        TropValue v = trop_eval(tropicalize(part.gen), sets);
        if (v.is_infinite())
            fail(ErrorKind::InfiniteTropValue, "trop(G_M)(S) is infinite; the construction is undefined");
        for (const auto& e : part.monomial.entries()) {
            const TropValue val = sets[e.var - 1].val_at(e.order);
            if (val.is_infinite())
                fail(ErrorKind::InfiniteTropValue,
                     "Val is infinite at x(" + std::to_string(e.var) + "," + std::to_string(e.order) +
                         ") occurring in a lift monomial");
            v += static_cast<std::int64_t>(e.exp) * val;
        }
        a_m.push_back(v);
    }
    TropValue a_max = a_m.front();
    for (TropValue v : a_m) a_max = std::max(a_max, v);

    // h = Σ alpha · t^(A − A_M) · x^M · G_M  (all exponents here are >= 0)
    DiffPolynomial h(n_vars);
    ResiduePolynomial target(n_vars);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::int64_t exponent = a_max.finite_value() - a_m[i].finite_value();
        DiffPolynomial piece = parts[i].gen.times_monomial(parts[i].monomial);
        for (const auto& [m, c] : piece.terms())
            h.add_term(m, c.t_shift(exponent).mul_rational(parts[i].alpha));
        target = target.add(initial_part(parts[i].gen, sets).times_monomial(parts[i].monomial).scale(parts[i].alpha));
    }

    const ResiduePolynomial actual = initial_part(h, sets);
    if (!(actual == target))
        fail(ErrorKind::PostconditionFailure,
             "In_S(H) = " + actual.to_string() + " differs from the combined initial parts " + target.to_string());
    return {std::move(h), std::move(target)};
}

} // namespace tropdiff
