#include "tropdiff/diffalg.hpp"

#include <algorithm>
#include <sstream>

#include "tropdiff/errors.hpp"

namespace tropdiff {

// --- DiffMonomial ---

DiffMonomial DiffMonomial::variable(std::uint32_t var, std::uint32_t order, std::uint32_t exp) {
    if (var < 1) fail(ErrorKind::VariableIndex, "variable index must be >= 1");
    DiffMonomial m;
    if (exp > 0) m.entries_.push_back({var, order, exp});
    return m;
}

DiffMonomial DiffMonomial::from_entries(std::vector<Entry> entries) {
    DiffMonomial m;
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return std::pair(a.var, a.order) < std::pair(b.var, b.order);
    });
    for (const Entry& e : entries) {
        if (e.var < 1) fail(ErrorKind::VariableIndex, "variable index must be >= 1");
        if (e.exp == 0) continue;
        if (!m.entries_.empty() && m.entries_.back().var == e.var && m.entries_.back().order == e.order)
            m.entries_.back().exp += e.exp;
        else
            m.entries_.push_back(e);
    }
    return m;
}

std::uint32_t DiffMonomial::exponent(std::uint32_t var, std::uint32_t order) const {
    for (const Entry& e : entries_)
        if (e.var == var && e.order == order) return e.exp;
    return 0;
}

std::uint32_t DiffMonomial::degree() const {
    std::uint32_t d = 0;
    for (const Entry& e : entries_) d += e.exp;
    return d;
}

std::uint32_t DiffMonomial::order() const {
    std::uint32_t r = 0;
    for (const Entry& e : entries_) r = std::max(r, e.order);
    return r;
}

std::uint32_t DiffMonomial::max_var() const {
    std::uint32_t v = 0;
    for (const Entry& e : entries_) v = std::max(v, e.var);
    return v;
}

DiffMonomial DiffMonomial::times(const DiffMonomial& o) const {
    std::vector<Entry> all = entries_;
    all.insert(all.end(), o.entries_.begin(), o.entries_.end());
    return from_entries(std::move(all));
}

DiffMonomial DiffMonomial::pow(std::uint32_t e) const {
    std::vector<Entry> all;
    for (Entry en : entries_) {
        en.exp *= e;
        all.push_back(en);
    }
    return e == 0 ? one() : from_entries(std::move(all));
}

std::vector<std::pair<std::uint32_t, DiffMonomial>> DiffMonomial::derivative_terms() const {
    std::vector<std::pair<std::uint32_t, DiffMonomial>> out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        std::vector<Entry> all = entries_;
        const std::uint32_t factor = all[i].exp;
        all[i].exp -= 1;
        all.push_back({entries_[i].var, entries_[i].order + 1, 1});
        out.emplace_back(factor, from_entries(std::move(all)));
    }
    return out;
}

std::string DiffMonomial::to_string() const {
    if (entries_.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out << "*";
        out << "x(" << entries_[i].var << "," << entries_[i].order << ")";
        if (entries_[i].exp > 1) out << "^" << entries_[i].exp;
    }
    return out.str();
}

std::string DiffMonomial::to_compact_string() const {
    if (entries_.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out << "*";
        out << "x" << entries_[i].var << entries_[i].order;
        if (entries_[i].exp > 1) out << "^" << entries_[i].exp;
    }
    return out.str();
}

// --- ResiduePolynomial ---

void ResiduePolynomial::add_term(const DiffMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ResiduePolynomial ResiduePolynomial::add(const ResiduePolynomial& o) const {
    if (n_vars_ != o.n_vars_) fail(ErrorKind::VariableCountMismatch, "residue polynomial arity mismatch");
    ResiduePolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

ResiduePolynomial ResiduePolynomial::mul(const ResiduePolynomial& o) const {
    if (n_vars_ != o.n_vars_) fail(ErrorKind::VariableCountMismatch, "residue polynomial arity mismatch");
    ResiduePolynomial r(n_vars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1.times(m2), c1 * c2);
    return r;
}

ResiduePolynomial ResiduePolynomial::scale(const Rational& c) const {
    ResiduePolynomial r(n_vars_);
    if (c == 0) return r;
    for (const auto& [m, a] : terms_) r.add_term(m, a * c);
    return r;
}

ResiduePolynomial ResiduePolynomial::times_monomial(const DiffMonomial& m) const {
    ResiduePolynomial r(n_vars_);
    for (const auto& [m1, c] : terms_) r.add_term(m1.times(m), c);
    return r;
}

std::string ResiduePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (first) {
            first = false;
            if (neg && m.is_one()) {
                out << Rational(-a).get_str();
                continue;
            }
            if (neg) out << "-" << a.get_str() << "*";
            else if (m.is_one()) out << a.get_str();
            else if (a != 1) out << a.get_str() << "*";
            if (!m.is_one()) out << m.to_string();
            continue;
        }
        out << (neg ? " - " : " + ");
        if (m.is_one()) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << m.to_string();
        }
    }
    return out.str();
}

bool rp_is_monomial(const ResiduePolynomial& g) {
    return g.term_count() == 1;
}

// --- DiffPolynomial ---

DiffPolynomial DiffPolynomial::from_series(const TruncatedSeries& c, std::uint32_t n_vars) {
    DiffPolynomial p(n_vars);
    p.add_term(DiffMonomial::one(), c);
    return p;
}

DiffPolynomial DiffPolynomial::monomial(const DiffMonomial& m, const TruncatedSeries& c, std::uint32_t n_vars) {
    if (m.max_var() > n_vars) fail(ErrorKind::VariableCountMismatch, "monomial variable exceeds arity");
    DiffPolynomial p(n_vars);
    p.add_term(m, c);
    return p;
}

std::uint32_t DiffPolynomial::order() const {
    std::uint32_t r = 0;
    for (const auto& [m, c] : terms_) r = std::max(r, m.order());
    return r;
}

DiffPolynomial DiffPolynomial::with_n_vars(std::uint32_t n) const {
    DiffPolynomial p(n);
    for (const auto& [m, c] : terms_) {
        if (m.max_var() > n) fail(ErrorKind::VariableCountMismatch, "cannot narrow below occurring variables");
        p.terms_.emplace(m, c);
    }
    return p;
}

void DiffPolynomial::add_term(const DiffMonomial& m, const TruncatedSeries& c) {
    if (m.max_var() > n_vars_) fail(ErrorKind::VariableCountMismatch, "monomial variable exceeds arity");
    if (c.certified_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        TruncatedSeries s = it->second.add(c);
        if (s.certified_zero()) terms_.erase(it);
        else it->second = std::move(s);
    }
}

void DiffPolynomial::check_same_arity(const DiffPolynomial& o) const {
    if (n_vars_ != o.n_vars_) fail(ErrorKind::VariableCountMismatch, "differential polynomial arity mismatch");
}

DiffPolynomial DiffPolynomial::add(const DiffPolynomial& o) const {
    check_same_arity(o);
    DiffPolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

DiffPolynomial DiffPolynomial::negate() const {
    DiffPolynomial r(n_vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.negate());
    return r;
}

DiffPolynomial DiffPolynomial::sub(const DiffPolynomial& o) const {
    return add(o.negate());
}

DiffPolynomial DiffPolynomial::mul(const DiffPolynomial& o) const {
    check_same_arity(o);
    DiffPolynomial r(n_vars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1.times(m2), c1.mul(c2));
    return r;
}

DiffPolynomial DiffPolynomial::mul_series(const TruncatedSeries& c) const {
    DiffPolynomial r(n_vars_);
    for (const auto& [m, a] : terms_) r.add_term(m, a.mul(c));
    return r;
}

DiffPolynomial DiffPolynomial::times_monomial(const DiffMonomial& m) const {
    DiffPolynomial r(n_vars_);
    for (const auto& [m1, c] : terms_) r.add_term(m1.times(m), c);
    return r;
}

DiffPolynomial DiffPolynomial::t_shift_coefficients(std::int64_t k) const {
    DiffPolynomial r(n_vars_);
    for (const auto& [m, c] : terms_) r.add_term(m, c.t_shift(k));
    return r;
}

DiffPolynomial DiffPolynomial::derive(std::uint32_t k) const {
    DiffPolynomial p = *this;
    for (std::uint32_t step = 0; step < k; ++step) {
        DiffPolynomial r(n_vars_);
        for (const auto& [m, c] : p.terms_) {
            r.add_term(m, c.derive(1));
            for (const auto& [factor, dm] : m.derivative_terms())
                r.add_term(dm, c.mul_rational(Rational(static_cast<long>(factor))));
        }
        p = std::move(r);
    }
    return p;
}

TruncatedSeries DiffPolynomial::evaluate(std::span<const TruncatedSeries> phi) const {
    if (phi.size() != n_vars_)
        fail(ErrorKind::VariableCountMismatch,
             "evaluation tuple has " + std::to_string(phi.size()) + " entries, expected " + std::to_string(n_vars_));
    std::uint32_t min_window = 0;
    for (const TruncatedSeries& s : phi) min_window = min_window == 0 ? s.trunc_order() : std::min(min_window, s.trunc_order());
    if (terms_.empty()) return TruncatedSeries::zero(std::max(1u, min_window), true);

    TruncatedSeries acc = TruncatedSeries::zero(1, true);
    bool first = true;
    for (const auto& [m, c] : terms_) {
        TruncatedSeries term = c;
        for (const auto& e : m.entries()) {
            TruncatedSeries factor = phi[e.var - 1].derive(e.order);
            for (std::uint32_t i = 0; i < e.exp; ++i) term = term.mul(factor);
        }
        if (first) {
            acc = term;
            first = false;
        } else {
            acc = acc.add(term);
        }
    }
    return acc;
}

DiffPolynomial DiffPolynomial::scale_vars(
    const std::function<std::optional<TropValue>(std::uint32_t, std::uint32_t)>& w) const {
    DiffPolynomial r(n_vars_);
    for (const auto& [m, c] : terms_) {
        std::int64_t shift = 0;
        bool annihilated = false;
        for (const auto& e : m.entries()) {
            const auto weight = w(e.var, e.order);
            if (!weight)
                fail(ErrorKind::MissingWeight,
                     "no weight for x(" + std::to_string(e.var) + "," + std::to_string(e.order) + ")");
            if (weight->is_infinite()) {
                annihilated = true;
                break;
            }
            shift += static_cast<std::int64_t>(e.exp) * weight->finite_value();
        }
        if (annihilated) continue;
        r.add_term(m, c.t_shift(shift));
    }
    return r;
}

SeriesEq DiffPolynomial::compare(const DiffPolynomial& o) const {
    if (n_vars_ != o.n_vars_) return SeriesEq::Unequal;
    bool truncated = false;
    for (const auto& [m, c] : terms_) {
        auto it = o.terms_.find(m);
        if (it == o.terms_.end()) {
            if (!c.is_zero()) return SeriesEq::Unequal;
            truncated = true; // zero mod truncation matched against absent term
            continue;
        }
        switch (c.compare(it->second)) {
        case SeriesEq::Unequal: return SeriesEq::Unequal;
        case SeriesEq::EqualUpToTruncation: truncated = true; break;
        case SeriesEq::Equal: break;
        }
    }
    for (const auto& [m, c] : o.terms_) {
        if (terms_.contains(m)) continue;
        if (!c.is_zero()) return SeriesEq::Unequal;
        truncated = true;
    }
    return truncated ? SeriesEq::EqualUpToTruncation : SeriesEq::Equal;
}

std::string DiffPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        // A coefficient prints inline when it is a single signed t-term;
        // otherwise it is parenthesized, which the grammar accepts as a base.
        const auto supp = c.support();
        bool neg = false;
        std::string magnitude; // coefficient without sign, "" when it is 1
        if (supp.empty()) {
            magnitude = "0";
        } else if (supp.size() == 1) {
            Rational a = c.coeff(supp[0]);
            neg = a < 0;
            if (neg) a = -a;
            const std::uint32_t k = supp[0];
            std::ostringstream cs;
            if (k == 0) {
                cs << a.get_str();
            } else {
                if (a != 1 || (neg && first)) cs << a.get_str() << "*";
                cs << "t";
                if (k > 1) cs << "^" << k;
            }
            magnitude = cs.str();
            if (magnitude == "1" && !m.is_one()) magnitude.clear();
        } else {
            magnitude = "(" + c.to_string() + ")";
        }

        if (first) {
            first = false;
            // a leading minus is only grammatical on a rational factor
            if (neg) out << "-" << (magnitude.empty() ? "1" : magnitude);
            else if (!magnitude.empty()) out << magnitude;
            if (!m.is_one()) {
                if (neg || !magnitude.empty()) out << "*";
                out << m.to_string();
            }
            continue;
        }
        out << (neg ? " - " : " + ");
        if (m.is_one()) {
            out << (magnitude.empty() ? "1" : magnitude);
        } else {
            if (!magnitude.empty()) out << magnitude << "*";
            out << m.to_string();
        }
    }
    return out.str();
}

} // namespace tropdiff
