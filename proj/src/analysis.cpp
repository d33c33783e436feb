#include "tropdiff/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "tropdiff/errors.hpp"
#include "tropdiff/tropical.hpp"

namespace tropdiff {

// --- UniPoly ---

UniPoly::UniPoly(Rational c) {
    if (c != 0) coeffs_.push_back(std::move(c));
}

UniPoly UniPoly::variable() {
    UniPoly p;
    p.coeffs_ = {Rational(0), Rational(1)};
    return p;
}

UniPoly UniPoly::from_coefficients(std::vector<Rational> coeffs) {
    UniPoly p;
    p.coeffs_ = std::move(coeffs);
    p.strip();
    return p;
}

void UniPoly::strip() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::add(const UniPoly& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return from_coefficients(std::move(out));
}

UniPoly UniPoly::negate() const {
    UniPoly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

UniPoly UniPoly::sub(const UniPoly& o) const {
    return add(o.negate());
}

UniPoly UniPoly::mul(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return from_coefficients(std::move(out));
}

UniPoly UniPoly::div_exact(const UniPoly& o) const {
    if (o.is_zero()) fail(ErrorKind::InternalInvariant, "polynomial division by zero");
    std::vector<Rational> rem = coeffs_;
    std::vector<Rational> quot(rem.size() >= o.coeffs_.size() ? rem.size() - o.coeffs_.size() + 1 : 0, Rational(0));
    while (rem.size() >= o.coeffs_.size() && !(rem.size() == 1 && rem[0] == 0)) {
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rem.size() < o.coeffs_.size()) break;
        const std::size_t shift = rem.size() - o.coeffs_.size();
        const Rational factor = rem.back() / o.coeffs_.back();
        quot[shift] = factor;
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) rem[shift + i] -= factor * o.coeffs_[i];
    }
    for (const Rational& c : rem)
        if (c != 0) fail(ErrorKind::InternalInvariant, "inexact polynomial division");
    return from_coefficients(std::move(quot));
}

Rational UniPoly::eval(const Rational& s) const {
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * s + coeffs_[i];
    return acc;
}

std::string UniPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (i == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << "s";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

// --- band matrix and minors ---

PolyMatrix band_matrix(std::uint32_t r) {
    if (r < 2) fail(ErrorKind::BadDimension, "band matrix needs r >= 2");
    PolyMatrix m;
    m.rows = r + 1;
    m.cols = r - 1;
    m.data.assign(m.rows * m.cols, UniPoly());
    for (std::size_t c = 0; c < m.cols; ++c) {
        m.at(c, c) = UniPoly(Rational(1));
        m.at(c + 1, c) = UniPoly::variable();
        m.at(c + 2, c) = UniPoly(Rational(1));
    }
    return m;
}

UniPoly det_bareiss(const PolyMatrix& input) {
    if (input.rows != input.cols) fail(ErrorKind::BadDimension, "determinant of a non-square matrix");
    const std::size_t n = input.rows;
    if (n == 0) return UniPoly(Rational(1));
    PolyMatrix m = input;
    UniPoly prev(Rational(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
            if (pivot == n) return {}; // a zero column: determinant vanishes
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                UniPoly num = m.at(i, j).mul(m.at(k, k)).sub(m.at(i, k).mul(m.at(k, j)));
                m.at(i, j) = num.div_exact(prev);
            }
            m.at(i, k) = UniPoly();
        }
        prev = m.at(k, k);
    }
    UniPoly det = m.at(n - 1, n - 1);
    return sign < 0 ? det.negate() : det;
}

MatroidCheckResult check_uniform_matroid(std::uint32_t r) {
    const PolyMatrix a = band_matrix(r);
    const std::size_t k = a.cols; // minor size
    MatroidCheckResult result;
    result.uniform = true;

    std::vector<std::uint32_t> rows(k);
    for (std::size_t i = 0; i < k; ++i) rows[i] = static_cast<std::uint32_t>(i);
    while (true) {
        PolyMatrix sub;
        sub.rows = sub.cols = k;
        sub.data.assign(k * k, UniPoly());
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = a.at(rows[i], j);
        MinorRecord rec;
        rec.rows = rows;
        rec.det = det_bareiss(sub);
        if (rec.det.is_zero()) result.uniform = false;
        result.minors.push_back(std::move(rec));

        // next k-subset of {0..rows(a)-1}
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (rows[pos] + (k - pos) < a.rows) {
                ++rows[pos];
                for (std::size_t q = pos + 1; q < k; ++q) rows[q] = rows[q - 1] + 1;
                break;
            }
            if (pos == 0) return result;
        }
    }
}

// --- tropical vectors ---

TropVector val_embed(std::span<const NatSet> sets, std::uint32_t r) {
    TropVector v;
    v.reserve(sets.size() * (r + 1));
    for (const NatSet& s : sets)
        for (std::uint32_t j = 0; j <= r; ++j) v.push_back(ExtRat::from(s.val_at(j)));
    return v;
}

bool bergman_membership_u2(const TropVector& v) {
    if (v.empty()) return true;
    ExtRat b = v.front();
    for (const ExtRat& e : v)
        if (e < b) b = e;
    std::size_t exceptional = 0;
    for (const ExtRat& e : v)
        if (!(e == b)) ++exceptional;
    return exceptional <= 1;
}

// --- supp_min machinery ---

namespace {

// f = Σ f_j x_{1j}: extracts (j -> coefficient); NotLinearForm otherwise.
std::vector<std::pair<std::uint32_t, TruncatedSeries>> linear_form_coefficients(const DiffPolynomial& f) {
    std::vector<std::pair<std::uint32_t, TruncatedSeries>> out;
    for (const auto& [m, c] : f.terms()) {
        const auto& entries = m.entries();
        if (entries.size() != 1 || entries[0].exp != 1 || entries[0].var != 1)
            fail(ErrorKind::NotLinearForm, "expected a homogeneous linear form in x(1,j)");
        out.emplace_back(entries[0].order, c);
    }
    if (out.empty()) fail(ErrorKind::NotLinearForm, "the zero polynomial has no supp_min");
    return out;
}

} // namespace

std::set<std::uint32_t> supp_min(const DiffPolynomial& f) {
    TropValue best = TropValue::infinity();
    std::set<std::uint32_t> arg;
    for (const auto& [j, c] : linear_form_coefficients(f)) {
        const Valuation v = c.valuation();
        if (v.truncation_limited)
            fail(ErrorKind::UncertifiedValuation,
                 "coefficient of x(1," + std::to_string(j) + ") is zero modulo t^" + std::to_string(c.trunc_order()));
        if (v.value.is_infinite()) continue; // certified zero never stored, defensive
        if (v.value < best) {
            best = v.value;
            arg.clear();
        }
        if (v.value == best) arg.insert(j);
    }
    return arg;
}

SuppMinStabilization suppmin_stabilization(const DiffPolynomial& g, std::uint32_t k_max) {
    SuppMinStabilization out;
    DiffPolynomial d = g;
    for (std::uint32_t k = 0; k <= k_max; ++k) {
        out.trace.push_back(supp_min(d));
        if (k < k_max) d = d.derive(1);
    }
    // offsets observed at k_max, walked backwards while consistent
    std::set<std::int64_t> offsets;
    for (std::uint32_t j : out.trace.back()) offsets.insert(static_cast<std::int64_t>(j) - k_max);
    std::uint32_t k_stable = k_max;
    for (std::uint32_t k = k_max; k-- > 0;) {
        std::set<std::int64_t> cur;
        for (std::uint32_t j : out.trace[k]) cur.insert(static_cast<std::int64_t>(j) - k);
        if (cur != offsets) break;
        k_stable = k;
    }
    if (k_stable == k_max && k_max > 0) {
        out.stabilized = false; // a single observation is no window
        return out;
    }
    out.stabilized = true;
    out.offsets = std::move(offsets);
    out.k_stable = k_stable;
    return out;
}

std::optional<QabWitness> qab_witness_search(const std::vector<DiffPolynomial>& gens, std::uint32_t a,
                                             std::uint32_t b, std::uint32_t depth) {
    if (b < a || b - a < 2) fail(ErrorKind::BadPair, "q_ab needs b - a >= 2");
    for (std::size_t g = 0; g < gens.size(); ++g) {
        DiffPolynomial d = gens[g];
        for (std::uint32_t k = 0; k <= depth; ++k) {
            // trop(f)(q_ab) with q_j = 1 at j ∈ {a,b} and 0 elsewhere
            TropValue best = TropValue::infinity();
            std::uint32_t best_j = 0;
            std::size_t hits = 0;
            for (const auto& [j, c] : linear_form_coefficients(d)) {
                const Valuation v = c.valuation();
                if (v.truncation_limited)
                    fail(ErrorKind::UncertifiedValuation, "coefficient zero modulo truncation in witness search");
                TropValue term = v.value + TropValue((j == a || j == b) ? 1 : 0);
                if (term < best) {
                    best = term;
                    best_j = j;
                    hits = 1;
                } else if (term == best) {
                    ++hits;
                }
            }
            if (!best.is_infinite() && hits == 1) {
                QabWitness w;
                w.gen_index = g;
                w.k = k;
                w.argmin = best_j;
                w.supp_min_set = supp_min(d);
                if (w.supp_min_set.size() >= 3) {
                    const std::set<std::uint32_t> expected = {a, b, best_j};
                    if (w.supp_min_set != expected)
                        fail(ErrorKind::InternalInvariant,
                             "witness with |supp_min| >= 3 must have supp_min = {a, b, argmin}");
                }
                return w;
            }
            if (k < depth) d = d.derive(1);
        }
    }
    return std::nullopt;
}

CoverageReport coverage_audit(const std::vector<DiffPolynomial>& gens, std::uint32_t r, std::uint32_t depth) {
    CoverageReport report;
    report.r = r;
    report.depth = depth;
    for (std::uint32_t a = 0; a + 2 <= r; ++a) {
        for (std::uint32_t b = a + 2; b <= r; ++b) {
            PairCoverage pc;
            pc.a = a;
            pc.b = b;
            pc.witness = qab_witness_search(gens, a, b, depth);
            if (pc.witness) {
                report.covered += 1;
            } else {
                report.uncovered += 1;
                report.uncovered_pairs.emplace_back(a, b);
            }
            report.pairs.push_back(std::move(pc));
        }
    }
    // G_r: derivatives with |supp_min| = 3 meeting {0..r}
    for (const DiffPolynomial& g : gens) {
        DiffPolynomial d = g;
        for (std::uint32_t k = 0; k <= depth; ++k) {
            const std::set<std::uint32_t> sm = supp_min(d);
            if (sm.size() == 3 && *sm.begin() <= r) {
                report.g_r_size += 1;
                report.suppmin_3sets.insert(sm);
            }
            if (k < depth) d = d.derive(1);
        }
    }
    report.inequality_holds = 3 * report.suppmin_3sets.size() >= report.covered;
    const std::size_t total_pairs = report.covered + report.uncovered;
    report.counting_forces_failure = 3 * report.suppmin_3sets.size() < total_pairs;
    return report;
}

// --- Denef-Lipshitz series ---

TruncatedSeries denef_series(const Rational& phi2, std::uint32_t order) {
    if (order == 0) fail(ErrorKind::EmptyPrecision, "truncation order must be >= 1");
    if (is_integer(phi2) && phi2 >= 0 && phi2 < static_cast<long>(order))
        fail(ErrorKind::NaturalPole,
             "phi2 = " + phi2.get_str() + " hits the pole at k = " + phi2.get_num().get_str());
    std::vector<Rational> coeffs(order);
    Rational product = 1;
    for (std::uint32_t j = 0; j < order; ++j) {
        product *= Rational(static_cast<long>(j)) - phi2;
        coeffs[j] = 1 / product;
    }
    TruncatedSeries phi1 = TruncatedSeries::from_coefficients(std::move(coeffs), false);

    // Post-hoc verification against the defining ideal.
    const TruncatedSeries phi2_series = TruncatedSeries::constant(phi2, order);
    const std::vector<TruncatedSeries> phi = {phi1, phi2_series};
    DiffPolynomial eq1(2); // t·x11 − (x20 + t)·x10 − 1
    eq1.add_term(DiffMonomial::variable(1, 1), TruncatedSeries::t_term(Rational(1), 1, order));
    eq1.add_term(DiffMonomial::variable(1, 0).times(DiffMonomial::variable(2, 0)),
                 TruncatedSeries::constant(Rational(-1), order));
    eq1.add_term(DiffMonomial::variable(1, 0), TruncatedSeries::t_term(Rational(-1), 1, order));
    eq1.add_term(DiffMonomial::one(), TruncatedSeries::constant(Rational(-1), order));
    DiffPolynomial eq2(2);
    eq2.add_term(DiffMonomial::variable(2, 1), TruncatedSeries::constant(Rational(1), order));
    if (!eq1.evaluate(phi).is_zero() || !eq2.evaluate(phi).is_zero())
        fail(ErrorKind::InternalInvariant, "recurrence solution fails to annihilate the defining ideal");
    return phi1;
}

} // namespace tropdiff
