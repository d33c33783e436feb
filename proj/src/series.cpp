#include "tropdiff/series.hpp"

#include <algorithm>
#include <sstream>

#include "tropdiff/errors.hpp"

namespace tropdiff {

TruncatedSeries TruncatedSeries::zero(std::uint32_t order, bool exact) {
    if (order == 0) fail(ErrorKind::EmptyPrecision, "truncation order must be >= 1");
    TruncatedSeries s;
    s.coeffs_.assign(order, Rational(0));
    s.exact_ = exact;
    return s;
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::uint32_t order) {
    TruncatedSeries s = zero(order, true);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::t_term(const Rational& c, std::uint32_t k, std::uint32_t order) {
    TruncatedSeries s = zero(order, true);
    if (c == 0) return s;
    if (k < order) {
        s.coeffs_[k] = c;
    } else {
        s.exact_ = false; // the term lives beyond the window
    }
    return s;
}

TruncatedSeries TruncatedSeries::from_coefficients(std::vector<Rational> coeffs, bool exact) {
    if (coeffs.empty()) fail(ErrorKind::EmptyPrecision, "truncation order must be >= 1");
    TruncatedSeries s;
    s.coeffs_ = std::move(coeffs);
    s.exact_ = exact;
    return s;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool TruncatedSeries::certified_zero() const {
    return exact_ && is_zero();
}

std::int64_t TruncatedSeries::top_nonzero() const {
    for (std::int64_t i = static_cast<std::int64_t>(coeffs_.size()) - 1; i >= 0; --i)
        if (coeffs_[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

Valuation TruncatedSeries::valuation() const {
    for (std::uint32_t i = 0; i < trunc_order(); ++i)
        if (coeffs_[i] != 0) return {TropValue(i), false};
    return {TropValue::infinity(), !exact_};
}

std::vector<std::uint32_t> TruncatedSeries::support() const {
    std::vector<std::uint32_t> s;
    for (std::uint32_t i = 0; i < trunc_order(); ++i)
        if (coeffs_[i] != 0) s.push_back(i);
    return s;
}

TruncatedSeries TruncatedSeries::add(const TruncatedSeries& o) const {
    const std::uint32_t n = std::min(trunc_order(), o.trunc_order());
    TruncatedSeries r = zero(n, false);
    for (std::uint32_t i = 0; i < n; ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    if (exact_ && o.exact_) {
        // exact iff the true sum has no support at or beyond the window
        bool tail_zero = true;
        const std::uint32_t m = std::max(trunc_order(), o.trunc_order());
        for (std::uint32_t i = n; i < m && tail_zero; ++i) {
            Rational c = 0;
            if (i < trunc_order()) c += coeffs_[i];
            if (i < o.trunc_order()) c += o.coeffs_[i];
            if (c != 0) tail_zero = false;
        }
        r.exact_ = tail_zero;
    }
    return r;
}

TruncatedSeries TruncatedSeries::negate() const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

TruncatedSeries TruncatedSeries::sub(const TruncatedSeries& o) const {
    return add(o.negate());
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& o) const {
    const std::uint32_t n = std::min(trunc_order(), o.trunc_order());
    TruncatedSeries r = zero(n, false);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::uint32_t j = 0; i + j < n && j < o.trunc_order(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    if (exact_ && o.exact_) {
        const std::int64_t da = top_nonzero(), db = o.top_nonzero();
        r.exact_ = (da < 0 || db < 0 || da + db < static_cast<std::int64_t>(n));
    }
    return r;
}

TruncatedSeries TruncatedSeries::mul_rational(const Rational& c) const {
    if (c == 0) return zero(trunc_order(), true);
    TruncatedSeries r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

TruncatedSeries TruncatedSeries::derive(std::uint32_t j) const {
    if (j == 0) return *this;
    const std::uint32_t n = trunc_order();
    if (j >= n) {
        if (!exact_) {
            fail(ErrorKind::EmptyPrecision,
                 "derivative of order " + std::to_string(j) + " exhausts truncation t^" + std::to_string(n));
        }
        // fully known polynomial of degree < n: the j-fold derivative is zero
        return zero(1, true);
    }
    TruncatedSeries r = zero(n - j, exact_);
    for (std::uint32_t i = 0; i + j < n; ++i) {
        if (coeffs_[i + j] == 0) continue;
        Rational f(rising_product(i, j));
        r.coeffs_[i] = f * coeffs_[i + j];
    }
    return r;
}

TruncatedSeries TruncatedSeries::t_shift(std::int64_t k) const {
    const std::int64_t n = trunc_order();
    if (k == 0) return *this;
    if (k > 0) {
        TruncatedSeries r = zero(static_cast<std::uint32_t>(n + k), exact_);
        for (std::int64_t i = 0; i < n; ++i) r.coeffs_[static_cast<std::size_t>(i + k)] = coeffs_[static_cast<std::size_t>(i)];
        return r;
    }
    const std::int64_t drop = -k;
    for (std::int64_t i = 0; i < std::min(drop, n); ++i) {
        if (coeffs_[static_cast<std::size_t>(i)] != 0)
            fail(ErrorKind::NegativePowerOfT,
                 "t^" + std::to_string(k) + " shift hits nonzero coefficient at t^" + std::to_string(i));
    }
    if (n - drop < 1) {
        if (exact_) return zero(1, true); // everything stored was zero
        fail(ErrorKind::EmptyPrecision, "t-shift by " + std::to_string(k) + " exhausts truncation t^" + std::to_string(n));
    }
    TruncatedSeries r = zero(static_cast<std::uint32_t>(n - drop), exact_);
    for (std::int64_t i = drop; i < n; ++i) r.coeffs_[static_cast<std::size_t>(i - drop)] = coeffs_[static_cast<std::size_t>(i)];
    return r;
}

Rational TruncatedSeries::leading_coefficient() const {
    for (std::uint32_t i = 0; i < trunc_order(); ++i)
        if (coeffs_[i] != 0) return coeffs_[i];
    fail(ErrorKind::UncertifiedValuation, "series is zero modulo t^" + std::to_string(trunc_order()));
}

SeriesEq TruncatedSeries::compare(const TruncatedSeries& o) const {
    const std::uint32_t n = std::min(trunc_order(), o.trunc_order());
    for (std::uint32_t i = 0; i < n; ++i)
        if (coeffs_[i] != o.coeffs_[i]) return SeriesEq::Unequal;
    if (exact_ && o.exact_) {
        const std::uint32_t m = std::max(trunc_order(), o.trunc_order());
        for (std::uint32_t i = n; i < m; ++i) {
            const Rational& a = i < trunc_order() ? coeffs_[i] : Rational(0);
            const Rational& b = i < o.trunc_order() ? o.coeffs_[i] : Rational(0);
            if (a != b) return SeriesEq::Unequal;
        }
        return SeriesEq::Equal;
    }
    return SeriesEq::EqualUpToTruncation;
}

TruncatedSeries TruncatedSeries::truncated_to(std::uint32_t order) const {
    if (order == 0) fail(ErrorKind::EmptyPrecision, "truncation order must be >= 1");
    if (order == trunc_order()) return *this;
    TruncatedSeries r = zero(order, false);
    const std::uint32_t n = std::min(order, trunc_order());
    for (std::uint32_t i = 0; i < n; ++i) r.coeffs_[i] = coeffs_[i];
    if (order < trunc_order()) {
        r.exact_ = exact_ && top_nonzero() < static_cast<std::int64_t>(order);
    } else {
        r.exact_ = false; // cannot widen knowledge
    }
    return r;
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::uint32_t i = 0; i < trunc_order(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        bool lead_minus = false;
        if (first) {
            lead_minus = neg; // a leading minus must ride on a rational factor
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (i == 0) {
            if (lead_minus) out << "-";
            out << a.get_str();
        } else {
            if (a != 1 || lead_minus) out << (lead_minus ? "-" : "") << a.get_str() << "*";
            out << "t";
            if (i > 1) out << "^" << i;
        }
    }
    if (first) out << "0";
    return out.str();
}

} // namespace tropdiff
