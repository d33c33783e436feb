#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tropdiff/rational.hpp"
#include "tropdiff/tropvalue.hpp"

namespace tropdiff {

// Valuation of a truncated series. When every stored coefficient vanishes the
// value is ∞, but unless the series is exactly known the true valuation may
// merely be >= the truncation order; truncation_limited records that.
struct Valuation {
    TropValue value;
    bool truncation_limited = false;
};

enum class SeriesEq { Equal, EqualUpToTruncation, Unequal };

// Element of Q[[t]] known modulo t^N, N >= 1. Coefficient of t^i at index i.
// `exact` means the series is the stored polynomial on the nose (no unknown
// tail); it is set for literals and parsed inputs and propagated whenever an
// operation provably preserves full knowledge.
class TruncatedSeries {
  public:
    TruncatedSeries() : coeffs_(1), exact_(true) {}

    static TruncatedSeries zero(std::uint32_t order, bool exact = true);
    static TruncatedSeries constant(const Rational& c, std::uint32_t order);
    // c * t^k. If k >= order, every stored coefficient is zero and the result
    // is flagged inexact (the term itself lies beyond the window).
    static TruncatedSeries t_term(const Rational& c, std::uint32_t k, std::uint32_t order);
    static TruncatedSeries from_coefficients(std::vector<Rational> coeffs, bool exact);

    std::uint32_t trunc_order() const { return static_cast<std::uint32_t>(coeffs_.size()); }
    const Rational& coeff(std::uint32_t i) const { return coeffs_[i]; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool exact() const { return exact_; }

    bool is_zero() const;        // zero modulo the truncation
    bool certified_zero() const; // zero and exact

    Valuation valuation() const;
    std::vector<std::uint32_t> support() const;

    TruncatedSeries add(const TruncatedSeries& o) const;
    TruncatedSeries sub(const TruncatedSeries& o) const;
    TruncatedSeries negate() const;
    TruncatedSeries mul(const TruncatedSeries& o) const;
    TruncatedSeries mul_rational(const Rational& c) const;

    // j-fold formal derivative (iteration of d: t^i -> i t^(i-1)).
    TruncatedSeries derive(std::uint32_t j) const;

    // Multiplication by t^k; k may be negative when the low coefficients
    // vanish (NegativePowerOfT otherwise).
    TruncatedSeries t_shift(std::int64_t k) const;

    // Coefficient of t^(valuation); UncertifiedValuation when zero mod trunc.
    Rational leading_coefficient() const;

    SeriesEq compare(const TruncatedSeries& o) const;

    // With the given truncation window; surplus coefficients must be dropped
    // honestly. Requires order >= 1.
    TruncatedSeries truncated_to(std::uint32_t order) const;

    std::string to_string() const; // expression-grammar text, e.g. "1 + 2*t - 1/2*t^2"

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return a.add(b); }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a.sub(b); }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return a.mul(b); }

  private:
    std::vector<Rational> coeffs_;
    bool exact_;

    // index of the top nonzero stored coefficient, or -1
    std::int64_t top_nonzero() const;
};

} // namespace tropdiff
