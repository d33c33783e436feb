#pragma once

// Deterministic random generators shared by the property-style tests.

#include <cstdint>
#include <random>
#include <vector>

#include "tropdiff/diffalg.hpp"
#include "tropdiff/natset.hpp"
#include "tropdiff/rational.hpp"
#include "tropdiff/series.hpp"

namespace tdtest {

using Rng = std::mt19937;

inline std::uint32_t pick(Rng& rng, std::uint32_t lo, std::uint32_t hi) {
    return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
}

inline tropdiff::Rational random_rational(Rng& rng, bool allow_zero = true) {
    const long num = static_cast<long>(pick(rng, 0, 12)) - 6;
    if (!allow_zero && num == 0) return tropdiff::make_rational(1 + static_cast<long>(pick(rng, 0, 4)));
    const long den = 1 + static_cast<long>(pick(rng, 0, 3));
    return tropdiff::make_rational(num, den);
}

// Random exact series. `max_support` caps the top nonzero index so that
// products of generated coefficients stay inside their windows (keeping
// valuations certifiable in property tests).
inline tropdiff::TruncatedSeries random_series(Rng& rng, std::uint32_t window, bool nonzero = false,
                                               std::uint32_t max_support = 0) {
    const std::uint32_t top = max_support == 0 ? window - 1 : std::min(max_support, window - 1);
    std::vector<tropdiff::Rational> coeffs(window, tropdiff::Rational(0));
    for (std::uint32_t i = 0; i <= top; ++i)
        if (pick(rng, 0, 2) == 0) coeffs[i] = random_rational(rng);
    if (nonzero) {
        bool any = false;
        for (const auto& c : coeffs) any = any || c != 0;
        if (!any) coeffs[pick(rng, 0, top)] = random_rational(rng, false);
    }
    return tropdiff::TruncatedSeries::from_coefficients(std::move(coeffs), true);
}

inline tropdiff::DiffMonomial random_monomial(Rng& rng, std::uint32_t n_vars, std::uint32_t max_order,
                                              std::uint32_t max_entries = 2) {
    std::vector<tropdiff::DiffMonomial::Entry> entries;
    const std::uint32_t count = pick(rng, 0, max_entries);
    for (std::uint32_t i = 0; i < count; ++i)
        entries.push_back({pick(rng, 1, n_vars), pick(rng, 0, max_order), pick(rng, 1, 2)});
    return tropdiff::DiffMonomial::from_entries(std::move(entries));
}

inline tropdiff::DiffPolynomial random_dp(Rng& rng, std::uint32_t n_vars, std::uint32_t max_order,
                                          std::uint32_t max_terms, std::uint32_t window,
                                          std::uint32_t max_coeff_support = 0) {
    tropdiff::DiffPolynomial p(n_vars);
    const std::uint32_t terms = pick(rng, 1, max_terms);
    for (std::uint32_t i = 0; i < terms; ++i)
        p.add_term(random_monomial(rng, n_vars, max_order), random_series(rng, window, true, max_coeff_support));
    return p;
}

inline tropdiff::NatSet random_natset(Rng& rng, std::uint32_t t_max, std::uint32_t p_max) {
    const std::uint32_t t = pick(rng, 0, t_max);
    std::vector<std::uint32_t> finite;
    for (std::uint32_t i = 0; i < t; ++i)
        if (pick(rng, 0, 1)) finite.push_back(i);
    const std::uint32_t p = pick(rng, 0, p_max);
    std::vector<std::uint32_t> residues;
    for (std::uint32_t i = 0; i < p; ++i)
        if (pick(rng, 0, 1)) residues.push_back(i);
    return tropdiff::NatSet::make(std::move(finite), t, p, std::move(residues));
}

inline std::vector<tropdiff::NatSet> random_natset_tuple(Rng& rng, std::uint32_t n, std::uint32_t t_max,
                                                         std::uint32_t p_max) {
    std::vector<tropdiff::NatSet> out;
    for (std::uint32_t i = 0; i < n; ++i) out.push_back(random_natset(rng, t_max, p_max));
    return out;
}

} // namespace tdtest
