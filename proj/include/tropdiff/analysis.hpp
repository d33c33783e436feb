#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tropdiff/diffalg.hpp"
#include "tropdiff/natset.hpp"
#include "tropdiff/rational.hpp"

namespace tropdiff {

// Polynomial in one indeterminate s over Q; models the "very general element"
// symbolically, so a minor is nonvanishing iff it is a nonzero polynomial.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(Rational c);
    static UniPoly variable(); // s
    static UniPoly from_coefficients(std::vector<Rational> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    UniPoly add(const UniPoly& o) const;
    UniPoly sub(const UniPoly& o) const;
    UniPoly negate() const;
    UniPoly mul(const UniPoly& o) const;
    // Exact division; InternalInvariant if the remainder is nonzero.
    UniPoly div_exact(const UniPoly& o) const;

    Rational eval(const Rational& s) const;

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    std::string to_string() const;

  private:
    std::vector<Rational> coeffs_; // no trailing zeros; empty = 0

    void strip();
};

// Dense matrix of UniPoly entries.
struct PolyMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<UniPoly> data;

    UniPoly& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const UniPoly& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// The (r+1)×(r−1) band matrix whose columns are shifted copies of (1, s, 1);
// its transpose against (x_{10},...,x_{1r}) produces d^i(x_{12}+s·x_{11}+x_{10}).
PolyMatrix band_matrix(std::uint32_t r);

// Determinant by fraction-free (Bareiss) elimination over Q[s].
UniPoly det_bareiss(const PolyMatrix& m);

struct MinorRecord {
    std::vector<std::uint32_t> rows; // selected row set
    UniPoly det;
};

struct MatroidCheckResult {
    bool uniform = false; // no vanishing maximal minor
    std::vector<MinorRecord> minors;
};

// All (r−1)×(r−1) minors of the band matrix; the truncation matroid is
// U_{2,r+1} iff none vanishes identically in s.
MatroidCheckResult check_uniform_matroid(std::uint32_t r);

// Exact rational extended by ∞; scalar of tropical vectors in T^{r+1}.
struct ExtRat {
    bool infinite = false;
    Rational value = 0;

    static ExtRat inf() { return {true, 0}; }
    static ExtRat of(Rational v) { return {false, std::move(v)}; }
    static ExtRat from(TropValue v) {
        return v.is_infinite() ? inf() : of(Rational(static_cast<long>(v.finite_value())));
    }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (a.infinite) return false;
        if (b.infinite) return true;
        return a.value < b.value;
    }
    std::string to_string() const { return infinite ? "inf" : value.get_str(); }
};

using TropVector = std::vector<ExtRat>;

// (Val_{S_i}(j) : 1 <= i <= n, 0 <= j <= r), the order-r truncation of Val.
TropVector val_embed(std::span<const NatSet> sets, std::uint32_t r);

// Bergman fan of U_{2,m}: all coordinates equal, or all but one equal with the
// exceptional one larger.
bool bergman_membership_u2(const TropVector& v);

// argmin_j ν(f_j) for a linear form f = Σ f_j x_{1j}.
std::set<std::uint32_t> supp_min(const DiffPolynomial& f);

struct SuppMinStabilization {
    bool stabilized = false;
    std::set<std::int64_t> offsets;                 // L with supp_min(d^k g) = {k + l : l ∈ L}
    std::uint32_t k_stable = 0;                     // first k of the stable window
    std::vector<std::set<std::uint32_t>> trace;     // supp_min(d^k g) for k = 0..k_max
};

// Observes supp_min along derivatives and reports the stable offset set.
SuppMinStabilization suppmin_stabilization(const DiffPolynomial& g, std::uint32_t k_max);

struct QabWitness {
    std::size_t gen_index = 0;
    std::uint32_t k = 0;
    std::uint32_t argmin = 0; // unique minimizing variable index
    std::set<std::uint32_t> supp_min_set;
};

// First f = d^k g whose tropicalisation has a unique minimizer at the point
// q_ab (coordinates 0 except 1 at slots a and b). Witnesses with a 3-element
// supp_min must have supp_min = {a, b, argmin}; asserted.
std::optional<QabWitness> qab_witness_search(const std::vector<DiffPolynomial>& gens, std::uint32_t a,
                                             std::uint32_t b, std::uint32_t depth);

struct PairCoverage {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::optional<QabWitness> witness;
};

struct CoverageReport {
    std::uint32_t r = 0;
    std::uint32_t depth = 0;
    std::vector<PairCoverage> pairs;
    std::size_t covered = 0;
    std::size_t uncovered = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> uncovered_pairs;
    std::set<std::set<std::uint32_t>> suppmin_3sets; // supp_min of members of G_r
    std::size_t g_r_size = 0;                        // |G_r| within k <= depth
    bool inequality_holds = false;                   // 3·|suppmin_3sets| >= covered
    bool counting_forces_failure = false;            // 3·|suppmin_3sets| < total pairs
};

// Audits every pair {a,b} ⊆ {0..r} with b−a >= 2 against the generators'
// derivatives through the given depth.
CoverageReport coverage_audit(const std::vector<DiffPolynomial>& gens, std::uint32_t r, std::uint32_t depth);

// Denef-Lipshitz series: coefficients 1/Π_{k=0}^{j}(k − phi2). NaturalPole when
// phi2 is a natural number below the truncation. The result is verified to
// annihilate t·x11 − (x20+t)·x10 − 1 and x21 modulo the honest window.
TruncatedSeries denef_series(const Rational& phi2, std::uint32_t order);

} // namespace tropdiff
