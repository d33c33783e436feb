#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropdiff/series.hpp"
#include "tropdiff/tropvalue.hpp"

namespace tropdiff {

// Product of differential variables x_{ij}^e, stored sparsely and sorted by
// (variable, derivative order). The empty monomial is 1.
class DiffMonomial {
  public:
    struct Entry {
        std::uint32_t var;   // 1-based
        std::uint32_t order; // j >= 0
        std::uint32_t exp;   // > 0
        friend bool operator==(const Entry&, const Entry&) = default;
        friend auto operator<=>(const Entry&, const Entry&) = default;
    };

    DiffMonomial() = default;
    static DiffMonomial one() { return {}; }
    static DiffMonomial variable(std::uint32_t var, std::uint32_t order, std::uint32_t exp = 1);
    static DiffMonomial from_entries(std::vector<Entry> entries); // merges duplicates

    bool is_one() const { return entries_.empty(); }
    const std::vector<Entry>& entries() const { return entries_; }
    std::uint32_t exponent(std::uint32_t var, std::uint32_t order) const;
    std::uint32_t degree() const;
    std::uint32_t order() const; // max j, 0 for the empty monomial
    std::uint32_t max_var() const;

    DiffMonomial times(const DiffMonomial& o) const;
    DiffMonomial pow(std::uint32_t e) const;

    // Leibniz expansion of d(x^M): list of (integer factor, monomial).
    std::vector<std::pair<std::uint32_t, DiffMonomial>> derivative_terms() const;

    friend bool operator==(const DiffMonomial&, const DiffMonomial&) = default;
    friend auto operator<=>(const DiffMonomial&, const DiffMonomial&) = default;

    std::string to_string() const;      // grammar form: x(1,2)^3*x(2,3)
    std::string to_compact_string() const; // paper form: x12^3*x23

  private:
    std::vector<Entry> entries_;
};

// Polynomial over K with rational coefficients in the differential variables;
// the home of S-initial parts.
class ResiduePolynomial {
  public:
    explicit ResiduePolynomial(std::uint32_t n_vars = 1) : n_vars_(n_vars) {}

    std::uint32_t n_vars() const { return n_vars_; }
    const std::map<DiffMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const DiffMonomial& m, const Rational& c);

    ResiduePolynomial add(const ResiduePolynomial& o) const;
    ResiduePolynomial mul(const ResiduePolynomial& o) const;
    ResiduePolynomial scale(const Rational& c) const;
    ResiduePolynomial times_monomial(const DiffMonomial& m) const;

    friend bool operator==(const ResiduePolynomial&, const ResiduePolynomial&) = default;

    std::string to_string() const;

  private:
    std::uint32_t n_vars_;
    std::map<DiffMonomial, Rational> terms_;
};

// True iff the polynomial has exactly one (nonzero) term; zero is not a
// monomial.
bool rp_is_monomial(const ResiduePolynomial& g);

// Differential polynomial over truncated power series coefficients.
// Coefficients that are certified zero are dropped; coefficients that vanish
// only modulo their truncation are kept (their flag blocks tropicalisation).
class DiffPolynomial {
  public:
    explicit DiffPolynomial(std::uint32_t n_vars = 1) : n_vars_(n_vars) {}

    static DiffPolynomial from_series(const TruncatedSeries& c, std::uint32_t n_vars = 1);
    static DiffPolynomial monomial(const DiffMonomial& m, const TruncatedSeries& c, std::uint32_t n_vars);

    std::uint32_t n_vars() const { return n_vars_; }
    const std::map<DiffMonomial, TruncatedSeries>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::uint32_t order() const; // max derivative order occurring

    // Returns a copy declared over n >= max occurring variable index.
    DiffPolynomial with_n_vars(std::uint32_t n) const;

    void add_term(const DiffMonomial& m, const TruncatedSeries& c);

    DiffPolynomial add(const DiffPolynomial& o) const;
    DiffPolynomial sub(const DiffPolynomial& o) const;
    DiffPolynomial negate() const;
    DiffPolynomial mul(const DiffPolynomial& o) const;
    DiffPolynomial mul_series(const TruncatedSeries& c) const;
    DiffPolynomial times_monomial(const DiffMonomial& m) const;

    // Multiplication by t^k applied coefficient-wise (window-preserving, via
    // the series t-shift). k < 0 requires divisibility of every coefficient.
    DiffPolynomial t_shift_coefficients(std::int64_t k) const;

    // k-fold extended derivation: d acts on coefficients via the series
    // derivative and on variables via d(x_{ij}) = x_{i(j+1)}.
    DiffPolynomial derive(std::uint32_t k = 1) const;

    // Evaluation at an n-tuple of series, substituting d^j(phi_i) for x_{ij}.
    TruncatedSeries evaluate(std::span<const TruncatedSeries> phi) const;

    // Substitutes t^{w(i,j)} x_{ij}. Monomials touching a variable of infinite
    // weight are annihilated. Weights must cover every occurring variable.
    DiffPolynomial scale_vars(const std::function<std::optional<TropValue>(std::uint32_t, std::uint32_t)>& w) const;

    // Structural comparison; EqualUpToTruncation when some coefficient pair
    // agrees only as far as the windows allow.
    SeriesEq compare(const DiffPolynomial& o) const;

    std::string to_string() const;

    friend DiffPolynomial operator+(const DiffPolynomial& a, const DiffPolynomial& b) { return a.add(b); }
    friend DiffPolynomial operator-(const DiffPolynomial& a, const DiffPolynomial& b) { return a.sub(b); }
    friend DiffPolynomial operator*(const DiffPolynomial& a, const DiffPolynomial& b) { return a.mul(b); }

  private:
    std::uint32_t n_vars_;
    std::map<DiffMonomial, TruncatedSeries> terms_;

    void check_same_arity(const DiffPolynomial& o) const;
};

} // namespace tropdiff
