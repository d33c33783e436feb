#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tropdiff/diffalg.hpp"
#include "tropdiff/natset.hpp"
#include "tropdiff/series.hpp"
#include "tropdiff/tropvalue.hpp"

namespace tropdiff {

// Min-plus differential polynomial ⊕_M a_M x^(⊙M). Terms with coefficient ∞
// are absorbed on insertion.
class TropDiffPolynomial {
  public:
    explicit TropDiffPolynomial(std::uint32_t n_vars = 1) : n_vars_(n_vars) {}

    std::uint32_t n_vars() const { return n_vars_; }
    const std::map<DiffMonomial, TropValue>& terms() const { return terms_; }
    bool is_empty() const { return terms_.empty(); }

    // Keeps the minimum when the same monomial is inserted twice.
    void add_term(const DiffMonomial& m, TropValue a);

    friend bool operator==(const TropDiffPolynomial&, const TropDiffPolynomial&) = default;

    // Paper-style rendering: "min{1+3x12+x23, 2x13}".
    std::string to_string() const;

  private:
    std::uint32_t n_vars_;
    std::map<DiffMonomial, TropValue> terms_;
};

// trop(P): replace every coefficient by its valuation. UncertifiedValuation if
// some coefficient vanishes modulo its truncation without being exact.
TropDiffPolynomial tropicalize(const DiffPolynomial& p);

// Evaluation at a tuple of supports: min over M of a_M + Σ M_ij·Val_{S_i}(j).
TropValue trop_eval(const TropDiffPolynomial& phi, std::span<const NatSet> sets);

struct SolutionWitness {
    bool is_solution = false;
    bool infinite_value = false;
    TropValue value;
    std::vector<DiffMonomial> argmin; // all minimizing monomials (empty iff value ∞)
};

// Definition of a tropical solution: the minimum is attained at two distinct
// monomials, or the value is ∞. The witness carries the argmin set either way.
SolutionWitness is_tropical_solution(const TropDiffPolynomial& phi, std::span<const NatSet> sets);

struct SupportTuple {
    std::vector<NatSet> supports;        // finite sets observed in the windows
    std::vector<std::uint32_t> windows;  // truncation order per component
};

// Componentwise supports of a series tuple, with the observation windows.
SupportTuple trop_supp(std::span<const TruncatedSeries> phi);

} // namespace tropdiff
