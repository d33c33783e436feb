#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropdiff/diffalg.hpp"
#include "tropdiff/natset.hpp"
#include "tropdiff/tropical.hpp"

namespace tropdiff {

// Finite window onto P(Z>=0)^n: all canonical NatSet tuples with threshold
// <= t_max and period <= p_max, enumerated lexicographically.
struct CandidateUniverse {
    std::uint32_t n_vars = 1;
    std::uint32_t t_max = 0;
    std::uint32_t p_max = 0;

    std::vector<NatSet> atoms() const;
    std::vector<std::vector<NatSet>> tuples() const;

    friend bool operator==(const CandidateUniverse&, const CandidateUniverse&) = default;
};

struct CandidateRecord {
    std::vector<NatSet> tuple;
    bool is_solution = false;
    // When rejected: index of the first rejecting polynomial (in the solved
    // list) and its unique minimizing monomial.
    std::size_t failing_poly = 0;
    DiffMonomial unique_argmin;
};

struct SolutionReport {
    CandidateUniverse universe;
    int depth = -1; // derivative depth K for ideal mode, -1 for plain systems
    std::vector<std::vector<NatSet>> solutions;
    std::vector<CandidateRecord> records;
    // Origin (generator index, derivative order) per solved polynomial, only
    // in ideal mode.
    std::vector<std::pair<std::size_t, std::uint32_t>> origins;
    std::string note;

    bool contains(const std::vector<NatSet>& tuple) const;

    static SolutionReport from_sets(const CandidateUniverse& u, std::vector<std::vector<NatSet>> sets, int depth,
                                    std::string note);
};

// Exact solution set of a finite tropical system within the universe.
SolutionReport solve_system(const std::vector<TropDiffPolynomial>& polys, const CandidateUniverse& u);

// Solutions of {trop(d^k g) : g ∈ gens, 0 <= k <= depth} within the universe.
// An over-approximation of Sol(trop(I)) verified to the stated depth only.
SolutionReport solve_diff_ideal(const std::vector<DiffPolynomial>& gens, std::uint32_t depth,
                                const CandidateUniverse& u);

struct BasisDiscrepancy {
    std::vector<NatSet> tuple;
    bool extra = false; // satisfied every checked trop(d^k g) but is not in the reference
    // For missing tuples: the first (generator, derivative) that rejects it.
    std::size_t gen_index = 0;
    std::uint32_t k = 0;
    bool has_witness = false;
};

struct BasisCheckResult {
    bool is_basis = false;
    SolutionReport candidate;
    std::vector<BasisDiscrepancy> discrepancies;
};

// Tropical-differential-basis check at desk scale: does the candidate set cut
// out exactly the reference solution set within the universe?
BasisCheckResult check_basis(const std::vector<DiffPolynomial>& gens, const SolutionReport& reference,
                             std::uint32_t depth, const CandidateUniverse& u);

struct MonomialWitness {
    std::vector<NatSet> tuple;
    std::size_t gen_index = 0;
    std::uint32_t k = 0;
    std::string initial_part_text;
};

struct TheoremPpReport {
    CandidateUniverse universe;
    std::uint32_t depth = 0;
    std::uint32_t product_depth = 0;
    std::uint32_t match_window = 0;
    std::vector<std::vector<NatSet>> supports_of_solutions; // (1')
    std::vector<std::vector<NatSet>> tropical_solutions;    // (2')
    std::vector<std::vector<NatSet>> monomial_free;         // (3')
    std::vector<MonomialWitness> exclusions;                // monomial witnesses behind (3') rejections
    std::vector<std::vector<NatSet>> violations_1_in_2;     // members of (1') missing from (2')
    std::vector<std::vector<NatSet>> violations_2_in_3;     // members of (2') missing from (3')
    std::size_t unmatched_solutions = 0; // known solutions matching no candidate
    bool equal_1_2 = false;
    bool equal_2_3 = false;
    std::string note;
};

// Desk-scale three-set comparison: supports of known exact solutions, the
// tropical solution set to depth K, and monomial-freeness of initial parts
// over the witness family {x^M · d^k g : k <= K, deg M <= product_depth}.
TheoremPpReport theorem_pp_compare(const std::vector<DiffPolynomial>& gens,
                                   const std::vector<std::vector<TruncatedSeries>>& known_solutions,
                                   std::uint32_t depth, const CandidateUniverse& u, std::uint32_t product_depth);

} // namespace tropdiff
