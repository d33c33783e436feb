#pragma once

#include <span>
#include <vector>

#include "tropdiff/diffalg.hpp"
#include "tropdiff/natset.hpp"

namespace tropdiff {

// Q_S: substitute t^{Val_{S_i}(j)} x_{ij} and divide by t^{trop(Q)(S)}. The
// zero polynomial when trop(Q)(S) = ∞. The resulting coefficients all have
// valuation >= 0 with at least one of valuation exactly 0; both facts are
// asserted at runtime.
DiffPolynomial q_sub(const DiffPolynomial& q, std::span<const NatSet> sets);

// In_S(P): the residue-field polynomial spanned by the terms attaining
// trop(P)(S), each coefficient reduced to its leading rational.
ResiduePolynomial initial_part(const DiffPolynomial& p, std::span<const NatSet> sets);

// Hu–Gao variant: keeps one t^{ν(coefficient)} per surviving monomial, so that
// evaluation at t = 1 recovers initial_part (asserted).
DiffPolynomial initial_part_hu_gao(const DiffPolynomial& p, std::span<const NatSet> sets);

struct LiftPart {
    Rational alpha;        // nonzero
    DiffMonomial monomial; // x^M multiplier
    DiffPolynomial gen;    // G_M, trop(G_M)(S) finite
};

struct LiftResult {
    DiffPolynomial h;         // element of the ideal generated by the parts
    ResiduePolynomial target; // Σ alpha · x^M · In_S(G_M) = In_S(h), verified
};

// The lifting construction: h = Σ alpha · t^{A - A_M} · x^M · G_M with
// A_M = trop(G_M)(S) + Σ M_ij Val_{S_i}(j) and A = max A_M. The postcondition
// In_S(h) = target is verified at runtime.
LiftResult lift_initial_combination(const std::vector<LiftPart>& parts, std::span<const NatSet> sets);

} // namespace tropdiff
