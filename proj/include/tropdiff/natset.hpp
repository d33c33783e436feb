#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tropdiff/tropvalue.hpp"

namespace tropdiff {

// Eventually periodic subset of Z>=0:
//
//     transient ∪ { n >= threshold : n mod period ∈ residues }
//
// stored in canonical form: minimal threshold, then minimal period; period 0
// encodes a finite set (empty residues). Membership is O(1), Val_S is exact.
class NatSet {
  public:
    NatSet() = default; // empty set

    // Canonicalizes arbitrary data: finite elements may overlap the tail,
    // residues are reduced mod period.
    static NatSet make(std::vector<std::uint32_t> finite, std::uint32_t threshold, std::uint32_t period,
                       std::vector<std::uint32_t> residues);
    static NatSet finite(std::vector<std::uint32_t> elements);
    static NatSet all_naturals();

    bool contains(std::uint32_t n) const;
    bool is_finite() const { return period_ == 0; }
    bool empty() const { return transient_.empty() && period_ == 0; }

    std::uint32_t threshold() const { return threshold_; }
    std::uint32_t period() const { return period_; }
    const std::vector<std::uint32_t>& transient() const { return transient_; }
    const std::vector<std::uint32_t>& residues() const { return residues_; }

    // Val_S(j) = min{α ∈ S : α >= j} − j, ∞ when no such α exists.
    TropValue val_at(std::uint32_t j) const;

    // { i − j : i ∈ S, i >= j }
    NatSet shifted_down(std::uint32_t j) const;

    std::vector<std::uint32_t> elements_below(std::uint32_t bound) const;

    friend bool operator==(const NatSet&, const NatSet&) = default;
    friend auto operator<=>(const NatSet&, const NatSet&) = default;

    // Grammar form, e.g. "{0,1}" or "{1}+per(2;3;0,2)".
    std::string to_string() const;

  private:
    std::vector<std::uint32_t> transient_; // sorted, all < threshold_
    std::uint32_t threshold_ = 0;
    std::uint32_t period_ = 0;
    std::vector<std::uint32_t> residues_; // sorted, all < period_

    void normalize();
};

// All canonical NatSets with threshold <= t_max and period <= p_max, in
// lexicographic order of (threshold, period, transient, residues).
std::vector<NatSet> enumerate_natsets(std::uint32_t t_max, std::uint32_t p_max);

std::string natset_tuple_to_string(const std::vector<NatSet>& tuple);

} // namespace tropdiff
