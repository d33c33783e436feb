#include <doctest.h>

#include <set>

#include "support/gen.hpp"
#include "tropdiff/natset.hpp"

using namespace tropdiff;

namespace {

// membership oracle straight from the raw (finite, T, p, R) data
bool raw_member(std::uint32_t n, const std::vector<std::uint32_t>& finite, std::uint32_t t, std::uint32_t p,
                const std::vector<std::uint32_t>& residues) {
    for (std::uint32_t f : finite)
        if (f == n) return true;
    if (n >= t && p > 0)
        for (std::uint32_t r : residues)
            if (n % p == r % p) return true;
    return false;
}

} // namespace

TEST_CASE("canonical forms") {
    CHECK(NatSet::make({}, 0, 6, {0, 2, 4}) == NatSet::make({}, 0, 2, {0}));
    CHECK(NatSet::make({}, 0, 3, {0, 1, 2}) == NatSet::all_naturals());
    CHECK(NatSet::make({0, 1, 2}, 3, 1, {0}) == NatSet::all_naturals());
    CHECK(NatSet::make({}, 5, 0, {}).empty());
    CHECK(NatSet::finite({4, 2, 2}).threshold() == 5);
    CHECK(NatSet::finite({4, 2, 2}).transient() == std::vector<std::uint32_t>{2, 4});
    // finite elements beyond the declared threshold are absorbed correctly
    const NatSet mixed = NatSet::make({5}, 0, 3, {0, 2});
    CHECK(mixed.contains(5));
    CHECK(mixed.contains(6));
    CHECK_FALSE(mixed.contains(1));
}

TEST_CASE("canonicalization preserves membership") {
    tdtest::Rng rng(777001);
    for (int i = 0; i < 500; ++i) {
        const std::uint32_t t = tdtest::pick(rng, 0, 5);
        const std::uint32_t p = tdtest::pick(rng, 0, 4);
        std::vector<std::uint32_t> finite, residues;
        for (std::uint32_t n = 0; n < t + 3; ++n)
            if (tdtest::pick(rng, 0, 1)) finite.push_back(n);
        for (std::uint32_t r = 0; r < p; ++r)
            if (tdtest::pick(rng, 0, 1)) residues.push_back(r);
        const NatSet s = NatSet::make(finite, t, p, residues);
        // raw semantics: finite ∪ tail (finite entries may exceed t)
        for (std::uint32_t n = 0; n < 60; ++n)
            CHECK(s.contains(n) == raw_member(n, finite, t, p, residues));
        // canonical invariants
        for (std::uint32_t f : s.transient()) CHECK(f < s.threshold());
        if (s.period() == 0) CHECK(s.residues().empty());
        for (std::uint32_t r : s.residues()) CHECK(r < s.period());
    }
}

TEST_CASE("Val_S pinned values") {
    const NatSet s = NatSet::finite({0, 1, 2, 3, 7, 8});
    CHECK(s.val_at(4) == TropValue(3));
    CHECK(s.val_at(9).is_infinite());
    CHECK(NatSet().val_at(0).is_infinite());
    CHECK(NatSet().val_at(17).is_infinite());
    // S = Z>=0 minus {3k+1}: the least element >= 1 is 2
    const NatSet no3k1 = NatSet::make({}, 0, 3, {0, 2});
    CHECK(no3k1.val_at(1) == TropValue(1));
}

TEST_CASE("Val_S against a window oracle") {
    tdtest::Rng rng(777002);
    for (int i = 0; i < 500; ++i) {
        const NatSet s = tdtest::random_natset(rng, 5, 4);
        for (std::uint32_t j = 0; j < 12; ++j) {
            // within threshold + period + j the first tail element must appear
            TropValue expected = TropValue::infinity();
            for (std::uint32_t n = j; n < j + 24; ++n)
                if (s.contains(n)) {
                    expected = TropValue(static_cast<std::int64_t>(n) - j);
                    break;
                }
            CHECK(s.val_at(j) == expected);
        }
    }
}

TEST_CASE("Val_S determines membership") {
    tdtest::Rng rng(777003);
    for (int i = 0; i < 300; ++i) {
        const NatSet s = tdtest::random_natset(rng, 5, 4);
        for (std::uint32_t j = 0; j < 15; ++j) CHECK((s.val_at(j) == TropValue(0)) == s.contains(j));
    }
}

TEST_CASE("support shift") {
    CHECK(NatSet::finite({1, 2}).shifted_down(1) == NatSet::finite({0, 1}));
    CHECK(NatSet::make({}, 0, 3, {0}).shifted_down(1) == NatSet::make({}, 0, 3, {2}));
    CHECK(NatSet::finite({0}).shifted_down(1).empty());
}

TEST_CASE("shift consistency with Val") {
    tdtest::Rng rng(777004);
    for (int i = 0; i < 300; ++i) {
        const NatSet s = tdtest::random_natset(rng, 5, 4);
        const std::uint32_t k = tdtest::pick(rng, 0, 6);
        const NatSet shifted = s.shifted_down(k);
        for (std::uint32_t j = 0; j < 12; ++j) CHECK(shifted.val_at(j) == s.val_at(j + k));
    }
}

TEST_CASE("enumeration is canonical, deduplicated and bounded") {
    const std::vector<NatSet> atoms = enumerate_natsets(3, 3);
    std::set<NatSet> unique(atoms.begin(), atoms.end());
    CHECK(unique.size() == atoms.size());
    for (const NatSet& s : atoms) {
        CHECK(s.threshold() <= 3);
        CHECK(s.period() <= 3);
    }
    CHECK(std::is_sorted(atoms.begin(), atoms.end()));

    // distinct canonical sets with threshold <= 3, period <= 3 differ within
    // [0, 3 + lcm(1,2,3)) = [0, 9); dedupe membership patterns on a window
    std::set<std::vector<bool>> patterns;
    for (const NatSet& s : atoms) {
        std::vector<bool> pat;
        for (std::uint32_t n = 0; n < 16; ++n) pat.push_back(s.contains(n));
        patterns.insert(std::move(pat));
    }
    CHECK(patterns.size() == atoms.size());
}

TEST_CASE("formatting round-trips through the canonical text") {
    CHECK(NatSet::finite({2, 3}).to_string() == "{2,3}");
    CHECK(NatSet::make({}, 0, 3, {0, 2}).to_string() == "{}+per(0;3;0,2)");
    CHECK(NatSet().to_string() == "{}");
    CHECK(NatSet::all_naturals().to_string() == "{}+per(0;1;0)");
}
