#include "tropdiff/natset.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tropdiff/errors.hpp"

namespace tropdiff {

namespace {

bool in_tail(std::uint32_t n, std::uint32_t threshold, std::uint32_t period,
             const std::vector<std::uint32_t>& residues) {
    if (period == 0 || n < threshold) return false;
    return std::binary_search(residues.begin(), residues.end(), n % period);
}

} // namespace

NatSet NatSet::make(std::vector<std::uint32_t> finite, std::uint32_t threshold, std::uint32_t period,
                    std::vector<std::uint32_t> residues) {
    NatSet s;
    s.threshold_ = threshold;
    s.period_ = period;
    for (auto& r : residues)
        if (period > 0) r %= period;
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    s.residues_ = std::move(residues);
    std::sort(finite.begin(), finite.end());
    finite.erase(std::unique(finite.begin(), finite.end()), finite.end());
    s.transient_ = std::move(finite);
    s.normalize();
    return s;
}

NatSet NatSet::finite(std::vector<std::uint32_t> elements) {
    return make(std::move(elements), 0, 0, {});
}

NatSet NatSet::all_naturals() {
    return make({}, 0, 1, {0});
}

void NatSet::normalize() {
    if (residues_.empty()) period_ = 0;
    if (period_ == 0) {
        threshold_ = transient_.empty() ? 0 : transient_.back() + 1;
        residues_.clear();
        return;
    }
    // Lift transient elements at or beyond the threshold into an explicit
    // prefix so the representation is uniform before minimizing.
    std::uint32_t t0 = threshold_;
    for (std::uint32_t f : transient_)
        if (f >= t0 && !in_tail(f, threshold_, period_, residues_)) t0 = f + 1;
    if (t0 > threshold_) {
        std::vector<std::uint32_t> prefix;
        for (std::uint32_t n = 0; n < t0; ++n)
            if (std::binary_search(transient_.begin(), transient_.end(), n) ||
                in_tail(n, threshold_, period_, residues_))
                prefix.push_back(n);
        transient_ = std::move(prefix);
        threshold_ = t0;
    } else {
        transient_.erase(std::remove_if(transient_.begin(), transient_.end(),
                                        [&](std::uint32_t f) { return f >= threshold_; }),
                         transient_.end());
    }

    // Minimal period: the divisors of the current period that leave the
    // residue indicator invariant under shift.
    for (std::uint32_t d = 1; d < period_; ++d) {
        if (period_ % d != 0) continue;
        bool ok = true;
        for (std::uint32_t r = 0; r < period_ && ok; ++r) {
            const bool a = std::binary_search(residues_.begin(), residues_.end(), r);
            const bool b = std::binary_search(residues_.begin(), residues_.end(), (r + d) % period_);
            if (a != b) ok = false;
        }
        if (ok) {
            std::vector<std::uint32_t> reduced;
            for (std::uint32_t r : residues_)
                if (r < d) reduced.push_back(r);
            residues_ = std::move(reduced);
            period_ = d;
            break;
        }
    }

    // Minimal threshold for that period.
    while (threshold_ > 0) {
        const std::uint32_t m = threshold_ - 1;
        const bool actual = std::binary_search(transient_.begin(), transient_.end(), m);
        const bool predicted = std::binary_search(residues_.begin(), residues_.end(), m % period_);
        if (actual != predicted) break;
        threshold_ = m;
        if (actual) transient_.erase(std::find(transient_.begin(), transient_.end(), m));
    }
}

bool NatSet::contains(std::uint32_t n) const {
    if (n < threshold_) return std::binary_search(transient_.begin(), transient_.end(), n);
    return in_tail(n, threshold_, period_, residues_);
}

TropValue NatSet::val_at(std::uint32_t j) const {
    for (std::uint32_t f : transient_)
        if (f >= j) return TropValue(static_cast<std::int64_t>(f) - j);
    if (period_ == 0) return TropValue::infinity();
    const std::uint32_t start = std::max(j, threshold_);
    for (std::uint32_t n = start; n < start + period_; ++n)
        if (std::binary_search(residues_.begin(), residues_.end(), n % period_))
            return TropValue(static_cast<std::int64_t>(n) - j);
    return TropValue::infinity();
}

NatSet NatSet::shifted_down(std::uint32_t j) const {
    std::vector<std::uint32_t> finite;
    for (std::uint32_t f : transient_)
        if (f >= j) finite.push_back(f - j);
    if (period_ == 0) return make(std::move(finite), 0, 0, {});
    const std::uint32_t t = threshold_ > j ? threshold_ - j : 0;
    // For m >= t we have m + j >= threshold, so membership is periodic with
    // the shifted residues; below t only original transient elements occur.
    std::vector<std::uint32_t> res;
    for (std::uint32_t r : residues_)
        res.push_back((r + period_ - (j % period_)) % period_);
    // Elements between t and the old threshold shifted down come from the
    // transient part already collected; elements of the tail below t: none,
    // because t = max(threshold - j, 0) and tail members are >= threshold.
    return make(std::move(finite), t, period_, std::move(res));
}

std::vector<std::uint32_t> NatSet::elements_below(std::uint32_t bound) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t n = 0; n < bound; ++n)
        if (contains(n)) out.push_back(n);
    return out;
}

std::string NatSet::to_string() const {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < transient_.size(); ++i) {
        if (i) out << ",";
        out << transient_[i];
    }
    out << "}";
    if (period_ > 0) {
        out << "+per(" << threshold_ << ";" << period_ << ";";
        for (std::size_t i = 0; i < residues_.size(); ++i) {
            if (i) out << ",";
            out << residues_[i];
        }
        out << ")";
    }
    return out.str();
}

std::vector<NatSet> enumerate_natsets(std::uint32_t t_max, std::uint32_t p_max) {
    std::set<NatSet> seen;
    for (std::uint32_t t = 0; t <= t_max; ++t) {
        for (std::uint32_t bits = 0; bits < (1u << t); ++bits) {
            std::vector<std::uint32_t> finite;
            for (std::uint32_t i = 0; i < t; ++i)
                if (bits & (1u << i)) finite.push_back(i);
            for (std::uint32_t p = 0; p <= p_max; ++p) {
                const std::uint32_t rmax = p == 0 ? 1u : (1u << p);
                for (std::uint32_t rbits = 0; rbits < rmax; ++rbits) {
                    std::vector<std::uint32_t> res;
                    for (std::uint32_t i = 0; i < p; ++i)
                        if (rbits & (1u << i)) res.push_back(i);
                    if (p > 0 && res.empty()) continue; // same set as p = 0
                    seen.insert(NatSet::make(finite, t, p, res));
                }
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::string natset_tuple_to_string(const std::vector<NatSet>& tuple) {
    if (tuple.size() == 1) return tuple.front().to_string();
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out << ", ";
        out << tuple[i].to_string();
    }
    out << ")";
    return out.str();
}

} // namespace tropdiff
