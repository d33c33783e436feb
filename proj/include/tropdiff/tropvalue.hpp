#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace tropdiff {

// Element of the semiring (Z>=0 ∪ {∞}, min, +). Infinity absorbs under ⊙.
class TropValue {
  public:
    constexpr TropValue() : v_(kInf) {}
    constexpr explicit TropValue(std::int64_t v) : v_(v) {}

    static constexpr TropValue infinity() { return TropValue(); }
    static constexpr TropValue zero() { return TropValue(0); }

    constexpr bool is_infinite() const { return v_ == kInf; }
    constexpr std::int64_t finite_value() const { return v_; }

    // ⊕ = min
    friend constexpr TropValue min(TropValue a, TropValue b) { return a.v_ <= b.v_ ? a : b; }

    // ⊙ = +
    friend constexpr TropValue operator+(TropValue a, TropValue b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return TropValue(a.v_ + b.v_);
    }
    TropValue& operator+=(TropValue o) { return *this = *this + o; }

    friend constexpr TropValue operator*(std::int64_t n, TropValue a) {
        if (n == 0) return TropValue(0); // x^⊙0: the variable does not occur
        if (a.is_infinite()) return infinity();
        return TropValue(n * a.v_);
    }

    friend constexpr bool operator==(TropValue a, TropValue b) = default;
    friend constexpr auto operator<=>(TropValue a, TropValue b) { return a.v_ <=> b.v_; }

    std::string to_string() const { return is_infinite() ? "inf" : std::to_string(v_); }

  private:
    static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
    std::int64_t v_;
};

} // namespace tropdiff
