#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace tropdiff {

// Exact rationals. GMP keeps values in lowest terms with positive denominator,
// which is exactly the invariant the rest of the library relies on.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) {
    return r.get_den() == 1;
}

// n! as an exact integer.
inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// (i+j)! / i! = (i+1)(i+2)...(i+j), the falling-product factor picked up by
// iterating the derivation d on t^(i+j).
inline Integer rising_product(unsigned long i, unsigned long j) {
    Integer f = 1;
    for (unsigned long m = i + 1; m <= i + j; ++m)
        f *= static_cast<long>(m);
    return f;
}

inline std::string to_string(const Rational& r) {
    return r.get_str();
}

} // namespace tropdiff
