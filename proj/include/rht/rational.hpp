#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rht {

// Exact arbitrary-precision rational scalar. All coefficient arithmetic in the
// library goes through this type; no floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Renders "p/q" or "p"; used by both the table printer and the JSON writer.
inline std::string rat_str(const Rat& r) {
    return r.get_str();
}

}  // namespace rht
