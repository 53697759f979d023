#pragma once

#include <gmpxx.h>

namespace treepat {

// Exact arbitrary-precision integer used for all counts, series coefficients
// and polynomial coefficients.
using Integer = mpz_class;

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace treepat
