#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace conifold {

// All series and polynomial coefficients are exact integers. Every series in
// scope has unit constant term, so inversion never leaves the integers.
using Int = boost::multiprecision::cpp_int;

// Binomial coefficient C(n, k) for n, k >= 0; exact.
inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // divides exactly: r is C(n-k+i, i) after this step
    }
    return r;
}

} // namespace conifold
