#pragma once

#include <vector>

#include "zonalkit/errors.hpp"

namespace zonalkit {

// Free moment-cumulant recursion. For the Cauchy transform
// G(z) = 1/z + M_1/z^2 + M_2/z^3 + ... the functional inverse is
// K(z) = 1/z + sum_n R_n z^(n-1), and the coefficients are tied by
//
//   M_n = sum_{j>=1} R_j * sum_{i_1+...+i_j = n-j, i_l >= 0} M_{i_1}...M_{i_j}
//
// which is solved for R_n order by order. Exact over any commutative ring;
// used with Rational and with PQPolynomial coefficients.

// moments[0] must be the ring's one; moments[1..N] are M_1..M_N.
// Returns R with R[0] = zero, R[1..N] = R_1..R_N.
template <class Ring>
std::vector<Ring> free_cumulants_from_moments(const std::vector<Ring>& moments) {
    if (moments.empty()) throw validation_error("moment sequence must contain M_0 = 1");
    const int n_max = static_cast<int>(moments.size()) - 1;
    const Ring one = moments[0];
    const Ring zero = one - one;

    // conv[j][t] = coefficient of x^t in (sum_s M_s x^s)^j
    std::vector<std::vector<Ring>> conv(n_max + 1, std::vector<Ring>(n_max + 1, zero));
    conv[0][0] = one;
    for (int j = 1; j <= n_max; ++j)
        for (int t = 0; t <= n_max; ++t)
            for (int s = 0; s <= t; ++s) conv[j][t] = conv[j][t] + conv[j - 1][t - s] * moments[s];

    std::vector<Ring> r(n_max + 1, zero);
    for (int n = 1; n <= n_max; ++n) {
        Ring acc = moments[n];
        for (int j = 1; j < n; ++j) acc = acc - r[j] * conv[j][n - j];
        r[n] = acc; // coefficient of R_n is conv[n][0] = 1
    }
    return r;
}

// Forward direction of the same recursion; handy for round-trip checks.
template <class Ring>
std::vector<Ring> moments_from_free_cumulants(const std::vector<Ring>& r, const Ring& one) {
    const int n_max = static_cast<int>(r.size()) - 1;
    const Ring zero = one - one;
    std::vector<Ring> moments(n_max + 1, zero);
    moments[0] = one;
    for (int n = 1; n <= n_max; ++n) {
        // conv over the moments known so far; entries up to x^(n-1) suffice
        std::vector<std::vector<Ring>> conv(n + 1, std::vector<Ring>(n, zero));
        conv[0][0] = one;
        for (int j = 1; j <= n; ++j)
            for (int t = 0; t < n; ++t)
                for (int s = 0; s <= t; ++s)
                    conv[j][t] = conv[j][t] + conv[j - 1][t - s] * moments[s];
        Ring acc = zero;
        for (int j = 1; j <= n; ++j) acc = acc + r[j] * conv[j][n - j];
        moments[n] = acc;
    }
    return moments;
}

} // namespace zonalkit
