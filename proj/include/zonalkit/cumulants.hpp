#pragma once

#include <utility>
#include <vector>

#include "zonalkit/errors.hpp"
#include "zonalkit/multirect.hpp"
#include "zonalkit/pqpoly.hpp"
#include "zonalkit/rational.hpp"
#include "zonalkit/series.hpp"

namespace zonalkit {

// Content coordinates of a diagram profile: interlacing local minima x_0 <
// y_1 < x_1 < ... < y_m < x_m with sum(x) = sum(y) (balanced).
struct InterlacingCoords {
    std::vector<Rational> minima; // x_0 .. x_m
    std::vector<Rational> maxima; // y_1 .. y_m

    void validate() const {
        if (minima.size() != maxima.size() + 1)
            throw validation_error("need one more minimum than maxima");
        Rational balance = 0;
        for (size_t i = 0; i < maxima.size(); ++i) {
            if (!(minima[i] < maxima[i] && maxima[i] < minima[i + 1]))
                throw validation_error("interlacing violated");
            balance += minima[i] - maxima[i];
        }
        balance += minima.back();
        if (balance != 0) throw validation_error("interlacing coordinates are not balanced");
    }
};

// Interlacing coordinates of a canonical multirectangular diagram: with
// partial sums P_i = p_1 + ... + p_i, the minima are q_i - P_(i-1) together
// with -P_m and the maxima are q_i - P_i.
inline InterlacingCoords interlacing_of_multirect(const MultiRect& mr) {
    const auto& p = mr.row_counts();
    const auto& q = mr.row_lengths();
    InterlacingCoords c;
    Rational prefix = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        c.minima.push_back(q[i] - prefix);
        prefix += p[i];
        c.maxima.push_back(q[i] - prefix);
    }
    c.minima.push_back(-prefix);
    std::reverse(c.minima.begin(), c.minima.end());
    std::reverse(c.maxima.begin(), c.maxima.end());
    c.validate();
    return c;
}

// Probability measure with finite support; first moment zero for transition
// measures of balanced diagrams.
struct TransitionMeasure {
    std::vector<std::pair<Rational, Rational>> atoms; // (location, weight)
};

// Atom at each minimum x_k with weight prod_i (x_k - y_i) / prod_{j != k}
// (x_k - x_j); the partial-fraction expansion of prod(z-y)/prod(z-x).
inline TransitionMeasure transition_measure(const InterlacingCoords& c) {
    c.validate();
    TransitionMeasure tm;
    Rational total = 0, mean = 0;
    for (size_t k = 0; k < c.minima.size(); ++k) {
        Rational w = 1;
        for (const auto& y : c.maxima) w *= c.minima[k] - y;
        for (size_t j = 0; j < c.minima.size(); ++j)
            if (j != k) w /= c.minima[k] - c.minima[j];
        if (w <= 0) throw std::logic_error("transition measure weight must be positive");
        total += w;
        mean += w * c.minima[k];
        tm.atoms.emplace_back(c.minima[k], w);
    }
    if (total != 1) throw std::logic_error("transition measure weights must sum to one");
    if (mean != 0) throw std::logic_error("transition measure must be centered");
    return tm;
}

inline std::vector<Rational> measure_moments(const TransitionMeasure& tm, int n_max) {
    std::vector<Rational> m(n_max + 1, 0);
    m[0] = 1;
    for (const auto& [loc, w] : tm.atoms) {
        Rational power = w;
        for (int n = 1; n <= n_max; ++n) {
            power *= loc;
            m[n] += power;
        }
    }
    return m;
}

// Free cumulants R_1..R_n of a (generalized) diagram, through the transition
// measure of its interlacing coordinates. R_1 = 0 and R_2 = area always.
inline std::vector<Rational> free_cumulants(const MultiRect& mr, int n_max) {
    if (n_max < 1) throw validation_error("free cumulants need n_max >= 1");
    auto moments = measure_moments(transition_measure(interlacing_of_multirect(mr)), n_max);
    auto r = free_cumulants_from_moments(moments);
    if (r[1] != 0) throw std::logic_error("R_1 must vanish");
    if (n_max >= 2 && r[2] != mr.weight()) throw std::logic_error("R_2 must equal the area");
    return r;
}

inline std::vector<Rational> free_cumulants(const Partition& lambda, int n_max) {
    return free_cumulants(MultiRect::of_partition(lambda), n_max);
}

// R_k^(alpha) = alpha^-k R_k(alpha lambda), the alpha-anisotropic cumulant.
inline std::vector<Rational> anisotropic_cumulants(const MultiRect& mr, const Rational& alpha,
                                                   int n_max) {
    auto r = free_cumulants(mr.stretched(alpha), n_max);
    for (int k = 1; k <= n_max; ++k) r[k] *= pow_rational(alpha, -k);
    return r;
}

inline Rational anisotropic_cumulant(const MultiRect& mr, const Rational& alpha, int k) {
    return anisotropic_cumulants(mr, alpha, k)[k];
}

// ---------------------------------------------------------------------------
// Symbolic cumulants over m rectangle variables. The moment series of the
// transition measure is prod_i (1 - y_i w) / prod_j (1 - x_j w) with the
// linear forms x, y from interlacing_of_multirect, so the moments are
// polynomials in p, q and the cumulant recursion runs unchanged over the
// polynomial ring.
// ---------------------------------------------------------------------------

inline std::vector<PQPolynomial> symbolic_moments(int m, int n_max) {
    PQPolynomial prefix(m); // P_i
    std::vector<PQPolynomial> xs, ys;
    for (int i = 1; i <= m; ++i) {
        xs.push_back(PQPolynomial::q(m, i) - prefix);
        prefix += PQPolynomial::p(m, i);
        ys.push_back(PQPolynomial::q(m, i) - prefix);
    }
    xs.push_back(PQPolynomial(m) - prefix); // -P_m

    // series[t] = coefficient of w^t, starting from 1
    std::vector<PQPolynomial> series(n_max + 1, PQPolynomial(m));
    series[0] = PQPolynomial::constant(m, 1);
    for (const auto& y : ys) // multiply by (1 - y w)
        for (int t = n_max; t >= 1; --t) series[t] -= y * series[t - 1];
    for (const auto& x : xs) { // multiply by 1/(1 - x w) = sum x^t w^t
        std::vector<PQPolynomial> powers(n_max + 1, PQPolynomial::constant(m, 1));
        for (int t = 1; t <= n_max; ++t) powers[t] = powers[t - 1] * x;
        std::vector<PQPolynomial> next(n_max + 1, PQPolynomial(m));
        for (int t = 0; t <= n_max; ++t)
            for (int s = 0; s <= t; ++s) next[t] += series[s] * powers[t - s];
        series = std::move(next);
    }
    return series;
}

inline std::vector<PQPolynomial> symbolic_free_cumulants(int m, int n_max) {
    return free_cumulants_from_moments(symbolic_moments(m, n_max));
}

// Symbolic R_k^(alpha)(p x q) = alpha^-k R_k with q -> alpha q.
inline std::vector<PQPolynomial> symbolic_anisotropic_cumulants(int m, const Rational& alpha,
                                                                int n_max) {
    auto r = symbolic_free_cumulants(m, n_max);
    for (int k = 1; k <= n_max; ++k) r[k] = r[k].scaled_q(alpha) * pow_rational(alpha, -k);
    return r;
}

} // namespace zonalkit
