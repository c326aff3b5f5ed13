#pragma once

#include <vector>

#include "zonalkit/errors.hpp"
#include "zonalkit/rational.hpp"

namespace zonalkit {

// Exact inverse of a square rational matrix by Gauss-Jordan elimination.
inline std::vector<std::vector<Rational>>
invert_rational_matrix(std::vector<std::vector<Rational>> a) {
    const size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw validation_error("matrix is singular");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Rational d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

enum class SolveStatus { ok, rank_deficient, inconsistent };

struct SolveResult {
    SolveStatus status = SolveStatus::ok;
    std::vector<Rational> solution; // valid when status == ok
};

// Exact solve of the (possibly overdetermined) system A x = b. Rows are
// scaled to integers, the forward pass is fraction-free (Bareiss) and back
// substitution recovers the rational solution. rank_deficient is reported
// when some column has no pivot; inconsistent when leftover rows do not
// vanish.
inline SolveResult solve_linear_system(const std::vector<std::vector<Rational>>& a,
                                       const std::vector<Rational>& b) {
    const size_t rows = a.size();
    const size_t cols = rows == 0 ? 0 : a[0].size();
    if (b.size() != rows) throw validation_error("right-hand side has wrong length");
    if (rows < cols) return {SolveStatus::rank_deficient, {}};

    // integer working matrix [A|b], rows scaled by the lcm of denominators
    std::vector<std::vector<BigInt>> w(rows, std::vector<BigInt>(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        BigInt l = 1;
        for (size_t j = 0; j < cols; ++j) l = boost::multiprecision::lcm(l, denominator(a[i][j]));
        l = boost::multiprecision::lcm(l, denominator(b[i]));
        for (size_t j = 0; j < cols; ++j)
            w[i][j] = numerator(a[i][j]) * (l / denominator(a[i][j]));
        w[i][cols] = numerator(b[i]) * (l / denominator(b[i]));
    }

    BigInt prev = 1;
    for (size_t col = 0; col < cols; ++col) {
        size_t pivot = col;
        while (pivot < rows && w[pivot][col] == 0) ++pivot;
        if (pivot == rows) return {SolveStatus::rank_deficient, {}};
        std::swap(w[pivot], w[col]);
        for (size_t i = col + 1; i < rows; ++i) {
            for (size_t j = col + 1; j <= cols; ++j)
                w[i][j] = (w[col][col] * w[i][j] - w[i][col] * w[col][j]) / prev;
            w[i][col] = 0;
        }
        prev = w[col][col];
    }

    for (size_t i = cols; i < rows; ++i)
        if (w[i][cols] != 0) return {SolveStatus::inconsistent, {}};

    SolveResult res;
    res.solution.assign(cols, 0);
    for (size_t i = cols; i-- > 0;) {
        Rational acc = Rational(w[i][cols]);
        for (size_t j = i + 1; j < cols; ++j) acc -= Rational(w[i][j]) * res.solution[j];
        res.solution[i] = acc / Rational(w[i][i]);
    }
    return res;
}

} // namespace zonalkit
