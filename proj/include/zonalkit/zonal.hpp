#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "zonalkit/errors.hpp"
#include "zonalkit/linalg.hpp"
#include "zonalkit/loops.hpp"
#include "zonalkit/pair_partition.hpp"
#include "zonalkit/partition.hpp"
#include "zonalkit/psym.hpp"
#include "zonalkit/tableau.hpp"

namespace zonalkit {

namespace detail {

// Pair-partitions of [2n] preserving the rows of the tableau of 2*lambda:
// the product over rows of the pair-partitions of each row's label block
// (rows have even length and consecutive row-major labels).
inline std::vector<PairPartition> row_preserving_pairings(const Tableau2Lambda& t) {
    std::vector<std::vector<std::vector<std::pair<int, int>>>> per_row;
    int offset = 0;
    for (int r = 1; r <= t.shape.length(); ++r) {
        int len = t.shape.part(r);
        std::vector<std::vector<std::pair<int, int>>> choices;
        for (const auto& s : enumerate_pair_partitions(len / 2)) {
            std::vector<std::pair<int, int>> shifted;
            for (auto [a, b] : s.pairs()) shifted.emplace_back(a + offset, b + offset);
            choices.push_back(std::move(shifted));
        }
        per_row.push_back(std::move(choices));
        offset += len;
    }
    std::vector<PairPartition> out;
    std::vector<std::pair<int, int>> current;
    auto rec = [&](auto&& self, size_t row) -> void {
        if (row == per_row.size()) {
            out.push_back(PairPartition::from_pairs(current));
            return;
        }
        for (const auto& choice : per_row[row]) {
            current.insert(current.end(), choice.begin(), choice.end());
            self(self, row + 1);
            current.resize(current.size() - choice.size());
        }
    };
    rec(rec, 0);
    return out;
}

// Pair-partitions S1 such that S o S1 preserves every column of the tableau:
// exactly those matching column 2j-1 with column 2j, for every j. One
// matching per column pair, combined over all pairs.
inline std::vector<PairPartition> column_matching_pairings(const Tableau2Lambda& t) {
    const int n2 = t.box_count();
    int width = t.shape.part(1);
    std::vector<std::vector<int>> column_labels(width + 1);
    for (int l = 1; l <= n2; ++l) column_labels[t.col_of[l - 1]].push_back(l);

    std::vector<PairPartition> out;
    std::vector<std::pair<int, int>> current;
    auto rec = [&](auto&& self, int j) -> void {
        if (2 * j - 1 > width) {
            out.push_back(PairPartition::from_pairs(current));
            return;
        }
        const auto& left = column_labels[2 * j - 1];
        const auto& right = column_labels[2 * j];
        std::vector<int> perm(right.size());
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        size_t base = current.size();
        do {
            current.resize(base);
            for (size_t i = 0; i < left.size(); ++i)
                current.emplace_back(left[i], right[perm[i]]);
            self(self, j + 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
        current.resize(base);
    };
    rec(rec, 1);
    return out;
}

} // namespace detail

// Z_lambda in the power-sum basis, by summing (-1)^L(S,S1) p_type(S1,S2) over
// the admissible couples: S2 row-preserving and S o S1 column-preserving on
// the tableau of 2*lambda. Both families are built constructively, never by
// filtering the full set of pairings.
inline PSymmetricFunction zonal_polynomial(const Partition& lambda, int capacity = 6) {
    if (lambda.weight() > capacity)
        throw capacity_error("zonal polynomial capped at |lambda| = " + std::to_string(capacity) +
                             ", got " + std::to_string(lambda.weight()));
    if (lambda.empty()) {
        PSymmetricFunction one;
        one.add_term(Partition{}, 1);
        return one;
    }
    Tableau2Lambda t = tableau_2lambda(lambda);
    PairPartition s = t.neighbor_pairing;
    auto s1_choices = detail::column_matching_pairings(t);
    auto s2_choices = detail::row_preserving_pairings(t);
    PSymmetricFunction z;
    for (const auto& s1 : s1_choices) {
        int sign = loop_structure(s, s1).sign;
        for (const auto& s2 : s2_choices) z.add_term(loop_structure(s1, s2).type, sign);
    }
    return z;
}

// Independent construction of J^(2)_lambda = Z_lambda: Gram-Schmidt against
// the alpha = 2 inner product <p_rho, p_sigma> = delta z_rho 2^l(rho), run
// over an ascending linear extension of dominance order in the monomial
// basis, then normalized so the coefficient of p_(1^n) is 1. Shares nothing
// with the tableau route above.
inline PSymmetricFunction jack_alpha2_oracle(const Partition& lambda, int capacity = 8) {
    const int n = lambda.weight();
    if (n > capacity)
        throw capacity_error("jack oracle capped at |lambda| = " + std::to_string(capacity) +
                             ", got " + std::to_string(n));
    if (lambda.empty()) {
        PSymmetricFunction one;
        one.add_term(Partition{}, 1);
        return one;
    }

    // Ascending lexicographic order refines dominance: (1^n) first, (n) last.
    std::vector<Partition> parts = partitions_of(n);
    std::reverse(parts.begin(), parts.end());
    const size_t count = parts.size();
    std::map<Partition, size_t> index;
    for (size_t i = 0; i < count; ++i) index[parts[i]] = i;

    // p_rho in the monomial basis, by multiplying one power sum at a time:
    // [m_mu](p_r m_lambda) = (multiplicity of v+r in mu) where mu is lambda
    // with one part v (possibly v = 0) replaced by v + r.
    auto multiply_by_p = [&](const std::map<Partition, Rational>& f, int r) {
        std::map<Partition, Rational> out;
        for (const auto& [lam, c] : f) {
            std::vector<int> values{0};
            for (int v : lam.parts())
                if (v != values.back()) values.push_back(v);
            for (int v : values) {
                std::vector<int> ps = lam.parts();
                if (v == 0)
                    ps.push_back(r);
                else
                    *std::find(ps.begin(), ps.end(), v) += r;
                Partition mu(ps);
                out[mu] += c * mu.multiplicity(v + r);
            }
        }
        return out;
    };

    std::vector<std::vector<Rational>> p_to_m(count, std::vector<Rational>(count, 0));
    for (size_t i = 0; i < count; ++i) {
        std::map<Partition, Rational> f{{Partition{}, 1}};
        for (int r : parts[i].parts()) f = multiply_by_p(f, r);
        for (const auto& [mu, c] : f) p_to_m[i][index[mu]] = c;
    }
    auto m_to_p = invert_rational_matrix(p_to_m); // row nu: m_nu in p coordinates

    std::vector<Rational> gram_diag(count);
    for (size_t i = 0; i < count; ++i)
        gram_diag[i] = Rational(parts[i].z() * pow_bigint(2, parts[i].length()));
    auto inner = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
        Rational acc = 0;
        for (size_t r = 0; r < count; ++r) acc += x[r] * y[r] * gram_diag[r];
        return acc;
    };

    const size_t target = index.at(lambda);
    std::vector<std::vector<Rational>> basis; // orthogonal vectors so far, p coordinates
    std::vector<Rational> norms;
    for (size_t i = 0; i <= target; ++i) {
        std::vector<Rational> v = m_to_p[i];
        for (size_t j = 0; j < basis.size(); ++j) {
            Rational coef = inner(v, basis[j]) / norms[j];
            if (coef == 0) continue;
            for (size_t r = 0; r < count; ++r) v[r] -= coef * basis[j][r];
        }
        norms.push_back(inner(v, v));
        basis.push_back(std::move(v));
    }

    const std::vector<Rational>& g = basis[target];
    Rational anchor = g[index.at(Partition(std::vector<int>(n, 1)))];
    if (anchor == 0) throw std::logic_error("jack oracle: vanishing p_(1^n) coefficient");
    PSymmetricFunction j;
    for (size_t r = 0; r < count; ++r)
        if (g[r] != 0) j.add_term(parts[r], g[r] / anchor);
    return j;
}

// theta^(alpha)_rho(lambda): the coefficient of p_rho in J^(alpha)_lambda,
// for alpha = 2 directly from Z_lambda and for alpha = 1/2 through the
// conjugation duality theta^(1/2)_rho(lambda) = (-1/2)^(|rho|-l(rho))
// theta^(2)_rho(lambda').
inline Rational theta_coefficient(const Partition& lambda, const Partition& rho,
                                  const Rational& alpha) {
    if (rho.weight() != lambda.weight())
        throw validation_error("theta coefficient needs |rho| = |lambda|");
    if (alpha == 2) return zonal_polynomial(lambda).coefficient(rho);
    if (alpha == Rational(1, 2)) {
        Rational base = zonal_polynomial(lambda.conjugate()).coefficient(rho);
        return base * pow_rational(Rational(-1, 2), rho.weight() - rho.length());
    }
    throw validation_error("only alpha = 2 and alpha = 1/2 are supported");
}

} // namespace zonalkit
