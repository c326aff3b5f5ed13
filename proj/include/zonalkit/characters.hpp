#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zonalkit/errors.hpp"
#include "zonalkit/loops.hpp"
#include "zonalkit/multirect.hpp"
#include "zonalkit/pair_partition.hpp"
#include "zonalkit/parallel.hpp"
#include "zonalkit/partition.hpp"
#include "zonalkit/pqpoly.hpp"
#include "zonalkit/triplet_graph.hpp"
#include "zonalkit/zonal.hpp"

namespace zonalkit {

// ---------------------------------------------------------------------------
// N functions: counts of box placements constrained by a triplet of
// pair-partitions. N1 places the pairs of S0 into lambda with S1 forcing
// columns and S2 forcing rows; N2 places all labels into 2*lambda with S0
// mapping to neighboring boxes. Both reduce to a function of the triplet
// graph, which is how the character formulas evaluate them.
// ---------------------------------------------------------------------------

// Exhaustive count of the functions f with f(l) = f(S0(l)), f(l) ~column~
// f(S1(l)) and f(l) ~row~ f(S2(l)). Reference oracle only.
inline BigInt n1_bruteforce(const PairPartition& s0, const PairPartition& s1,
                            const PairPartition& s2, const Partition& lambda,
                            std::uint64_t guard = 10'000'000) {
    if (s0.size() != s1.size() || s0.size() != s2.size())
        throw validation_error("triplet size mismatch");
    const int k = s0.pair_count();
    std::vector<std::pair<int, int>> boxes; // (row, col), 1-based
    for (int r = 1; r <= lambda.length(); ++r)
        for (int c = 1; c <= lambda.part(r); ++c) boxes.emplace_back(r, c);
    const std::uint64_t nboxes = boxes.size();
    if (nboxes == 0) return k == 0 ? 1 : 0;

    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
        if (total > guard / nboxes + 1) throw capacity_error("n1 brute force beyond guard");
        total *= nboxes;
    }
    if (total > guard) throw capacity_error("n1 brute force beyond guard");

    std::vector<int> rep_of_label(s0.size()); // label -> index of its S0 pair
    std::vector<int> reps;
    for (int i = 0; i < s0.size(); ++i)
        if (s0(i) > i) {
            rep_of_label[i] = rep_of_label[s0(i)] = static_cast<int>(reps.size());
            reps.push_back(i);
        }

    BigInt count = 0;
    std::vector<std::uint32_t> choice(k, 0);
    for (std::uint64_t it = 0; it < total; ++it) {
        std::uint64_t x = it;
        for (int i = 0; i < k; ++i) {
            choice[i] = static_cast<std::uint32_t>(x % nboxes);
            x /= nboxes;
        }
        bool ok = true;
        for (int l = 0; l < s0.size() && ok; ++l) {
            const auto& mine = boxes[choice[rep_of_label[l]]];
            ok = boxes[choice[rep_of_label[s1(l)]]].second == mine.second && // same column
                 boxes[choice[rep_of_label[s2(l)]]].first == mine.first;     // same row
        }
        if (ok) ++count;
    }
    return count;
}

// Exhaustive count of functions into 2*lambda with S0 pairs on neighboring
// boxes, S0 o S1 forcing columns and S2 forcing rows. Reference oracle only.
inline BigInt n2_bruteforce(const PairPartition& s0, const PairPartition& s1,
                            const PairPartition& s2, const Partition& lambda,
                            std::uint64_t guard = 10'000'000) {
    if (s0.size() != s1.size() || s0.size() != s2.size())
        throw validation_error("triplet size mismatch");
    const int k = s0.pair_count();
    std::vector<int> doubled;
    for (int p : lambda.parts()) doubled.push_back(2 * p);
    Partition shape(doubled);
    std::vector<std::pair<int, int>> boxes;
    std::vector<std::vector<int>> box_at(shape.length() + 1,
                                         std::vector<int>(shape.part(1) + 1, -1));
    for (int r = 1; r <= shape.length(); ++r)
        for (int c = 1; c <= shape.part(r); ++c) {
            box_at[r][c] = static_cast<int>(boxes.size());
            boxes.emplace_back(r, c);
        }
    const std::uint64_t nboxes = boxes.size();
    if (nboxes == 0) return k == 0 ? 1 : 0;

    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
        if (total > guard / nboxes + 1) throw capacity_error("n2 brute force beyond guard");
        total *= nboxes;
    }
    if (total > guard) throw capacity_error("n2 brute force beyond guard");

    // neighbor of a box: column 2i-1 <-> 2i in the same row
    std::vector<int> neighbor(boxes.size());
    for (size_t b = 0; b < boxes.size(); ++b) {
        auto [r, c] = boxes[b];
        neighbor[b] = box_at[r][c % 2 == 1 ? c + 1 : c - 1];
    }

    std::vector<int> reps;
    for (int i = 0; i < s0.size(); ++i)
        if (s0(i) > i) reps.push_back(i);

    BigInt count = 0;
    std::vector<int> image(s0.size());
    for (std::uint64_t it = 0; it < total; ++it) {
        std::uint64_t x = it;
        for (int i = 0; i < k; ++i) {
            int b = static_cast<int>(x % nboxes);
            x /= nboxes;
            image[reps[i]] = b;
            image[s0(reps[i])] = neighbor[b];
        }
        bool ok = true;
        for (int l = 0; l < s0.size() && ok; ++l) {
            ok = boxes[image[l]].second == boxes[image[s0(s1(l))]].second &&
                 boxes[image[l]].first == boxes[image[s2(l)]].first;
        }
        if (ok) ++count;
    }
    return count;
}

// N1 of a triplet graph on a multirectangular diagram with m blocks: sum over
// assignments phi of block indices to the white loops of
//   prod_white p_phi(w) * prod_black q_max{phi(w) : w adjacent to b}.
inline Rational n1_value(const TripletGraph& g, const MultiRect& mr) {
    const int m = mr.blocks();
    const int whites = g.white_count();
    if (whites == 0) return g.black_count() == 0 ? Rational(1) : Rational(0);
    if (m == 0) return 0;
    for (const auto& adj : g.black_adj)
        if (adj.empty()) throw validation_error("isolated black vertex");

    const auto& p = mr.row_counts();
    const auto& q = mr.row_lengths();
    Rational total = 0;
    std::vector<int> phi(whites, 0); // 0-based block indices
    for (;;) {
        Rational term = 1;
        for (int w = 0; w < whites; ++w) term *= p[phi[w]];
        for (const auto& adj : g.black_adj) {
            int best = 0;
            for (int w : adj) best = std::max(best, phi[w]);
            term *= q[best];
        }
        total += term;
        int w = 0;
        while (w < whites && ++phi[w] == m) phi[w++] = 0;
        if (w == whites) break;
    }
    return total;
}

inline BigInt n1_value(const TripletGraph& g, const Partition& lambda) {
    return to_bigint(n1_value(g, MultiRect::of_partition(lambda)));
}

// Same sum with symbolic p, q over m blocks.
inline PQPolynomial n1_symbolic(const TripletGraph& g, int m) {
    const int whites = g.white_count();
    PQPolynomial out(m);
    if (whites == 0) {
        if (g.black_count() == 0) out.add_term(PQPolynomial::ExpVec(2 * m, 0), 1);
        return out;
    }
    if (m == 0) return out;
    for (const auto& adj : g.black_adj)
        if (adj.empty()) throw validation_error("isolated black vertex");

    std::vector<int> phi(whites, 0);
    PQPolynomial::ExpVec e(2 * m);
    for (;;) {
        std::fill(e.begin(), e.end(), 0);
        for (int w = 0; w < whites; ++w) e[phi[w]]++;
        for (const auto& adj : g.black_adj) {
            int best = 0;
            for (int w : adj) best = std::max(best, phi[w]);
            e[m + best]++;
        }
        out.add_term(e, 1);
        int w = 0;
        while (w < whites && ++phi[w] == m) phi[w++] = 0;
        if (w == whites) break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Zonal characters
// ---------------------------------------------------------------------------

inline constexpr int kCharacterCapacity = 5;
inline constexpr int kOrbitFormulaCapacity = 4;

namespace detail {

inline void check_character_capacity(const Partition& mu, int capacity) {
    if (mu.empty()) throw validation_error("character needs a nonempty mu");
    if (mu.weight() > capacity)
        throw capacity_error("character capped at |mu| = " + std::to_string(capacity) +
                             ", got " + std::to_string(mu.weight()));
}

} // namespace detail

// Sigma^(2) for an explicit couple (S1,S2):
//   2^-l(mu) * sum_S0 (-1)^L(S0,S1) 2^|L(S0,S1)| N1_{S0,S1,S2}(lambda),
// the sum running over all pair-partitions S0 of [2k]. The result does not
// depend on the choice of couple of type mu.
inline Rational zonal_character_for_couple(const PairPartition& s1, const PairPartition& s2,
                                           const MultiRect& lambda) {
    const int k = s1.pair_count();
    const int ell = loop_structure(s1, s2).type.length();
    const std::uint64_t count = static_cast<std::uint64_t>(pair_partition_count(k));
    Rational sum = parallel_map_reduce_sum<Rational>(count, 0, [&](std::uint64_t rank) {
        PairPartition s0 = unrank_pair_partition(k, rank);
        LoopStructure l01 = loop_structure(s0, s1);
        Rational factor = Rational(l01.sign) * pow_bigint(2, l01.loop_count());
        return factor * n1_value(triplet_graph(s0, s1, s2), lambda);
    });
    return sum / pow_bigint(2, ell);
}

inline Rational zonal_character(const Partition& mu, const MultiRect& lambda,
                                int capacity = kCharacterCapacity) {
    detail::check_character_capacity(mu, capacity);
    auto [s1, s2] = canonical_couple(mu);
    return zonal_character_for_couple(s1, s2, lambda);
}

// Integer-valued on genuine Young diagrams; aborts loudly if not.
inline BigInt zonal_character(const Partition& mu, const Partition& lambda,
                              int capacity = kCharacterCapacity) {
    Rational value = zonal_character(mu, MultiRect::of_partition(lambda), capacity);
    if (!is_integer(value))
        throw std::logic_error("zonal character of mu=" + mu.to_string() + " at lambda=" +
                               lambda.to_string() + " is not an integer: " + to_string(value));
    return numerator(value);
}

// Coefficient extraction route, independent of the pairing sums:
// binom(|lambda|-|mu|+m_1(mu), m_1(mu)) z_mu theta^(2)_{mu 1^...}(lambda).
inline Rational zonal_character_oracle(const Partition& mu, const Partition& lambda) {
    detail::check_character_capacity(mu, kCharacterCapacity);
    if (mu.weight() > lambda.weight())
        throw validation_error("character oracle needs |mu| <= |lambda|");
    int extra = lambda.weight() - mu.weight();
    Rational theta = theta_coefficient(lambda, mu.with_ones(extra), 2);
    return Rational(binomial(extra + mu.multiplicity(1), mu.multiplicity(1)) * mu.z()) * theta;
}

// Sigma^(2)_mu(p x q) as an exact polynomial in p_1..p_m, q_1..q_m:
//   (-1)^k 2^-l(mu) sum_S0 sum_phi prod_white p_phi prod_black (-2 q_psi).
inline PQPolynomial stanley_polynomial(const Partition& mu, int m,
                                       int capacity = kCharacterCapacity) {
    detail::check_character_capacity(mu, capacity);
    if (m < 1) throw validation_error("stanley polynomial needs at least one rectangle");
    const int k = mu.weight();
    auto [s1, s2] = canonical_couple(mu);
    PQPolynomial sum(m);
    for (const auto& s0 : enumerate_pair_partitions(k)) {
        TripletGraph g = triplet_graph(s0, s1, s2);
        Rational factor = pow_rational(-2, g.black_count());
        sum += n1_symbolic(g, m) * factor;
    }
    Rational outer = pow_rational(-1, k) / pow_bigint(2, mu.length());
    return sum * outer;
}

// Positivity/integrality of (-1)^|mu| Sigma^(2)_mu(p, -q). Coefficient
// patterns repeat beyond m = |mu| rectangles, so checking there is enough.
struct StanleyPositivityReport {
    bool pass = false;
    PQPolynomial transformed; // (-1)^|mu| Sigma(p,-q)
    std::optional<std::pair<PQPolynomial::ExpVec, Rational>> witness; // first violation
};

inline StanleyPositivityReport stanley_positivity_report(const Partition& mu,
                                                         int capacity = kCharacterCapacity) {
    detail::check_character_capacity(mu, capacity);
    StanleyPositivityReport report;
    PQPolynomial sigma = stanley_polynomial(mu, mu.weight(), capacity);
    report.transformed = sigma.negated_q() * pow_rational(-1, mu.weight());
    report.pass = true;
    for (const auto& [e, c] : report.transformed.terms()) {
        if (c < 0 || !is_integer(c)) {
            report.pass = false;
            report.witness = {e, c};
            break;
        }
    }
    return report;
}

// Sigma^(1/2)_mu(lambda) = (-1/2)^(|mu|-l(mu)) Sigma^(2)_mu(lambda').
inline Rational symplectic_character(const Partition& mu, const Partition& lambda,
                                     int capacity = kCharacterCapacity) {
    detail::check_character_capacity(mu, capacity);
    Rational zonal(zonal_character(mu, lambda.conjugate(), capacity));
    return zonal * pow_rational(Rational(-1, 2), mu.weight() - mu.length());
}

// The 2-power-free form: sum over orbits of compatible (S0, orientation)
// couples of (-1)^L(S0,S1) N1(lambda), each orbit with coefficient one.
inline Rational zonal_character_orbit_formula(const Partition& mu, const MultiRect& lambda,
                                              int capacity = kOrbitFormulaCapacity) {
    detail::check_character_capacity(mu, capacity);
    auto [s1, s2] = canonical_couple(mu);
    Rational sum = 0;
    for (const auto& orbit : orientation_orbits(mu)) {
        LoopStructure l01 = loop_structure(orbit.s0, s1);
        sum += Rational(l01.sign) * n1_value(triplet_graph(orbit.s0, s1, s2), lambda);
    }
    return sum;
}

inline BigInt zonal_character_orbit_formula(const Partition& mu, const Partition& lambda,
                                            int capacity = kOrbitFormulaCapacity) {
    return to_bigint(zonal_character_orbit_formula(mu, MultiRect::of_partition(lambda), capacity));
}

} // namespace zonalkit
