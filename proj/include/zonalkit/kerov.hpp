#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zonalkit/characters.hpp"
#include "zonalkit/cumulants.hpp"
#include "zonalkit/errors.hpp"
#include "zonalkit/linalg.hpp"
#include "zonalkit/pair_partition.hpp"
#include "zonalkit/parallel.hpp"
#include "zonalkit/partition.hpp"
#include "zonalkit/pqpoly.hpp"
#include "zonalkit/triplet_graph.hpp"

namespace zonalkit {

// Polynomial in the free-cumulant symbols R_2, R_3, ...: a map from exponent
// vectors (s_2, s_3, ...) to exact rationals. The key stores s_2 at index 0
// with trailing zeros trimmed; terms iterate in lexicographic key order.
class KerovPolynomial {
public:
    using Exponents = std::vector<int>; // [s_2, s_3, ...]
    using Terms = std::map<Exponents, Rational>;

    static Exponents trimmed(Exponents s) {
        while (!s.empty() && s.back() == 0) s.pop_back();
        return s;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Exponents& s) const {
        auto it = terms_.find(trimmed(s));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Exponents& s, const Rational& c) {
        if (c == 0) return;
        auto key = trimmed(s);
        auto [it, inserted] = terms_.emplace(std::move(key), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Weight of a monomial: sum i * s_i.
    static int weight(const Exponents& s) {
        int w = 0;
        for (size_t j = 0; j < s.size(); ++j) w += static_cast<int>(j + 2) * s[j];
        return w;
    }

    // Value at cumulants[j] = R_j (entries below index 2 ignored).
    Rational evaluate(const std::vector<Rational>& cumulants) const {
        Rational total = 0;
        for (const auto& [s, c] : terms_) {
            Rational term = c;
            for (size_t j = 0; j < s.size(); ++j) {
                if (s[j] == 0) continue;
                if (j + 2 >= cumulants.size())
                    throw validation_error("not enough cumulants for evaluation");
                term *= pow_rational(cumulants[j + 2], s[j]);
            }
            total += term;
        }
        return total;
    }

    // "4*R3 - 2*R2"
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [s, c] : terms_) {
            Rational mag = c < 0 ? Rational(-c) : c;
            if (out.empty())
                out += (c < 0) ? "-" : "";
            else
                out += (c < 0) ? " - " : " + ";
            std::string mono;
            for (size_t j = 0; j < s.size(); ++j) {
                if (s[j] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "R" + std::to_string(j + 2);
                if (s[j] > 1) mono += "^" + std::to_string(s[j]);
            }
            if (mono.empty())
                out += zonalkit::to_string(mag);
            else if (mag == 1)
                out += mono;
            else
                out += zonalkit::to_string(mag) + "*" + mono;
        }
        return out;
    }

    bool operator==(const KerovPolynomial&) const = default;

private:
    Terms terms_;
};

inline constexpr int kKerovCapacity = 5;
inline constexpr int kKerovOracleCapacity = 4;

// Number of pairs (S0, q) against the canonical couple of type mu with:
//   (a) the triplet S0,S1,S2 transitive,
//   (b) #L(S0,S1) = s_2 + s_3 + ...,
//   (c) #L(S0,S2) = s_2 + 2 s_3 + 3 s_4 + ...,
//   (d) q labels the loops of L(S0,S1) using value i exactly s_i times,
//   (e) every nontrivial subset A of loops of L(S0,S1) sees strictly more
//       than sum_{v in A} (q(v)-1) loops of L(S0,S2).
// The marriage condition (e) can be switched off for harness checks.
inline BigInt kerov_count(const Partition& mu, const KerovPolynomial::Exponents& s,
                          int capacity = kKerovCapacity, bool enforce_marriage = true) {
    if (mu.empty()) throw validation_error("kerov count needs a nonempty mu");
    if (mu.weight() > capacity)
        throw capacity_error("kerov count capped at |mu| = " + std::to_string(capacity));
    for (int v : s)
        if (v < 0) throw validation_error("negative exponent");

    const int k = mu.weight();
    int target_black = 0, target_white = 0;
    for (size_t j = 0; j < s.size(); ++j) {
        target_black += s[j];
        target_white += static_cast<int>(j + 1) * s[j];
    }
    if (target_black == 0 || target_black > 31) return 0;

    // value multiset for q, sorted so next_permutation covers each distinct
    // assignment exactly once
    std::vector<int> values;
    for (size_t j = 0; j < s.size(); ++j)
        values.insert(values.end(), s[j], static_cast<int>(j + 2));

    auto [s1, s2] = canonical_couple(mu);
    const std::uint64_t count = static_cast<std::uint64_t>(pair_partition_count(k));
    return parallel_map_reduce_sum<BigInt>(count, 0, [&](std::uint64_t rank) -> BigInt {
        PairPartition s0 = unrank_pair_partition(k, rank);
        TripletGraph g = triplet_graph(s0, s1, s2);
        if (g.black_count() != target_black || g.white_count() != target_white) return 0;
        if (!g.connected()) return 0;

        std::vector<std::uint32_t> adj_mask(g.black_count(), 0);
        for (int b = 0; b < g.black_count(); ++b)
            for (int w : g.black_adj[b]) adj_mask[b] |= 1u << w;

        std::vector<int> q = values;
        BigInt valid = 0;
        do {
            bool ok = true;
            if (enforce_marriage) {
                const std::uint32_t all = (target_black == 32) ? ~0u : (1u << target_black) - 1;
                for (std::uint32_t a = 1; a < all && ok; ++a) {
                    std::uint32_t whites = 0;
                    int demand = 0;
                    for (int b = 0; b < target_black; ++b)
                        if ((a >> b) & 1) {
                            whites |= adj_mask[b];
                            demand += q[b] - 1;
                        }
                    ok = std::popcount(whites) > demand;
                }
            }
            if (ok) ++valid;
        } while (std::next_permutation(q.begin(), q.end()));
        return valid;
    });
}

namespace detail {

// All exponent vectors with #black = sum s_i <= k and
// #white = sum (i-1) s_i <= k; the index i runs over 2..k+1.
inline std::vector<KerovPolynomial::Exponents> admissible_exponents(int k) {
    std::vector<KerovPolynomial::Exponents> out;
    KerovPolynomial::Exponents s(k > 0 ? k : 0, 0); // s_2..s_(k+1)
    auto rec = [&](auto&& self, int j, int blacks, int whites) -> void {
        if (j == static_cast<int>(s.size())) {
            if (blacks >= 1) out.push_back(KerovPolynomial::trimmed(s));
            return;
        }
        for (int v = 0; blacks + v <= k && whites + (j + 1) * v <= k; ++v) {
            s[j] = v;
            self(self, j + 1, blacks + v, whites + (j + 1) * v);
        }
        s[j] = 0;
    };
    rec(rec, 0, 0, 0);
    return out;
}

} // namespace detail

// K^(2)_mu from the loop counting: the coefficient of prod (R_i^(2))^(s_i) is
//   (-1)^(|mu| + l(mu) + 2s_2 + 3s_3 + ...) 2^((2s_2 + 3s_3 + ...) - l(mu))
// times the number of pairs counted by kerov_count. For one-part mu this is
// the expansion of Sigma^(2); for longer mu it is the cumulant-style object
// defined by the same counting (see README).
inline KerovPolynomial kerov_polynomial_combinatorial(const Partition& mu,
                                                      int capacity = kKerovCapacity) {
    if (mu.empty()) throw validation_error("kerov polynomial needs a nonempty mu");
    if (mu.weight() > capacity)
        throw capacity_error("kerov polynomial capped at |mu| = " + std::to_string(capacity));
    KerovPolynomial out;
    for (const auto& s : detail::admissible_exponents(mu.weight())) {
        BigInt count = kerov_count(mu, s, capacity);
        if (count == 0) continue;
        int w = KerovPolynomial::weight(s);
        int sign = (mu.weight() + mu.length() + w) % 2 == 0 ? 1 : -1;
        Rational coeff = Rational(sign) * pow_rational(2, w - mu.length()) * Rational(count);
        out.add_term(s, coeff);
    }
    return out;
}

// Symbolic oracle for one-part mu = (k): expand Sigma^(2)_(k) and the
// anisotropic cumulants as polynomials in k+1 rectangle variables and solve
// exactly for the unique combination of cumulant monomials of weight <= k+1.
// Retries with one more variable if the monomials are rank deficient.
inline KerovPolynomial kerov_oracle(int k, int capacity = kKerovOracleCapacity) {
    if (k < 1) throw validation_error("kerov oracle needs k >= 1");
    if (k > capacity)
        throw capacity_error("kerov oracle capped at k = " + std::to_string(capacity));

    // Monomials in R_2..R_(k+1) of weight at most k+1, constant included.
    std::vector<KerovPolynomial::Exponents> monomials;
    KerovPolynomial::Exponents s(k, 0);
    auto rec = [&](auto&& self, int j, int weight) -> void {
        if (j == k) {
            monomials.push_back(KerovPolynomial::trimmed(s));
            return;
        }
        for (int v = 0; weight + (j + 2) * v <= k + 1; ++v) {
            s[j] = v;
            self(self, j + 1, weight + (j + 2) * v);
        }
        s[j] = 0;
    };
    rec(rec, 0, 0);

    for (int m = k + 1; m <= k + 3; ++m) {
        PQPolynomial sigma = stanley_polynomial(Partition({k}), m, capacity + 1);
        auto cumulants = symbolic_anisotropic_cumulants(m, 2, k + 1);

        std::vector<PQPolynomial> columns;
        for (const auto& mono : monomials) {
            PQPolynomial col = PQPolynomial::constant(m, 1);
            for (size_t j = 0; j < mono.size(); ++j)
                for (int rep = 0; rep < mono[j]; ++rep) col = col * cumulants[j + 2];
            columns.push_back(std::move(col));
        }

        std::map<PQPolynomial::ExpVec, size_t> row_index;
        auto note_rows = [&](const PQPolynomial& f) {
            for (const auto& [e, c] : f.terms())
                row_index.emplace(e, row_index.size());
        };
        for (const auto& col : columns) note_rows(col);
        note_rows(sigma);

        std::vector<std::vector<Rational>> a(row_index.size(),
                                             std::vector<Rational>(columns.size(), 0));
        std::vector<Rational> b(row_index.size(), 0);
        for (size_t c = 0; c < columns.size(); ++c)
            for (const auto& [e, v] : columns[c].terms()) a[row_index[e]][c] = v;
        for (const auto& [e, v] : sigma.terms()) b[row_index[e]] = v;

        SolveResult res = solve_linear_system(a, b);
        if (res.status == SolveStatus::rank_deficient) continue; // enlarge m and retry
        if (res.status == SolveStatus::inconsistent)
            throw std::logic_error("kerov oracle: character is outside the cumulant span");

        // the solve is exact; verify the residual vanishes termwise anyway
        PQPolynomial recombined(m);
        for (size_t c = 0; c < columns.size(); ++c) recombined += columns[c] * res.solution[c];
        if (!(recombined == sigma)) throw std::logic_error("kerov oracle: nonzero residual");

        KerovPolynomial out;
        for (size_t c = 0; c < columns.size(); ++c) out.add_term(monomials[c], res.solution[c]);
        return out;
    }
    throw std::logic_error("kerov oracle: rank deficient after retries");
}

// K^(1/2)_mu: the coefficient of prod (R_i^(1/2))^(s_i) is 2^-|mu| times the
// same count as in the zonal case; in particular all coefficients are
// non-negative.
inline KerovPolynomial symplectic_kerov(const Partition& mu, int capacity = kKerovCapacity) {
    if (mu.empty()) throw validation_error("kerov polynomial needs a nonempty mu");
    if (mu.weight() > capacity)
        throw capacity_error("kerov polynomial capped at |mu| = " + std::to_string(capacity));
    KerovPolynomial out;
    Rational scale = pow_rational(Rational(1, 2), mu.weight());
    for (const auto& s : detail::admissible_exponents(mu.weight())) {
        BigInt count = kerov_count(mu, s, capacity);
        if (count == 0) continue;
        out.add_term(s, scale * Rational(count));
    }
    return out;
}

// Transport a zonal Kerov polynomial to the symplectic normalization: both
// coefficient families scale the same loop counts, so
// [s] K^(1/2) = (-1)^(|mu|+l(mu)+w) 2^(l(mu)-w-|mu|) [s] K^(2) with w the
// monomial weight.
inline KerovPolynomial symplectic_from_zonal_kerov(const KerovPolynomial& zonal,
                                                   const Partition& mu) {
    KerovPolynomial out;
    for (const auto& [s, c] : zonal.terms()) {
        int w = KerovPolynomial::weight(s);
        int sign = (mu.weight() + mu.length() + w) % 2 == 0 ? 1 : -1;
        out.add_term(s, c * Rational(sign) * pow_rational(2, mu.length() - w - mu.weight()));
    }
    return out;
}

// Integrality of K^(2)_mu plus the sharper divisibility by
// 2^(s_2 + 2 s_3 + 3 s_4 + ...).
struct KerovIntegralityReport {
    bool pass = false;
    KerovPolynomial polynomial;
    std::optional<std::pair<KerovPolynomial::Exponents, Rational>> witness;
};

inline KerovIntegralityReport kerov_integrality_report(const Partition& mu,
                                                       int capacity = kKerovCapacity) {
    KerovIntegralityReport report;
    report.polynomial = kerov_polynomial_combinatorial(mu, capacity);
    report.pass = true;
    for (const auto& [s, c] : report.polynomial.terms()) {
        int white = 0;
        for (size_t j = 0; j < s.size(); ++j) white += static_cast<int>(j + 1) * s[j];
        if (!is_integer(c * pow_rational(Rational(1, 2), white))) {
            report.pass = false;
            report.witness = {s, c};
            break;
        }
    }
    return report;
}

} // namespace zonalkit
