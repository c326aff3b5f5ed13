#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "zonalkit/characters.hpp"
#include "zonalkit/cumulants.hpp"
#include "zonalkit/kerov.hpp"
#include "zonalkit/loops.hpp"
#include "zonalkit/pair_partition.hpp"
#include "zonalkit/zonal.hpp"

namespace zonalkit {

enum class SelftestLevel { quick, full };

// Machine-verifies the library's cross-identities at the requested scale and
// prints one line per check. quick stays at k <= 3 and runs in seconds; full
// pushes every identity to its documented range.
inline bool run_selftest(SelftestLevel level, std::ostream& out) {
    const bool full = level == SelftestLevel::full;
    int failures = 0;

    auto check = [&](const std::string& name, const std::function<bool()>& body) {
        bool ok = false;
        std::string note;
        try {
            ok = body();
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        out << (ok ? "ok   " : "FAIL ") << name << note << "\n";
        if (!ok) ++failures;
    };

    check("pair-partition counts match (2k-1)!!", [&] {
        for (int k = 1; k <= (full ? 6 : 4); ++k) {
            std::uint64_t n = 0;
            for ([[maybe_unused]] const auto& s : enumerate_pair_partitions(k)) ++n;
            if (BigInt(n) != pair_partition_count(k)) return false;
        }
        return true;
    });

    check("couple counting formula matches exhaustive enumeration", [&] {
        for (int n = 1; n <= (full ? 4 : 3); ++n) {
            for (const auto& mu : partitions_of(n)) {
                BigInt seen = 0;
                for (const auto& sa : enumerate_pair_partitions(n))
                    for (const auto& sb : enumerate_pair_partitions(n))
                        if (loop_structure(sa, sb).type == mu) ++seen;
                if (seen != couples_of_type_count(mu)) return false;
            }
        }
        return true;
    });

    check("composition of a couple has doubled cycle type", [&] {
        for (int k = 1; k <= 3; ++k)
            for (const auto& sa : enumerate_pair_partitions(k))
                for (const auto& sb : enumerate_pair_partitions(k)) {
                    Partition mu = loop_structure(sa, sb).type;
                    std::vector<int> doubled;
                    for (int part : mu.parts()) {
                        doubled.push_back(part);
                        doubled.push_back(part);
                    }
                    if (composition_cycle_type(sa, sb) != Partition(doubled)) return false;
                }
        return true;
    });

    check("zonal polynomials match the orthogonality oracle", [&] {
        for (int n = 1; n <= (full ? 5 : 3); ++n)
            for (const auto& lambda : partitions_of(n)) {
                PSymmetricFunction z = zonal_polynomial(lambda);
                if (!(z == jack_alpha2_oracle(lambda))) return false;
                if (z.coefficient(Partition(std::vector<int>(n, 1))) != 1) return false;
            }
        return true;
    });

    check("graph-based counting function matches brute force", [&] {
        std::vector<Partition> lambdas{Partition({1}), Partition({2, 1})};
        if (full) lambdas.push_back(Partition({3, 2, 1}));
        for (int k = 1; k <= (full ? 3 : 2); ++k)
            for (const auto& s0 : enumerate_pair_partitions(k))
                for (const auto& s1 : enumerate_pair_partitions(k))
                    for (const auto& s2 : enumerate_pair_partitions(k)) {
                        TripletGraph g = triplet_graph(s0, s1, s2);
                        for (const auto& lambda : lambdas)
                            if (n1_value(g, lambda) != n1_bruteforce(s0, s1, s2, lambda))
                                return false;
                    }
        return true;
    });

    check("doubling identity between the two counting functions", [&] {
        std::vector<Partition> lambdas{Partition({1}), Partition({2}), Partition({1, 1}),
                                       Partition({2, 1})};
        for (int k = 1; k <= 2; ++k)
            for (const auto& s0 : enumerate_pair_partitions(k))
                for (const auto& s1 : enumerate_pair_partitions(k))
                    for (const auto& s2 : enumerate_pair_partitions(k)) {
                        int loops = loop_structure(s0, s1).loop_count();
                        for (const auto& lambda : lambdas)
                            if (n2_bruteforce(s0, s1, s2, lambda) !=
                                pow_bigint(2, loops) * n1_bruteforce(s0, s1, s2, lambda))
                                return false;
                    }
        return true;
    });

    check("character on a 2-cycle matches its closed form", [&] {
        for (int n = 0; n <= (full ? 6 : 4); ++n)
            for (const auto& lambda : partitions_of(n)) {
                BigInt rows = 0, cols = 0;
                Partition conj = lambda.conjugate();
                for (int v : lambda.parts()) rows += BigInt(v) * v;
                for (int v : conj.parts()) cols += BigInt(v) * v;
                if (zonal_character(Partition({2}), lambda) != 2 * rows - cols - lambda.weight())
                    return false;
            }
        return true;
    });

    check("pairing sum, coefficient oracle and orbit formula agree", [&] {
        for (int k = 1; k <= (full ? 4 : 2); ++k)
            for (const auto& mu : partitions_of(k))
                for (int n = k; n <= (full ? 5 : 3); ++n)
                    for (const auto& lambda : partitions_of(n)) {
                        BigInt direct = zonal_character(mu, lambda);
                        if (Rational(direct) != zonal_character_oracle(mu, lambda)) return false;
                        if (direct != zonal_character_orbit_formula(mu, lambda)) return false;
                    }
        return true;
    });

    check("stanley polynomials evaluate to the characters", [&] {
        for (int k = 1; k <= (full ? 4 : 2); ++k)
            for (const auto& mu : partitions_of(k)) {
                PQPolynomial f = stanley_polynomial(mu, 2);
                std::vector<Rational> p{2, 1}, q{3, 1};
                if (f.evaluate(p, q) != zonal_character(mu, MultiRect(p, q))) return false;
            }
        return true;
    });

    check("stanley coefficients stay non-negative integers after q -> -q", [&] {
        for (int k = 1; k <= (full ? 4 : 3); ++k)
            for (const auto& mu : partitions_of(k))
                if (!stanley_positivity_report(mu).pass) return false;
        return true;
    });

    check("cumulant duality between alpha = 1/2 and alpha = 2", [&] {
        for (int n = 0; n <= (full ? 6 : 4); ++n)
            for (const auto& lambda : partitions_of(n)) {
                auto half =
                    anisotropic_cumulants(MultiRect::of_partition(lambda), Rational(1, 2), 6);
                auto two = anisotropic_cumulants(MultiRect::of_partition(lambda.conjugate()),
                                                 Rational(2), 6);
                for (int j = 1; j <= 6; ++j)
                    if (half[j] != pow_rational(-2, j) * two[j]) return false;
            }
        return true;
    });

    check("kerov polynomials: counting route equals the symbolic oracle", [&] {
        for (int k = 1; k <= (full ? 4 : 2); ++k)
            if (!(kerov_polynomial_combinatorial(Partition({k})) == kerov_oracle(k))) return false;
        return true;
    });

    check("kerov polynomials evaluate to the characters on cycles", [&] {
        for (int k = 1; k <= (full ? 3 : 2); ++k) {
            KerovPolynomial kp = kerov_polynomial_combinatorial(Partition({k}));
            for (int n = 0; n <= (full ? 5 : 3); ++n)
                for (const auto& lambda : partitions_of(n)) {
                    auto r = anisotropic_cumulants(MultiRect::of_partition(lambda), 2, k + 1);
                    if (kp.evaluate(r) != Rational(zonal_character(Partition({k}), lambda)))
                        return false;
                }
        }
        return true;
    });

    check("kerov integrality, divisibility and symplectic positivity", [&] {
        for (int k = 1; k <= (full ? 4 : 3); ++k)
            for (const auto& mu : partitions_of(k)) {
                if (!kerov_integrality_report(mu).pass) return false;
                KerovPolynomial half = symplectic_kerov(mu);
                for (const auto& [s, c] : half.terms())
                    if (c < 0) return false;
            }
        return true;
    });

    out << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
    return failures == 0;
}

} // namespace zonalkit
