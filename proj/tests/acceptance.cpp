// Acceptance suite: every identity the library promises, at its full
// documented range, exact equality everywhere. Prints one line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "zonalkit/zonalkit.hpp"

using namespace zonalkit;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" [exception: ") + e.what() + "]";
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > budget_seconds) {
        ok = false;
        note += " [over time budget]";
    }
    std::printf("[%s] criterion %2d: %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                seconds, note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

PSymmetricFunction reference_z21() {
    PSymmetricFunction f;
    f.add_term(Partition({1, 1, 1}), 1);
    f.add_term(Partition({2, 1}), 1);
    f.add_term(Partition({3}), -2);
    return f;
}

BigInt sigma2_closed_form(const Partition& lambda) {
    BigInt rows = 0, cols = 0;
    Partition conj = lambda.conjugate();
    for (int v : lambda.parts()) rows += BigInt(v) * v;
    for (int v : conj.parts()) cols += BigInt(v) * v;
    return 2 * rows - cols - lambda.weight();
}

} // namespace

int main() {
    criterion(1, "Z_(2,1) equals its three-term power-sum expansion", 1.0, [] {
        return zonal_polynomial(Partition({2, 1})) == reference_z21();
    });

    criterion(2, "tableau route == orthogonality oracle for all |lambda| <= 5", 30.0, [] {
        int seen = 0;
        for (int n = 1; n <= 5; ++n)
            for (const auto& lambda : partitions_of(n)) {
                ++seen;
                if (!(zonal_polynomial(lambda) == jack_alpha2_oracle(lambda))) return false;
            }
        return seen == 18;
    });

    criterion(3, "coefficient of p_(1^n) in Z_lambda is 1 for |lambda| <= 5", 30.0, [] {
        for (int n = 1; n <= 5; ++n)
            for (const auto& lambda : partitions_of(n))
                if (zonal_polynomial(lambda).coefficient(Partition(std::vector<int>(n, 1))) != 1)
                    return false;
        return true;
    });

    criterion(4, "character on a 2-cycle matches its closed form for |lambda| <= 6", 30.0, [] {
        for (int n = 0; n <= 6; ++n)
            for (const auto& lambda : partitions_of(n))
                if (zonal_character(Partition({2}), lambda) != sigma2_closed_form(lambda))
                    return false;
        return true;
    });

    criterion(5, "Stanley polynomial of (2) equals the three-term expression, m = 3", 10.0, [] {
        const int m = 3;
        PQPolynomial expected(m);
        for (int i = 1; i <= m; ++i) {
            expected +=
                PQPolynomial::p(m, i) * PQPolynomial::q(m, i) * PQPolynomial::q(m, i) * Rational(2);
            expected -= PQPolynomial::p(m, i) * PQPolynomial::q(m, i);
            for (int j = 1; j <= m; ++j)
                expected -=
                    PQPolynomial::p(m, i) * PQPolynomial::p(m, j) * PQPolynomial::q(m, std::max(i, j));
        }
        return stanley_polynomial(Partition({2}), m) == expected;
    });

    criterion(6, "pairing sum == coefficient oracle == orbit formula, |mu| <= 4, |lambda| <= 5",
              300.0, [] {
                  for (int k = 1; k <= 4; ++k)
                      for (const auto& mu : partitions_of(k))
                          for (int n = k; n <= 5; ++n)
                              for (const auto& lambda : partitions_of(n)) {
                                  BigInt direct = zonal_character(mu, lambda);
                                  if (Rational(direct) != zonal_character_oracle(mu, lambda))
                                      return false;
                                  if (direct != zonal_character_orbit_formula(mu, lambda))
                                      return false;
                              }
                  return true;
              });

    criterion(7, "doubling identity N2 = 2^loops N1, exhaustive k <= 2 plus 200 random k = 3",
              60.0, [] {
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
                  std::mt19937 rng(112358);
                  const std::uint64_t total = static_cast<std::uint64_t>(pair_partition_count(3));
                  Partition lambda({2, 1});
                  for (int trial = 0; trial < 200; ++trial) {
                      auto s0 = unrank_pair_partition(3, rng() % total);
                      auto s1 = unrank_pair_partition(3, rng() % total);
                      auto s2 = unrank_pair_partition(3, rng() % total);
                      int loops = loop_structure(s0, s1).loop_count();
                      if (n2_bruteforce(s0, s1, s2, lambda) !=
                          pow_bigint(2, loops) * n1_bruteforce(s0, s1, s2, lambda))
                          return false;
                  }
                  return true;
              });

    criterion(8, "K_(2) = 4 R3 - 2 R2 by both routes; counting == oracle for k <= 4", 300.0, [] {
        KerovPolynomial expected;
        expected.add_term({0, 1}, 4);
        expected.add_term({1}, -2);
        if (!(kerov_polynomial_combinatorial(Partition({2})) == expected)) return false;
        if (!(kerov_oracle(2) == expected)) return false;
        for (int k = 1; k <= 4; ++k)
            if (!(kerov_polynomial_combinatorial(Partition({k})) == kerov_oracle(k))) return false;
        return true;
    });

    criterion(9, "K_(k) at the cumulants of lambda equals the character, k <= 3, |lambda| <= 5",
              300.0, [] {
                  if (anisotropic_cumulant(MultiRect::of_partition(Partition({2, 1})), 2, 3) !=
                      Rational(5, 4))
                      return false;
                  for (int k = 1; k <= 3; ++k) {
                      KerovPolynomial kp = kerov_polynomial_combinatorial(Partition({k}));
                      for (int n = 0; n <= 5; ++n)
                          for (const auto& lambda : partitions_of(n)) {
                              auto r =
                                  anisotropic_cumulants(MultiRect::of_partition(lambda), 2, k + 1);
                              if (kp.evaluate(r) != Rational(zonal_character(Partition({k}), lambda)))
                                  return false;
                          }
                  }
                  return true;
              });

    criterion(10, "positivity and integrality families for all |mu| <= 4", 300.0, [] {
        for (int k = 1; k <= 4; ++k)
            for (const auto& mu : partitions_of(k)) {
                if (!stanley_positivity_report(mu).pass) return false;
                if (!kerov_integrality_report(mu).pass) return false;
                KerovPolynomial half = symplectic_kerov(mu);
                for (const auto& [s, c] : half.terms())
                    if (c < 0) return false;
            }
        return true;
    });

    criterion(11, "cumulant duality R^(1/2)_k(lambda) = (-2)^k R^(2)_k(lambda'), k, |lambda| <= 6",
              60.0, [] {
                  for (int n = 0; n <= 6; ++n)
                      for (const auto& lambda : partitions_of(n)) {
                          auto half = anisotropic_cumulants(MultiRect::of_partition(lambda),
                                                            Rational(1, 2), 6);
                          auto two = anisotropic_cumulants(
                              MultiRect::of_partition(lambda.conjugate()), Rational(2), 6);
                          for (int j = 1; j <= 6; ++j)
                              if (half[j] != pow_rational(-2, j) * two[j]) return false;
                      }
                  return true;
              });

    criterion(12, "(2k-1)!! pair-partitions for k <= 6; couple counts exhaustive for n <= 4",
              120.0, [] {
                  for (int k = 1; k <= 6; ++k) {
                      std::uint64_t n = 0;
                      for ([[maybe_unused]] const auto& s : enumerate_pair_partitions(k)) ++n;
                      if (BigInt(n) != pair_partition_count(k)) return false;
                  }
                  for (int n = 1; n <= 4; ++n)
                      for (const auto& mu : partitions_of(n)) {
                          BigInt seen = 0;
                          for (const auto& sa : enumerate_pair_partitions(n))
                              for (const auto& sb : enumerate_pair_partitions(n))
                                  if (loop_structure(sa, sb).type == mu) ++seen;
                          if (seen != couples_of_type_count(mu)) return false;
                      }
                  return true;
              });

    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criterion(s) FAILED\n", failures);
    return 1;
}
