#include <doctest.h>

#include <random>

#include "zonalkit/characters.hpp"

using namespace zonalkit;

namespace {

Permutation random_permutation(int n, std::mt19937& rng) {
    Permutation sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i;
    std::shuffle(sigma.begin(), sigma.end(), rng);
    return sigma;
}

// 2 * sum lambda_i^2 - sum lambda'_i^2 - |lambda|
BigInt sigma2_closed_form(const Partition& lambda) {
    BigInt rows = 0, cols = 0;
    Partition conj = lambda.conjugate();
    for (int v : lambda.parts()) rows += BigInt(v) * v;
    for (int v : conj.parts()) cols += BigInt(v) * v;
    return 2 * rows - cols - lambda.weight();
}

} // namespace

TEST_SUITE("characters") {

TEST_CASE("n1 brute force worked examples") {
    auto one = PairPartition::first(1);
    CHECK(n1_bruteforce(one, one, one, Partition({2, 1})) == 3);

    auto [s1, s2] = canonical_couple(Partition({2}));
    CHECK(n1_bruteforce(s1, s1, s2, Partition({2, 1})) == 5); // sum of row lengths squared
    CHECK(n1_bruteforce(s2, s1, s2, Partition({2, 1})) == 5); // sum of column lengths squared
    auto s3 = PairPartition::from_pairs({{1, 3}, {2, 4}});
    CHECK(n1_bruteforce(s3, s1, s2, Partition({2, 1})) == 3); // one box choice

    CHECK(n1_bruteforce(one, one, one, Partition{}) == 0);
    CHECK_THROWS_AS(n1_bruteforce(one, one, PairPartition::first(2), Partition({1})),
                    validation_error);
    CHECK_THROWS_AS(
        n1_bruteforce(PairPartition::first(8), PairPartition::first(8), PairPartition::first(8),
                      Partition({8, 8, 8}), 1000),
        capacity_error);
}

TEST_CASE("graph count equals brute force for every triplet with k <= 3") {
    std::vector<Partition> lambdas{Partition({1}), Partition({2}), Partition({1, 1}),
                                   Partition({2, 1}), Partition({3, 2, 1})};
    for (int k = 1; k <= 3; ++k)
        for (const auto& s0 : enumerate_pair_partitions(k))
            for (const auto& s1 : enumerate_pair_partitions(k))
                for (const auto& s2 : enumerate_pair_partitions(k)) {
                    TripletGraph g = triplet_graph(s0, s1, s2);
                    for (const auto& lambda : lambdas)
                        CHECK(n1_value(g, lambda) == n1_bruteforce(s0, s1, s2, lambda));
                }
}

TEST_CASE("single-edge graph counts the boxes") {
    auto one = PairPartition::first(1);
    TripletGraph g = triplet_graph(one, one, one);
    CHECK(n1_value(g, Partition({2, 1})) == 3);
    CHECK(n1_value(g, Partition({4, 2})) == 6);
}

TEST_CASE("symbolic count evaluates to the numeric one") {
    auto [s1, s2] = canonical_couple(Partition({2}));
    TripletGraph g = triplet_graph(s1, s1, s2);
    PQPolynomial f = n1_symbolic(g, 2);
    CHECK(f.evaluate({1, 1}, {2, 1}) == 5);

    std::mt19937 rng(5150);
    for (int k = 1; k <= 3; ++k) {
        std::uint64_t total = static_cast<std::uint64_t>(pair_partition_count(k));
        for (int trial = 0; trial < 10; ++trial) {
            auto s0 = unrank_pair_partition(k, rng() % total);
            auto sa = unrank_pair_partition(k, rng() % total);
            auto sb = unrank_pair_partition(k, rng() % total);
            TripletGraph h = triplet_graph(s0, sa, sb);
            std::vector<Rational> p{2, 1}, q{3, 1};
            MultiRect mr(p, q);
            CHECK(n1_symbolic(h, 2).evaluate(p, q) == n1_value(h, mr));
        }
    }
}

TEST_CASE("n2 brute force and the doubling identity") {
    auto one = PairPartition::first(1);
    CHECK(n2_bruteforce(one, one, one, Partition({1})) == 2);
    CHECK(n2_bruteforce(one, one, one, Partition{}) == 0);

    std::vector<Partition> lambdas{Partition({1}), Partition({2}), Partition({1, 1}),
                                   Partition({2, 1})};
    for (int k = 1; k <= 2; ++k)
        for (const auto& s0 : enumerate_pair_partitions(k))
            for (const auto& s1 : enumerate_pair_partitions(k))
                for (const auto& s2 : enumerate_pair_partitions(k)) {
                    int loops = loop_structure(s0, s1).loop_count();
                    for (const auto& lambda : lambdas)
                        CHECK(n2_bruteforce(s0, s1, s2, lambda) ==
                              pow_bigint(2, loops) * n1_bruteforce(s0, s1, s2, lambda));
                }

    std::mt19937 rng(2718);
    Partition lambda({2, 1});
    const std::uint64_t total = static_cast<std::uint64_t>(pair_partition_count(3));
    for (int trial = 0; trial < 200; ++trial) {
        auto s0 = unrank_pair_partition(3, rng() % total);
        auto s1 = unrank_pair_partition(3, rng() % total);
        auto s2 = unrank_pair_partition(3, rng() % total);
        int loops = loop_structure(s0, s1).loop_count();
        CHECK(n2_bruteforce(s0, s1, s2, lambda) ==
              pow_bigint(2, loops) * n1_bruteforce(s0, s1, s2, lambda));
    }
}

TEST_CASE("zonal character worked values") {
    CHECK(zonal_character(Partition({2}), Partition({2, 1})) == 2);
    CHECK(zonal_character(Partition({2}), Partition({1})) == 0);
    for (int n = 1; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n))
            CHECK(zonal_character(Partition({1}), lambda) == lambda.weight());
    CHECK_THROWS_AS(zonal_character(Partition({3, 3}), Partition({2, 1})), capacity_error);
    CHECK_THROWS_AS(zonal_character(Partition{}, Partition({2, 1})), validation_error);
}

TEST_CASE("closed form for mu = (2) up to weight 6") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n))
            CHECK(zonal_character(Partition({2}), lambda) == sigma2_closed_form(lambda));
}

TEST_CASE("character vanishes when |mu| > |lambda|") {
    for (int k = 1; k <= 4; ++k)
        for (const auto& mu : partitions_of(k))
            for (int n = 0; n < k; ++n)
                for (const auto& lambda : partitions_of(n))
                    CHECK(zonal_character(mu, lambda) == 0);
}

TEST_CASE("oracle worked values") {
    CHECK(zonal_character_oracle(Partition({2}), Partition({2, 1})) == 2);
    CHECK(zonal_character_oracle(Partition({1, 1, 1}), Partition({2, 1})) == 6);
    CHECK(zonal_character_oracle(Partition({3}), Partition({2, 1})) == -6);
    CHECK_THROWS_AS(zonal_character_oracle(Partition({3}), Partition({2})), validation_error);
}

TEST_CASE("pairing sum agrees with the oracle and the orbit formula") {
    for (int k = 1; k <= 3; ++k)
        for (const auto& mu : partitions_of(k))
            for (int n = k; n <= 4; ++n)
                for (const auto& lambda : partitions_of(n)) {
                    BigInt direct = zonal_character(mu, lambda);
                    CHECK(Rational(direct) == zonal_character_oracle(mu, lambda));
                    CHECK(direct == zonal_character_orbit_formula(mu, lambda));
                }
}

TEST_CASE("characters on mu = (1^k) are falling factorials of |lambda|") {
    for (int k = 1; k <= 4; ++k) {
        Partition mu(std::vector<int>(k, 1));
        for (int n = 0; n <= 5; ++n)
            for (const auto& lambda : partitions_of(n)) {
                BigInt expected = 1;
                for (int i = 0; i < k; ++i) expected *= n - i;
                CHECK(zonal_character(mu, lambda) == expected);
                CHECK(symplectic_character(mu, lambda) == Rational(expected));
            }
    }
}

TEST_CASE("orbit formula worked values") {
    CHECK(zonal_character_orbit_formula(Partition({2}), Partition({2, 1})) == 2);
    CHECK(zonal_character_orbit_formula(Partition({1}), Partition({3})) == 3);
    CHECK(zonal_character_orbit_formula(Partition({2}), Partition({1})) == 0);
}

TEST_CASE("the sum does not depend on the chosen couple of type mu") {
    std::mt19937 rng(1234321);
    for (int k = 1; k <= 3; ++k)
        for (const auto& mu : partitions_of(k)) {
            auto [s1, s2] = canonical_couple(mu);
            MultiRect lambda = MultiRect::of_partition(Partition({3, 1}));
            Rational reference = zonal_character_for_couple(s1, s2, lambda);
            for (int trial = 0; trial < 5; ++trial) {
                Permutation sigma = random_permutation(2 * k, rng);
                Rational other =
                    zonal_character_for_couple(s1.relabeled(sigma), s2.relabeled(sigma), lambda);
                CHECK(other == reference);
            }
        }
}

TEST_CASE("stanley polynomial for mu = (2) matches the three-term expression") {
    for (int m : {2, 3}) {
        PQPolynomial expected(m);
        for (int i = 1; i <= m; ++i) {
            expected += PQPolynomial::p(m, i) * PQPolynomial::q(m, i) * PQPolynomial::q(m, i) *
                        Rational(2);
            expected -= PQPolynomial::p(m, i) * PQPolynomial::q(m, i);
            for (int j = 1; j <= m; ++j)
                expected -= PQPolynomial::p(m, i) * PQPolynomial::p(m, j) *
                            PQPolynomial::q(m, std::max(i, j));
        }
        CHECK(stanley_polynomial(Partition({2}), m) == expected);
    }
}

TEST_CASE("stanley polynomial for mu = (1)") {
    PQPolynomial expected(1);
    expected += PQPolynomial::p(1, 1) * PQPolynomial::q(1, 1);
    CHECK(stanley_polynomial(Partition({1}), 1) == expected);
}

TEST_CASE("stanley evaluations match the character") {
    CHECK(stanley_polynomial(Partition({2}), 2).evaluate({1, 1}, {2, 1}) == 2);

    std::mt19937 rng(909090);
    int done = 0;
    while (done < 50) {
        int k = 1 + static_cast<int>(rng() % 4);
        auto mus = partitions_of(k);
        const Partition& mu = mus[rng() % mus.size()];
        int m = 1 + static_cast<int>(rng() % 3);
        std::vector<Rational> p, q;
        int top = 7;
        for (int i = 0; i < m; ++i) {
            p.push_back(1 + static_cast<int>(rng() % 2));
            top -= 1 + static_cast<int>(rng() % 2);
            q.push_back(top);
        }
        if (q.back() <= 0) continue;
        ++done;
        MultiRect lambda(p, q);
        CHECK(stanley_polynomial(mu, m).evaluate(p, q) == zonal_character(mu, lambda));
    }
}

TEST_CASE("stanley polynomials are stable under adding a rectangle") {
    for (int k = 1; k <= 4; ++k)
        for (const auto& mu : partitions_of(k))
            for (int m = 1; m <= 2; ++m)
                CHECK(stanley_polynomial(mu, m + 1).restricted(m) == stanley_polynomial(mu, m));
}

TEST_CASE("positivity of (-1)^|mu| Sigma(p,-q)") {
    auto report2 = stanley_positivity_report(Partition({2}));
    CHECK(report2.pass);
    // 2 sum p_i q_i^2 + sum_{i,j} p_i p_j q_max + sum p_i q_i, all plus signs
    PQPolynomial::ExpVec pq2{1, 0, 2, 0}; // p1 q1^2 in two variables
    CHECK(report2.transformed.coefficient(pq2) == 2);

    for (int k = 1; k <= 4; ++k)
        for (const auto& mu : partitions_of(k)) CHECK(stanley_positivity_report(mu).pass);
}

TEST_CASE("rational diagrams: polynomial route and pairing sum coincide") {
    // the character extends to rational multirectangular coordinates; both
    // evaluation routes must produce the same rational number
    std::vector<Rational> p{Rational(1, 2), Rational(3, 2)}, q{Rational(7, 3), Rational(1, 3)};
    MultiRect mr(p, q);
    for (int k = 1; k <= 3; ++k)
        for (const auto& mu : partitions_of(k))
            CHECK(stanley_polynomial(mu, 2).evaluate(p, q) == zonal_character(mu, mr));
}

TEST_CASE("pairing sums are deterministic across thread counts") {
    int saved = global_thread_count();
    global_thread_count() = 1;
    BigInt serial = zonal_character(Partition({3, 1}), Partition({3, 2}));
    Rational serial_rational = zonal_character(Partition({2, 2}), MultiRect::of_partition(Partition({4, 1})));
    global_thread_count() = 4;
    CHECK(zonal_character(Partition({3, 1}), Partition({3, 2})) == serial);
    CHECK(zonal_character(Partition({2, 2}), MultiRect::of_partition(Partition({4, 1}))) ==
          serial_rational);
    global_thread_count() = saved;
}

TEST_CASE("symplectic character duality") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n))
            CHECK(symplectic_character(Partition({1}), lambda) == lambda.weight());
    CHECK(symplectic_character(Partition({2}), Partition({2, 1})) == -1);
    CHECK(symplectic_character(Partition({2}), Partition({2})) == 1);
}

} // TEST_SUITE
