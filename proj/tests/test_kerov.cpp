#include <doctest.h>

#include "zonalkit/kerov.hpp"

using namespace zonalkit;

namespace {

KerovPolynomial kpoly(std::initializer_list<std::pair<std::vector<int>, Rational>> terms) {
    KerovPolynomial k;
    for (const auto& [s, c] : terms) k.add_term(s, c);
    return k;
}

} // namespace

TEST_SUITE("kerov") {

TEST_CASE("loop counting for mu = (2)") {
    CHECK(kerov_count(Partition({2}), {1}) == 1);    // s_2 = 1
    CHECK(kerov_count(Partition({2}), {0, 1}) == 1); // s_3 = 1
    CHECK(kerov_count(Partition({2}), {2}) == 0);    // s_2 = 2
    CHECK(kerov_count(Partition({2}), {}) == 0);
    CHECK_THROWS_AS(kerov_count(Partition({3, 3}), {1}), capacity_error);
}

TEST_CASE("dropping the marriage condition never decreases the count") {
    for (const auto& mu : {Partition({2}), Partition({3}), Partition({2, 1})})
        for (const auto& s : {std::vector<int>{1}, std::vector<int>{2}, std::vector<int>{0, 1},
                              std::vector<int>{1, 1}, std::vector<int>{3}})
            CHECK(kerov_count(mu, s, kKerovCapacity, false) >= kerov_count(mu, s));
}

TEST_CASE("worked kerov polynomials") {
    CHECK(kerov_polynomial_combinatorial(Partition({2})) ==
          kpoly({{{1}, -2}, {{0, 1}, 4}}));                            // 4 R3 - 2 R2
    CHECK(kerov_polynomial_combinatorial(Partition({1})) == kpoly({{{1}, 2}})); // 2 R2
    CHECK(kerov_polynomial_combinatorial(Partition({2})).to_string() == "4*R3 - 2*R2");
}

TEST_CASE("oracle reproduces the small polynomials") {
    CHECK(kerov_oracle(1) == kpoly({{{1}, 2}}));
    CHECK(kerov_oracle(2) == kpoly({{{1}, -2}, {{0, 1}, 4}}));
}

TEST_CASE("counting route equals the oracle for one-part mu") {
    for (int k = 1; k <= 3; ++k)
        CHECK(kerov_polynomial_combinatorial(Partition({k})) == kerov_oracle(k));
}

TEST_CASE("counting route equals the oracle for k = 4") {
    CHECK(kerov_polynomial_combinatorial(Partition({4})) == kerov_oracle(4));
}

TEST_CASE("evaluation identity on cycles") {
    for (int k = 1; k <= 3; ++k) {
        KerovPolynomial kp = kerov_polynomial_combinatorial(Partition({k}));
        for (int n = 0; n <= 4; ++n)
            for (const auto& lambda : partitions_of(n)) {
                auto r = anisotropic_cumulants(MultiRect::of_partition(lambda), 2, k + 1);
                CHECK(kp.evaluate(r) == Rational(zonal_character(Partition({k}), lambda)));
            }
    }
}

TEST_CASE("evaluation identity at the capacity edge") {
    // k = 5 exceeds the oracle's range, so this is the strongest check the
    // counting route gets there
    for (int k : {4, 5}) {
        KerovPolynomial kp = kerov_polynomial_combinatorial(Partition({k}));
        for (int n = 0; n <= 5; ++n)
            for (const auto& lambda : partitions_of(n)) {
                auto r = anisotropic_cumulants(MultiRect::of_partition(lambda), 2, k + 1);
                CHECK(kp.evaluate(r) == Rational(zonal_character(Partition({k}), lambda)));
            }
    }
}

TEST_CASE("weight bound and the top term") {
    for (int k = 1; k <= 4; ++k) {
        KerovPolynomial kp = kerov_polynomial_combinatorial(Partition({k}));
        for (const auto& [s, c] : kp.terms()) CHECK(KerovPolynomial::weight(s) <= k + 1);
    }
    // the unique weight-3 term of K_(2) is 4 R3
    KerovPolynomial k2 = kerov_polynomial_combinatorial(Partition({2}));
    for (const auto& [s, c] : k2.terms())
        if (KerovPolynomial::weight(s) == 3) CHECK(c == 4);
    CHECK(k2.coefficient({0, 1}) == 4);
}

TEST_CASE("symplectic kerov polynomials") {
    CHECK(symplectic_kerov(Partition({2})) ==
          kpoly({{{1}, Rational(1, 4)}, {{0, 1}, Rational(1, 4)}}));
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : partitions_of(n)) {
            KerovPolynomial kp = symplectic_kerov(mu);
            for (const auto& [s, c] : kp.terms()) CHECK(c > 0);
        }
}

TEST_CASE("symplectic evaluation identity on cycles") {
    for (int k = 1; k <= 3; ++k) {
        KerovPolynomial kp = symplectic_kerov(Partition({k}));
        for (int n = 0; n <= 5; ++n)
            for (const auto& lambda : partitions_of(n)) {
                auto r =
                    anisotropic_cumulants(MultiRect::of_partition(lambda), Rational(1, 2), k + 1);
                CHECK(kp.evaluate(r) == symplectic_character(Partition({k}), lambda));
            }
    }
}

TEST_CASE("symplectic rescaling of the zonal polynomial matches the direct count") {
    for (int k = 1; k <= 3; ++k)
        CHECK(symplectic_from_zonal_kerov(kerov_oracle(k), Partition({k})) ==
              symplectic_kerov(Partition({k})));
    for (const auto& mu : {Partition({2, 1}), Partition({1, 1})})
        CHECK(symplectic_from_zonal_kerov(kerov_polynomial_combinatorial(mu), mu) ==
              symplectic_kerov(mu));
}

TEST_CASE("kerov counting parallelizes deterministically") {
    int saved = global_thread_count();
    global_thread_count() = 3;
    CHECK(kerov_polynomial_combinatorial(Partition({4})) == kerov_oracle(4));
    global_thread_count() = saved;
}

TEST_CASE("integrality and divisibility report") {
    auto rep2 = kerov_integrality_report(Partition({2}));
    CHECK(rep2.pass);
    CHECK(rep2.polynomial.coefficient({1}) == -2);   // divisible by 2^1
    CHECK(rep2.polynomial.coefficient({0, 1}) == 4); // divisible by 2^2

    auto rep1 = kerov_integrality_report(Partition({1}));
    CHECK(rep1.pass);
    CHECK(rep1.polynomial.coefficient({1}) == 2);

    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : partitions_of(n)) CHECK(kerov_integrality_report(mu).pass);
}

TEST_CASE("kerov polynomial evaluation guards") {
    KerovPolynomial kp = kerov_polynomial_combinatorial(Partition({2}));
    CHECK_THROWS_AS(kp.evaluate({0, 0, 1}), validation_error); // R_3 missing
}

} // TEST_SUITE
