#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "springer/characters.hpp"
#include "springer/group_algebra.hpp"
#include "springer/tableau.hpp"

using namespace springer;

TEST_CASE("class data") {
    CHECK(class_size(Partition({1, 1, 1})) == 1);
    CHECK(class_size(Partition({3})) == 2);
    CHECK(class_size(Partition({2, 1})) == 3);
    for (int m = 1; m <= 6; ++m) {
        Int total = 0;
        for (const auto& ct : partitions_of(m)) {
            total += class_size(ct);
            CHECK(class_representative(ct).cycle_type() == ct);
        }
        CHECK(total == factorial(m));
    }
}

TEST_CASE("murnaghan-nakayama examples") {
    CHECK(mn_character(Partition({3}), Partition({2, 1})) == 1);
    CHECK(mn_character(Partition({1, 1, 1}), Partition({2, 1})) == -1);
    CHECK(mn_character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK_THROWS_AS(mn_character(Partition({2, 1}), Partition({2, 2})), invalid_input);
}

TEST_CASE("degree equals the standard tableau count") {
    for (int m = 1; m <= 6; ++m) {
        std::vector<int> ones(m, 1);
        Partition id(ones);
        for (const auto& lambda : partitions_of(m))
            CHECK(mn_character(lambda, id) == lambda.syt_count());
    }
}

TEST_CASE("trivial and sign characters") {
    for (int m = 1; m <= 6; ++m) {
        std::vector<int> ones(m, 1);
        for (const auto& ct : partitions_of(m)) {
            CHECK(mn_character(Partition({m}), ct) == 1);
            CHECK(mn_character(Partition(ones), ct) ==
                  class_representative(ct).sign());
        }
    }
}

TEST_CASE("orthogonality relations") {
    for (int m = 1; m <= 5; ++m) {
        auto lambdas = partitions_of(m);
        for (const auto& l1 : lambdas)
            for (const auto& l2 : lambdas) {
                Int acc = 0;
                for (const auto& ct : partitions_of(m))
                    acc += class_size(ct) * mn_character(l1, ct) * mn_character(l2, ct);
                CHECK(acc == (l1 == l2 ? factorial(m) : Int(0)));
            }
    }
}

TEST_CASE("permutation characters decompose with Kostka multiplicities") {
    // Independent route: the character of S_m acting on cosets of S_mu is
    // counted directly; it must equal sum_lambda K_{lambda,mu} chi_lambda.
    for (int m = 2; m <= 5; ++m) {
        for (const auto& mu : partitions_of(m)) {
            auto h = young_subgroup(mu);
            auto reps = coset_reps(h, m);
            for (const auto& ct : partitions_of(m)) {
                Perm g = class_representative(ct);
                // fixed cosets: rep r with r^{-1} g r in S_mu
                int fixed = 0;
                for (const auto& r : reps)
                    if (in_young_subgroup(r.inverse() * g * r, mu)) ++fixed;
                Int expected = 0;
                for (const auto& lambda : partitions_of(m)) {
                    Int kostka(static_cast<long>(
                        semistandard_tableaux(lambda, mu).size()));
                    expected += kostka * mn_character(lambda, ct);
                }
                CHECK(expected == fixed);
            }
        }
    }
}

TEST_CASE("class function inner product") {
    // <chi_lambda, chi_lambda> = 1 through the generic inner product helper
    int m = 4;
    std::map<Partition, Cyclotomic> a, b;
    for (const auto& ct : partitions_of(m)) {
        a[ct] = Cyclotomic(Rational(mn_character(Partition({2, 2}), ct)));
        b[ct] = Cyclotomic(Rational(mn_character(Partition({3, 1}), ct)));
    }
    CHECK(class_inner_product(m, a, a) == Cyclotomic(Rational(1)));
    CHECK(class_inner_product(m, a, b) == Cyclotomic(Rational(0)));
}
