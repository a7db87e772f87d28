#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "springer/errors.hpp"
#include "springer/tableau.hpp"

using namespace springer;

TEST_CASE("partition basics") {
    CHECK(Partition({2, 2, 1}).sum() == 5);
    CHECK(Partition({2, 2, 1}).conjugate() == Partition({3, 2}));
    CHECK(Partition({4, 2, 1}).conjugate().conjugate() == Partition({4, 2, 1}));
    CHECK_THROWS_AS(Partition({1, 2}), invalid_input);
    CHECK_THROWS_AS(Partition({2, 0}), invalid_input);
    CHECK(Partition({3, 3, 2}).n_value() == 0 * 3 + 1 * 3 + 2 * 2);

    auto ps = partitions_of(4);
    CHECK(ps.size() == 5);
    CHECK(ps.front() == Partition({4}));
    CHECK(ps.back() == Partition({1, 1, 1, 1}));
}

TEST_CASE("l-partitions") {
    CHECK(Partition({1, 1, 1}).is_l_partition(3));
    CHECK(Partition({2, 2, 1, 1}).is_l_partition(2));
    CHECK_FALSE(Partition({2, 1}).is_l_partition(2));
    CHECK(Partition({2, 1}).is_l_partition(1));
    CHECK(Partition({1, 1, 1, 1}).admissible_l() == std::vector<int>{1, 2, 4});
    CHECK(Partition({3, 2}).admissible_l() == std::vector<int>{1});
}

TEST_CASE("row reading numbering") {
    auto t = row_reading_numbering(Partition({2, 2, 1}));
    CHECK(t.rows == std::vector<std::vector<int>>{{1, 2}, {3, 4}, {5}});
    CHECK(row_reading_numbering(Partition({3})).rows ==
          std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(row_reading_numbering(Partition({1, 1, 1})).rows ==
          std::vector<std::vector<int>>{{1}, {2}, {3}});
    CHECK(t.is_standard());
    CHECK(t.str() == "[[1,2],[3,4],[5]]");
}

TEST_CASE("standard tableaux enumeration") {
    auto syt21 = standard_tableaux(Partition({2, 1}));
    REQUIRE(syt21.size() == 2);
    CHECK(syt21[0].rows == std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK(syt21[1].rows == std::vector<std::vector<int>>{{1, 3}, {2}});

    CHECK(standard_tableaux(Partition({4})).size() == 1);
    CHECK(standard_tableaux(Partition({2, 2})).size() == 2);

    // hook length formula cross-check for all shapes up to m = 6
    for (int m = 1; m <= 6; ++m)
        for (const auto& lambda : partitions_of(m)) {
            auto ts = standard_tableaux(lambda);
            CHECK(Int(static_cast<long>(ts.size())) == lambda.syt_count());
            for (const auto& t : ts) CHECK(t.is_standard());
            // enumeration is sorted and duplicate-free
            std::set<std::vector<int>> words;
            for (const auto& t : ts) words.insert(t.row_reading_word());
            CHECK(words.size() == ts.size());
        }
}

TEST_CASE("semistandard tableaux enumeration") {
    CHECK(semistandard_tableaux(Partition({2, 1}), Partition({1, 1, 1})).size() == 2);
    CHECK(semistandard_tableaux(Partition({1, 1, 1}), Partition({2, 1})).empty());
    // weight (n,n) on a two-row shape: always exactly one
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
            std::vector<int> shape{2 * n - k};
            if (k > 0) shape.push_back(k);
            auto ts = semistandard_tableaux(Partition(shape), Partition({n, n}));
            CHECK(ts.size() == 1);
        }
    // weight = shape: the unique tableau with constant rows
    auto ts = semistandard_tableaux(Partition({3, 2}), Partition({3, 2}));
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].rows == std::vector<std::vector<int>>{{1, 1, 1}, {2, 2}});
}

TEST_CASE("nu relabeling") {
    Tableau q1(Partition({2, 1}), {{1, 2}, {3}});
    CHECK(nu_compose(q1, Partition({2, 1})).rows ==
          std::vector<std::vector<int>>{{1, 1}, {2}});
    Tableau q2(Partition({2, 1}), {{1, 3}, {2}});
    CHECK(nu_compose(q2, Partition({2, 1})).rows ==
          std::vector<std::vector<int>>{{1, 2}, {1}});
    // t_mu relabels to constant rows equal to the row index
    for (const auto& mu : partitions_of(5)) {
        auto t = row_reading_numbering(mu);
        auto relabeled = nu_compose(t, mu);
        for (int r = 0; r < mu.length(); ++r)
            for (int c = 0; c < mu.parts[r]; ++c) CHECK(relabeled.at(r, c) == r + 1);
    }
}

TEST_CASE("standardize examples") {
    Tableau t(Partition({2, 1}), {{1, 1}, {2}});
    auto q = standardize(t, Partition({2, 1}));
    CHECK(q.rows == std::vector<std::vector<int>>{{1, 2}, {3}});
    // brute force: q is the only standard preimage here
    int preimages = 0;
    for (const auto& cand : standard_tableaux(Partition({2, 1})))
        if (nu_compose(cand, Partition({2, 1})) == t) ++preimages;
    CHECK(preimages == 1);

    // weight mismatch rejected
    Tableau bad(Partition({2, 1}), {{1, 2}, {2}});
    CHECK_THROWS_AS(standardize(bad, Partition({2, 1})), invalid_input);

    // t' pattern [1,1,2]/[2] with mu = (2,2): the cells carrying 2 sit in
    // columns 0 and 2, so left-to-right numbering puts 3 into the second row,
    // giving t'_{(3,1)}. (Two standard preimages exist; the rule picks this one.)
    Tableau tp(Partition({3, 1}), {{1, 1, 2}, {2}});
    auto qp = standardize(tp, Partition({2, 2}));
    CHECK(qp.rows == std::vector<std::vector<int>>{{1, 2, 4}, {3}});
    CHECK(qp == two_row_tableau(2, 1));
    int preimages31 = 0;
    for (const auto& cand : standard_tableaux(Partition({3, 1})))
        if (nu_compose(cand, Partition({2, 2})) == tp) ++preimages31;
    CHECK(preimages31 == 2);
}

TEST_CASE("standardize is a section of nu over all small cases") {
    for (int m = 1; m <= 5; ++m)
        for (const auto& lambda : partitions_of(m))
            for (const auto& mu : partitions_of(m)) {
                std::vector<int> w(mu.parts.begin(), mu.parts.end());
                for (const auto& t : semistandard_tableaux(lambda, mu)) {
                    auto q = standardize(t, mu);
                    CHECK(q.is_standard());
                    CHECK(nu_compose(q, mu) == t);
                    CHECK(standardize(nu_compose(q, mu), mu) == q);
                }
            }
}

TEST_CASE("two-row tableaux") {
    CHECK(two_row_tableau(2, 1).rows == std::vector<std::vector<int>>{{1, 2, 4}, {3}});
    CHECK(two_row_tableau(2, 0).rows == std::vector<std::vector<int>>{{1, 2, 3, 4}});
    CHECK(two_row_tableau(3, 2).rows ==
          std::vector<std::vector<int>>{{1, 2, 3, 6}, {4, 5}});
    CHECK_THROWS_AS(two_row_tableau(2, 3), invalid_input);
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) CHECK(two_row_tableau(n, k).is_standard());

    // t' equals the standardization of the unique SSYT of weight (n,n)
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
            std::vector<int> shape{2 * n - k};
            if (k > 0) shape.push_back(k);
            auto ssyt = semistandard_tableaux(Partition(shape), Partition({n, n}));
            REQUIRE(ssyt.size() == 1);
            CHECK(standardize(ssyt[0], Partition({n, n})) == two_row_tableau(n, k));
        }
}
