#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gqpieri/enumerate.hpp"
#include "support.hpp"

using namespace gqpieri;

TEST_CASE("the three tableaux for -2,3,1 across all shapes with <= 4 cells") {
    SignedPermutation w = SignedPermutation::parse("-2,3,1");
    std::vector<ShiftedTableau> all;
    for (int cells = 1; cells <= 4; ++cells) {
        for (const StrictPartition& mu : strict_partitions_of_weight(cells)) {
            EnumerateOptions opt;
            opt.keep_tableaux = true;
            auto rep = enumerate_sdt({mu, w}, opt);
            CHECK(rep.count == static_cast<long long>(rep.tableaux->size()));
            for (auto& t : *rep.tableaux) all.push_back(std::move(t));
        }
    }
    REQUIRE(all.size() == 3);
    CHECK(all[0] == ShiftedTableau::parse("1,0,2"));
    CHECK(all[1] == ShiftedTableau::parse("2,0;1"));
    CHECK(all[2] == ShiftedTableau::parse("2,0,2;1"));
}

TEST_CASE("pieri targets") {
    CHECK(pieri_target(StrictPartition({5, 1}), 4).window() ==
          std::vector<int>{-5, -1, 2, 3, 4, 7, 8, 9, 10, 6});
    CHECK(pieri_target(StrictPartition{}, 1).window() == std::vector<int>{1, 3, 2});
    CHECK_THROWS_AS(pieri_target(StrictPartition({1}), 0), InvalidArgs);
}

TEST_CASE("pieri counts from the worked examples") {
    CHECK(sdt_count_pieri(StrictPartition({6, 3, 2, 1}), StrictPartition({6, 2, 1}), 3) == 1);
    CHECK(sdt_count_pieri(StrictPartition({6, 3, 2, 1}), StrictPartition({6, 2, 1}), 2) == 1);
    CHECK(sdt_count_pieri(StrictPartition({5, 4, 3}), StrictPartition({5, 4}), 3) == 1);

    // The column example: a column of size 3 above inner shape (5,4,3,1).
    CHECK(sdt_count_pieri(StrictPartition({6, 5, 4, 1}), StrictPartition({5, 4, 3, 1}), 3) == 2);
    CHECK(sdt_count_pieri(StrictPartition({6, 5, 4, 1}), StrictPartition({5, 4, 3, 1}), 2) == 1);
    // With inner shape (6,4,3,1) the skew column has only two cells, so the
    // counts shift: p = 3 dies on the word-length bound |mu| < l(w).
    CHECK(sdt_count_pieri(StrictPartition({6, 5, 4, 1}), StrictPartition({6, 4, 3, 1}), 3) == 0);
    CHECK(sdt_count_pieri(StrictPartition({6, 5, 4, 1}), StrictPartition({6, 4, 3, 1}), 2) == 2);
    CHECK(sdt_count_pieri(StrictPartition({6, 5, 4, 1}), StrictPartition({6, 4, 3, 1}), 1) == 1);

    CHECK(sdt_count_pieri(StrictPartition({6, 3, 1}), StrictPartition({5, 1}), 4) == 2);
    CHECK_THROWS_AS(sdt_count_pieri(StrictPartition({2}), StrictPartition({1}), 0),
                    InvalidArgs);
}

TEST_CASE("two fillings of a single row pair") {
    // brute force over all 2-cell fillings with letters < 3 (oracle first)
    auto naive = naive_enumerate({StrictPartition({2}), pieri_target(StrictPartition({1}), 1)});
    CHECK(naive.count == 2);
    CHECK(sdt_count_pieri(StrictPartition({2}), StrictPartition({1}), 1) == 2);
}

TEST_CASE("word length necessity") {
    for (const StrictPartition& lambda : strict_partitions_in_box(3, 2)) {
        if (lambda.empty()) continue;
        for (int p = 1; p <= 3; ++p) {
            SignedPermutation w = pieri_target(lambda, p);
            int lw = coxeter_length(w);
            for (const StrictPartition& mu : strict_partitions_of_weight(lw - 1))
                CHECK(enumerate_sdt({mu, w}).count == 0);
        }
    }
}

TEST_CASE("empty shape") {
    CHECK(enumerate_sdt({StrictPartition{}, SignedPermutation::identity(2)}).count == 1);
    CHECK(enumerate_sdt({StrictPartition{}, SignedPermutation::parse("2,1")}).count == 0);
}

TEST_CASE("profile of the trapezoid target") {
    auto profile = sdt_profile(StrictPartition({2, 1}), 3, 3, 12);
    REQUIRE(profile.count(StrictPartition({5, 4, 3})));
    CHECK(profile.at(StrictPartition({5, 4, 3})) == 4);

    auto tiny = sdt_profile(StrictPartition{}, 1, 1, 2);
    REQUIRE(tiny.count(StrictPartition({1})));
    CHECK(tiny.at(StrictPartition({1})) == 1);
    CHECK(tiny.size() == 1);
}

TEST_CASE("empty inner shape follows the n = 1 convention") {
    // single-row shapes reproduce the base coefficients: delta(p, m)
    for (int p = 1; p <= 3; ++p)
        for (int m = p; m <= p + 2; ++m)
            CHECK(sdt_count_pieri(StrictPartition({m}), StrictPartition{}, p) ==
                  (m == p ? 1 : 0));
    // multi-row shapes above the empty shape carry nothing
    CHECK(sdt_count_pieri(StrictPartition({2, 1}), StrictPartition{}, 2) == 0);
    CHECK(sdt_count_pieri(StrictPartition({3, 1}), StrictPartition{}, 2) == 0);
}

TEST_CASE("naive oracle examples and guard") {
    SignedPermutation w = SignedPermutation::parse("-2,3,1");
    auto a = naive_enumerate({StrictPartition({2, 1}), w});
    auto b = enumerate_sdt({StrictPartition({2, 1}), w});
    CHECK(a.count == b.count);
    CHECK(naive_enumerate({StrictPartition({3}), w}).count == 1);
    CHECK(naive_enumerate({StrictPartition({1}), SignedPermutation::identity(2)}).count == 0);
    CHECK_THROWS_AS(naive_enumerate({StrictPartition({5, 4, 1}),
                                     SignedPermutation::identity(4)}),
                    TooLarge);
    CHECK_THROWS_AS(naive_enumerate({StrictPartition({3}),
                                     SignedPermutation::identity(8)}),
                    TooLarge);
}

TEST_CASE("oracle agreement across W_3") {
    for (const auto& w : testsupport::whole_group(3)) {
        for (int cells = 0; cells <= 6; ++cells) {
            for (const StrictPartition& mu : strict_partitions_of_weight(cells)) {
                EnumerateOptions opt;
                opt.keep_tableaux = true;
                auto fast = enumerate_sdt({mu, w}, opt);
                auto slow = naive_enumerate({mu, w});
                CHECK(fast.count == slow.count);
                CHECK(*fast.tableaux == *slow.tableaux);
            }
        }
    }
}

TEST_CASE("list mode limit and truncation") {
    SignedPermutation w = pieri_target(StrictPartition({2, 1}), 2);
    StrictPartition mu({3, 2});
    EnumerateOptions all;
    all.keep_tableaux = true;
    auto full = enumerate_sdt({mu, w}, all);
    REQUIRE(full.count > 1);
    CHECK_FALSE(full.truncated);

    EnumerateOptions capped;
    capped.keep_tableaux = true;
    capped.limit = 1;
    auto cut = enumerate_sdt({mu, w}, capped);
    CHECK(cut.count == full.count);
    CHECK(cut.truncated);
    REQUIRE(cut.tableaux->size() == 1);
    CHECK(cut.tableaux->front() == full.tableaux->front());
}

TEST_CASE("worker split leaves results unchanged") {
    StrictPartition lambda({3, 1});
    for (int p = 1; p <= 3; ++p) {
        SignedPermutation w = pieri_target(lambda, p);
        for (const StrictPartition& mu :
             {StrictPartition({4, 2}), StrictPartition({5, 3, 1}), StrictPartition({4, 3, 1})}) {
            EnumerateOptions serial, parallel;
            serial.keep_tableaux = parallel.keep_tableaux = true;
            parallel.jobs = 3;
            auto a = enumerate_sdt({mu, w}, serial);
            auto b = enumerate_sdt({mu, w}, parallel);
            CHECK(a.count == b.count);
            CHECK(*a.tableaux == *b.tableaux);
        }
    }
}

TEST_CASE("explicit alphabet bound") {
    // restricting the alphabet below the window size only removes tableaux
    SignedPermutation w = pieri_target(StrictPartition({1}), 1);
    SdtQuery narrow{StrictPartition({2}), w, 1};  // letters 0..1 only
    CHECK(enumerate_sdt(narrow).count == 0);      // both fillings use letter 2
    SdtQuery wide{StrictPartition({2}), w, 2};
    CHECK(enumerate_sdt(wide).count == 2);
}
