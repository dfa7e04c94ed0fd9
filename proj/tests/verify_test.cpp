#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gqpieri/verify.hpp"

using namespace gqpieri;

TEST_CASE("smoke sweep") {
    SweepConfig cfg;
    cfg.max_part = 2;
    cfg.max_len = 1;
    cfg.max_p = 2;
    VerificationReport report = check_theorem(cfg);
    CHECK(report.passed());
    CHECK(report.checked >= 20);
    CHECK(report.str().find("mismatches=0") != std::string::npos);
}

TEST_CASE("harness flags an injected defect") {
    SweepConfig cfg;
    cfg.max_part = 2;
    cfg.max_len = 1;
    cfg.max_p = 1;
    cfg.fail_fast = true;
    VerificationReport report =
        check_theorem(cfg, [](const CellSet&, int) -> long long { return 7; });
    CHECK_FALSE(report.passed());
    CHECK(report.mismatches.size() >= 1);
    const Mismatch& m = report.mismatches.front();
    CHECK(m.rec == 7);
    std::string line = report.str();
    CHECK(line.find("rec=7") != std::string::npos);
    CHECK(line.find("lambda=") != std::string::npos);
}

TEST_CASE("parallel sweep agrees with the serial one") {
    SweepConfig serial, parallel;
    serial.max_part = parallel.max_part = 3;
    serial.max_len = parallel.max_len = 2;
    serial.max_p = parallel.max_p = 3;
    parallel.jobs = 4;
    auto a = check_theorem(serial);
    auto b = check_theorem(parallel);
    CHECK(a.checked == b.checked);
    CHECK(a.mismatches == b.mismatches);
    CHECK(a.passed());
}

TEST_CASE("boundary shell sits just outside the candidate box") {
    StrictPartition lambda({2, 1});
    int p = 2;
    for (const StrictPartition& mu : boundary_shell(lambda, p)) {
        CHECK(mu.contains(lambda));
        bool at_part = mu.part(1) == lambda.part(1) + p + 2;
        bool at_len = mu.length() == lambda.length() + 3;
        CHECK((at_part || at_len));
    }
    CHECK_FALSE(boundary_shell(lambda, p).empty());
}

TEST_CASE("commutativity of the structure constants") {
    CHECK(check_commutativity(StrictPartition({1}), 1, 2));
    CHECK(check_commutativity(StrictPartition({3, 1}), 2, 2));
    CHECK(check_commutativity(StrictPartition{}, 1, 2));
    CHECK(check_commutativity(StrictPartition({3}), 2, 3));
    CHECK(check_commutativity(StrictPartition({2, 1}), 3, 1));
    CHECK_THROWS_AS(check_commutativity(StrictPartition({1}), 0, 1), InvalidArgs);
}

TEST_CASE("lemma audits") {
    LemmaAuditReport r1 = audit_lemmas(StrictPartition({6, 2, 1}), 3);
    CHECK(r1.passed());
    CHECK(r1.tableaux_audited >= 1);

    LemmaAuditReport r2 = audit_lemmas(StrictPartition({5, 1}), 4);
    CHECK(r2.passed());
    CHECK(r2.tableaux_audited >= 2);

    // non-rim shapes are part of the audit and must come out empty;
    // (5,4)/(3,2) is the canonical non-rim example
    LemmaAuditReport r3 = audit_lemmas(StrictPartition({3, 2}), 2);
    CHECK(r3.passed());
    CHECK(r3.shapes_checked >= 2);
}

TEST_CASE("conjecture tables") {
    ConjectureTable trapezoidal = conjecture_table(StrictPartition({2, 1}), 3, 3, 12);
    bool found = false;
    for (const ConjectureRow& row : trapezoidal.rows)
        if (row.mu == StrictPartition({5, 4, 3})) {
            found = true;
            CHECK(row.count == 4);
            CHECK(row.beta == 0);
        }
    CHECK(found);
    CHECK_FALSE(trapezoidal.matches_pieri.has_value());  // a > 1: data only

    ConjectureTable pieri_like = conjecture_table(StrictPartition({5, 1}), 1, 4);
    REQUIRE(pieri_like.matches_pieri.has_value());
    CHECK(*pieri_like.matches_pieri);

    ConjectureTable small = conjecture_table(StrictPartition({1}), 2, 2);
    CHECK_FALSE(small.rows.empty());
    for (const ConjectureRow& row : small.rows)
        CHECK(row.beta == row.mu.weight() - 1 - 4);

    CHECK_THROWS_AS(conjecture_table(StrictPartition({1}), 2, 1), InvalidArgs);
}

TEST_CASE("restriction to one-row trapezoids reproduces the expansion") {
    for (const StrictPartition& lambda : strict_partitions_in_box(3, 2)) {
        if (lambda.empty()) continue;
        for (int b = 1; b <= 3; ++b) {
            ConjectureTable table = conjecture_table(lambda, 1, b);
            REQUIRE(table.matches_pieri.has_value());
            CHECK(*table.matches_pieri);
        }
    }
}
