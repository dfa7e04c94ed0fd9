#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gqpieri/enumerate.hpp"
#include "gqpieri/pieri.hpp"
#include "gqpieri/shapes.hpp"

namespace gqpieri {

struct SweepConfig {
    int max_part = 5;
    int max_len = 3;
    int max_p = 5;
    int jobs = 1;
    bool fail_fast = false;
};

struct Mismatch {
    StrictPartition lambda;
    StrictPartition mu;
    int p = 0;
    long long sdt = 0;
    long long rec = 0;
    auto operator<=>(const Mismatch&) const = default;
};

struct VerificationReport {
    long long checked = 0;  // (lambda, mu, p) triples compared
    std::vector<Mismatch> mismatches;
    std::chrono::duration<double> elapsed{};

    bool passed() const { return mismatches.empty(); }
    // one record per mismatch: "lambda=... mu=... p=... sdt=... rec=..."
    std::string str() const;
};

using CoefficientFn = std::function<long long(const CellSet&, int)>;

// Compares |SDT(mu, lambda, p)| from enumeration against the recursion value
// for every nonempty strict lambda in the box, every p <= max_p, and every mu
// in candidate_shapes plus a one-layer boundary shell around it. An injected
// coefficient function replaces the recursion (harness self-test).
VerificationReport check_theorem(const SweepConfig& config,
                                 CoefficientFn coefficient = {});

// The mu ring just outside the candidate box: mu_1 = lambda_1 + p + 2 or
// l(mu) = l(lambda) + 3, within one step of the candidate bounds.
std::vector<StrictPartition> boundary_shell(const StrictPartition& lambda, int p);

// sum_nu c^nu_{lambda,p} c^mu_{nu,q} is symmetric in p and q for every mu
// reachable in two expansion steps.
bool check_commutativity(const StrictPartition& lambda, int p, int q);

struct LemmaAuditReport {
    long long tableaux_audited = 0;
    long long shapes_checked = 0;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

// Structural audits over every enumerated tableau of SDT(mu, lambda, p) for
// mu in candidate_shapes:
//  - the values lambda_k - 2, ..., 0 occupy row k = l(lambda) consecutively;
//  - large entries (> lambda_1) and displaced small entries (= lambda_i - 1
//    outside row i) are weakly increasing along the reading word;
// plus: |SDT| = 0 whenever mu/lambda is not a rim (non-rim mu in the box).
LemmaAuditReport audit_lemmas(const StrictPartition& lambda, int p);

struct ConjectureRow {
    StrictPartition mu;
    long long count = 0;
    int beta = 0;  // |mu| - |lambda| - ab
};

struct ConjectureTable {
    StrictPartition lambda;
    int a = 0;
    int b = 0;
    int n = 0;
    int max_cells = 0;
    std::vector<ConjectureRow> rows;
    // set when a == 1: term-by-term agreement with pieri_expansion(lambda, b)
    std::optional<bool> matches_pieri;
};

// Data for the trapezoid product GQ_lambda * GQ_tau(a,b): SDT counts over all
// shapes with at most max_cells cells (default: enough to cover the a = 1
// support). For a = 1 the table is checked against the Pieri expansion; for
// a > 1 it is data generation only.
ConjectureTable conjecture_table(const StrictPartition& lambda, int a, int b,
                                 int max_cells = -1);

}  // namespace gqpieri
