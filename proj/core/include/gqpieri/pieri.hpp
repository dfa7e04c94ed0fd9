#pragma once

#include <vector>

#include "gqpieri/shapes.hpp"

namespace gqpieri {

// Pieri coefficient C(theta, p), defined by the six-case recursion that peels
// north-east arms off the rim theta:
//   (a) 0 if theta is not a rim in the symmetric double of the shifted plane
//       (a plain 2x2 square of cells, or a diagonal elbow
//       {(r,r),(r,r+1),(r+1,r+1)} whose mirror image completes a square);
//       for p <= 0 the value is 1 iff theta is empty; 0 for p > 0, theta empty;
//   (b) theta a column meeting the diagonal: d(p,|theta|) + d(p,|theta|-1);
//       theta a row meeting the diagonal: d(p,|theta|);
//   (c) theta a row or column disjoint from the diagonal:
//       2 d(p,|theta|) + d(p,|theta|-1);
//   (d) arm of size a connected to the remainder:   C(rem,p-a) + C(rem,p-a+1);
//   (e) arm of size 1 not connected:               2 C(rem,p-1) + 2 C(rem,p);
//   (f) arm of size a > 1 not connected:
//       2 C(rem,p-a) + 3 C(rem,p-a+1) + C(rem,p-a+2).
// Memoized on the exact cell set; thread safe.
long long pieri_coefficient(const CellSet& theta, int p);
long long pieri_coefficient(const SkewShape& theta, int p);

// Finite superset of the support of the expansion of GQ_lambda * GQ_p:
// strict mu containing lambda with mu/lambda a rim, mu_1 <= lambda_1 + p + 1
// and l(mu) <= l(lambda) + 2.
std::vector<StrictPartition> candidate_shapes(const StrictPartition& lambda, int p);

struct PieriTerm {
    StrictPartition mu;
    long long coeff = 0;
    int beta = 0;  // |mu| - |lambda| - p
    auto operator<=>(const PieriTerm&) const = default;
};

struct PieriExpansion {
    StrictPartition lambda;
    int p = 0;
    // nonzero terms, sorted by |mu| then lexicographically by mu
    std::vector<PieriTerm> terms;
};

// GQ_lambda * GQ_p = sum over mu of C(mu/lambda, p) beta^{|mu|-|lambda|-p} GQ_mu.
// The empty lambda indexes the unit, so that product is the single term GQ_p.
PieriExpansion pieri_expansion(const StrictPartition& lambda, int p);

// Strict mu containing lambda with mu_1 <= max_part and l(mu) <= max_len.
std::vector<StrictPartition> shapes_containing(const StrictPartition& lambda,
                                               int max_part, int max_len);

}  // namespace gqpieri
