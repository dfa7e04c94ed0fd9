#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gqpieri/hecke.hpp"
#include "gqpieri/shapes.hpp"
#include "gqpieri/tableaux.hpp"

namespace gqpieri {

struct SdtQuery {
    StrictPartition shape;
    SignedPermutation target;
    // Letters range over 0..max_letter; -1 means window size minus one, which
    // is exact: no Hecke word of the target can use a larger letter.
    int max_letter = -1;
};

struct EnumerateOptions {
    bool keep_tableaux = false;
    std::size_t limit = 1u << 20;  // retention cap in list mode
    int jobs = 1;                  // split on the first cell across workers
    bool bruhat_pruning = true;    // prune prefixes not below the target
};

struct EnumerationReport {
    long long count = 0;
    std::optional<std::vector<ShiftedTableau>> tableaux;
    bool truncated = false;
    long long nodes_explored = 0;
    std::chrono::duration<double> elapsed{};
};

// All SDT of the given shape whose reading word is a Hecke word for the
// target, filled in reading order with letters tried in ascending order, so
// list output is ordered lexicographically by reading word.
EnumerationReport enumerate_sdt(const SdtQuery& query,
                                const EnumerateOptions& options = {});

// Target w(lambda, 1, p) of the Pieri rule; n = lambda_1 (n = 1 when empty).
SignedPermutation pieri_target(const StrictPartition& lambda, int p);

// |SDT(mu, lambda, p)|. Throws InvalidArgs for p < 1.
long long sdt_count_pieri(const StrictPartition& mu, const StrictPartition& lambda,
                          int p);

// Counts of SDT of every shape with at most max_cells cells whose reading
// word is a Hecke word for w(lambda, a, b, n); zero counts are omitted.
// n = -1 means the paper convention n = lambda_1 (1 when lambda is empty).
std::map<StrictPartition, long long> sdt_profile(const StrictPartition& lambda,
                                                 int a, int b, int max_cells,
                                                 int n = -1);

// Correctness oracle: plain Cartesian scan over all fillings, filtered by
// is_sdt_direct and product equality. Guarded: |mu| <= 9 and alphabet <= 6.
EnumerationReport naive_enumerate(const SdtQuery& query);

}  // namespace gqpieri
