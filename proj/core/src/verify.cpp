#include "gqpieri/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace gqpieri {

std::string VerificationReport::str() const {
    std::string out;
    for (const Mismatch& m : mismatches) {
        out += "lambda=" + m.lambda.str() + " mu=" + m.mu.str() +
               " p=" + std::to_string(m.p) + " sdt=" + std::to_string(m.sdt) +
               " rec=" + std::to_string(m.rec) + "\n";
    }
    out += "checked=" + std::to_string(checked) +
           " mismatches=" + std::to_string(mismatches.size()) + " elapsed=" +
           std::to_string(elapsed.count()) + "s\n";
    return out;
}

std::vector<StrictPartition> boundary_shell(const StrictPartition& lambda, int p) {
    int part_bound = lambda.part(1) + p + 1;
    int len_bound = static_cast<int>(lambda.length()) + 2;
    std::vector<StrictPartition> out;
    for (StrictPartition& mu :
         shapes_containing(lambda, part_bound + 1, len_bound + 1)) {
        if (mu.part(1) == part_bound + 1 ||
            static_cast<int>(mu.length()) == len_bound + 1)
            out.push_back(std::move(mu));
    }
    return out;
}

VerificationReport check_theorem(const SweepConfig& config,
                                 CoefficientFn coefficient) {
    auto start = std::chrono::steady_clock::now();
    if (!coefficient)
        coefficient = [](const CellSet& theta, int p) {
            return pieri_coefficient(theta, p);
        };

    // The empty lambda enters with the convention n = 1 for its target.
    std::vector<std::pair<StrictPartition, int>> tasks;
    for (const StrictPartition& lambda :
         strict_partitions_in_box(config.max_part, config.max_len)) {
        for (int p = 1; p <= config.max_p; ++p) tasks.emplace_back(lambda, p);
    }

    int jobs = std::max(1, config.jobs);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::vector<VerificationReport> partial(static_cast<std::size_t>(jobs));

    auto worker = [&](int id) {
        VerificationReport& report = partial[static_cast<std::size_t>(id)];
        for (;;) {
            std::size_t at = next.fetch_add(1);
            if (at >= tasks.size() || stop.load()) return;
            const auto& [lambda, p] = tasks[at];
            std::vector<StrictPartition> shapes = candidate_shapes(lambda, p);
            std::vector<StrictPartition> shell = boundary_shell(lambda, p);
            shapes.insert(shapes.end(), shell.begin(), shell.end());
            for (const StrictPartition& mu : shapes) {
                long long sdt = sdt_count_pieri(mu, lambda, p);
                long long rec = coefficient(SkewShape(mu, lambda).cells(), p);
                ++report.checked;
                if (sdt != rec) {
                    report.mismatches.push_back({lambda, mu, p, sdt, rec});
                    if (config.fail_fast) {
                        stop.store(true);
                        return;
                    }
                }
            }
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
        for (auto& th : threads) th.join();
    }

    VerificationReport report;
    for (auto& part : partial) {
        report.checked += part.checked;
        report.mismatches.insert(report.mismatches.end(),
                                 part.mismatches.begin(), part.mismatches.end());
    }
    std::sort(report.mismatches.begin(), report.mismatches.end());
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

bool check_commutativity(const StrictPartition& lambda, int p, int q) {
    if (p < 1 || q < 1) throw InvalidArgs("check_commutativity: need p, q >= 1");
    auto two_step = [&](int first, int second) {
        std::map<StrictPartition, long long> acc;
        for (const PieriTerm& t1 : pieri_expansion(lambda, first).terms)
            for (const PieriTerm& t2 : pieri_expansion(t1.mu, second).terms)
                acc[t2.mu] += t1.coeff * t2.coeff;
        return acc;
    };
    return two_step(p, q) == two_step(q, p);
}

namespace {

// Entry classification relative to lambda. An entry e of row r is large when
// e > lambda_1. It is a displaced small entry when e = lambda_i - 1 for some i
// and e >= lambda_r, i.e. the value is too big to belong to row r's own run.
bool is_large(int e, const StrictPartition& lambda) { return e > lambda.part(1); }

bool is_small(int e, int row, const StrictPartition& lambda) {
    if (e < lambda.part(static_cast<std::size_t>(row))) return false;
    for (int part : lambda.parts())
        if (e == part - 1) return true;
    return false;
}

}  // namespace

LemmaAuditReport audit_lemmas(const StrictPartition& lambda, int p) {
    if (p < 1) throw InvalidArgs("audit_lemmas: need p >= 1");
    LemmaAuditReport report;
    std::size_t k = lambda.length();

    for (const StrictPartition& mu : candidate_shapes(lambda, p)) {
        ++report.shapes_checked;
        EnumerateOptions options;
        options.keep_tableaux = true;
        EnumerationReport res =
            enumerate_sdt({mu, pieri_target(lambda, p)}, options);
        for (const ShiftedTableau& t : *res.tableaux) {
            ++report.tableaux_audited;
            std::string tag = "lambda=" + lambda.str() + " mu=" + mu.str() +
                              " p=" + std::to_string(p) + " tableau=" + t.str();

            // row-k run: lambda_k - 2, ..., 0 sit in row k consecutively
            if (k >= 1 && lambda.part(k) >= 2) {
                const auto& row = t.rows()[k - 1];
                int top = lambda.part(k) - 2;
                bool found = false;
                for (std::size_t s = 0; s + static_cast<std::size_t>(top) < row.size();
                     ++s) {
                    bool run = true;
                    for (int d = 0; d <= top && run; ++d)
                        run = row[s + static_cast<std::size_t>(d)] == top - d;
                    found = found || run;
                }
                if (!found)
                    report.failures.push_back("row-k run audit: " + tag);
            }

            // large/small entries weakly increase along the reading word
            int last_seen = -1;
            bool monotone = true;
            int m = static_cast<int>(t.rows().size());
            for (int r = m; r >= 1 && monotone; --r) {
                for (int e : t.rows()[static_cast<std::size_t>(r) - 1]) {
                    if (!is_large(e, lambda) && !is_small(e, r, lambda)) continue;
                    if (e < last_seen) {
                        monotone = false;
                        break;
                    }
                    last_seen = e;
                }
            }
            if (!monotone)
                report.failures.push_back("large/small monotonicity audit: " + tag);
        }
    }

    // non-rim shapes in the box carry no tableaux at all
    for (const StrictPartition& mu :
         shapes_containing(lambda, lambda.part(1) + p + 1,
                           static_cast<int>(lambda.length()) + 2)) {
        if (is_rim(SkewShape(mu, lambda).cells())) continue;
        ++report.shapes_checked;
        long long c = sdt_count_pieri(mu, lambda, p);
        if (c != 0)
            report.failures.push_back(
                "non-rim emptiness audit: lambda=" + lambda.str() +
                " mu=" + mu.str() + " p=" + std::to_string(p) +
                " count=" + std::to_string(c));
    }
    return report;
}

ConjectureTable conjecture_table(const StrictPartition& lambda, int a, int b,
                                 int max_cells) {
    if (a < 1 || b < a) throw InvalidArgs("conjecture_table: need 1 <= a <= b");
    ConjectureTable out;
    out.lambda = lambda;
    out.a = a;
    out.b = b;
    out.n = lambda.empty() ? 1 : lambda.part(1);

    int floor_cells = lambda.weight() + a * b;
    if (max_cells < 0) max_cells = floor_cells + 2;
    if (a == 1) {
        // cover the full Pieri support so the comparison is term-by-term
        for (const StrictPartition& mu : candidate_shapes(lambda, b))
            max_cells = std::max(max_cells, mu.weight());
    }
    out.max_cells = max_cells;

    for (const auto& [mu, count] : sdt_profile(lambda, a, b, max_cells, out.n))
        out.rows.push_back({mu, count, mu.weight() - floor_cells});
    std::sort(out.rows.begin(), out.rows.end(),
              [](const ConjectureRow& x, const ConjectureRow& y) {
                  int wx = x.mu.weight(), wy = y.mu.weight();
                  if (wx != wy) return wx < wy;
                  return x.mu < y.mu;
              });

    if (a == 1) {
        PieriExpansion expansion = pieri_expansion(lambda, b);
        bool match = expansion.terms.size() == out.rows.size();
        for (std::size_t i = 0; match && i < out.rows.size(); ++i)
            match = expansion.terms[i].mu == out.rows[i].mu &&
                    expansion.terms[i].coeff == out.rows[i].count &&
                    expansion.terms[i].beta == out.rows[i].beta;
        out.matches_pieri = match;
    }
    return out;
}

}  // namespace gqpieri
