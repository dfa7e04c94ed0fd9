#include "gqpieri/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace gqpieri {

namespace {

bool increases_length_raw(const std::vector<int>& w, int i) {
    return i == 0 ? w[0] > 0 : w[i - 1] < w[i];
}

void apply_raw(std::vector<int>& w, int i) {
    if (i == 0)
        w[0] = -w[0];
    else
        std::swap(w[i - 1], w[i]);
}

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x + 64);
            h *= 1099511628211ull;
        }
        return h;
    }
};

// need(v) = minimal number of letters to climb from v to the target by
// 0-Hecke right multiplication (absorbing steps never shorten a climb).
// Computed by breadth-first search downward from the target through right
// descents. A prefix u can complete to the target within k more letters iff
// need(u) exists and is <= k, which makes the Hecke side of the pruning
// exact. Tables are shared across queries with the same target; windows are
// packed into 64-bit keys, which limits the table to window size <= 12
// (larger targets fall back to length and Bruhat pruning).
using NeedTable = std::unordered_map<std::uint64_t, int>;

constexpr std::size_t kNeedTableCap = 4u << 20;

std::uint64_t pack_window(const std::vector<int>& w) {
    std::uint64_t key = 0;
    for (int v : w) key = (key << 5) | static_cast<std::uint64_t>(v + 12);
    return key;
}

std::shared_ptr<const NeedTable> need_table(const SignedPermutation& target) {
    if (target.n() > 12) return nullptr;

    static std::mutex mutex;
    static std::vector<std::pair<std::vector<int>, std::shared_ptr<const NeedTable>>>
        cache;
    {
        std::lock_guard lock(mutex);
        for (auto& [win, table] : cache)
            if (win == target.window()) return table;
    }

    auto table = std::make_shared<NeedTable>();
    int n = target.n();
    std::vector<std::vector<int>> frontier{target.window()};
    (*table)[pack_window(target.window())] = 0;
    for (int dist = 1; !frontier.empty(); ++dist) {
        std::vector<std::vector<int>> next;
        for (const auto& z : frontier) {
            for (int j = 0; j < n; ++j) {
                if (increases_length_raw(z, j)) continue;  // need a descent
                std::vector<int> v = z;
                apply_raw(v, j);
                if (table->try_emplace(pack_window(v), dist).second)
                    next.push_back(std::move(v));
            }
        }
        if (table->size() > kNeedTableCap) {  // target too wild: remember that
            table = nullptr;
            break;
        }
        frontier = std::move(next);
    }

    std::lock_guard lock(mutex);
    if (cache.size() >= 8) cache.erase(cache.begin());
    cache.emplace_back(target.window(), table);
    return table;
}

// Depth-first fill in reading order (bottom row first, left to right).
//
// The SDT conditions are enforced incrementally: unimodality as a per-row
// phase machine, conservative local-configuration prunes the moment the
// participating cells exist, and the exact pair conditions whenever a row
// completes. The row directly below the row being filled is always complete,
// so each check reads only placed cells, and by the time a row finishes the
// tableau below it is fully valid. That makes the subtree count from a row
// boundary a function of (row index, row below, running product) alone,
// which the subtree memo exploits. Leaves are re-validated with
// is_sdt_direct as an internal consistency guard.
class Searcher {
public:
    Searcher(const SdtQuery& query, const EnumerateOptions& options)
        : target_(query.target.window()),
          target_len_(coxeter_length(query.target)),
          nl_(query.max_letter < 0 ? query.target.n() : query.max_letter + 1),
          keep_(options.keep_tableaux),
          limit_(options.limit),
          bruhat_(options.bruhat_pruning),
          shape_(query.shape) {
        nl_ = std::min(nl_, query.target.n());
        int m = static_cast<int>(shape_.length());
        for (int r = 0; r < m; ++r) row_len_.push_back(shape_.part(r + 1));
        total_ = shape_.weight();
        for (int r = m - 1; r >= 0; --r)
            for (int pos = 0; pos < row_len_[r]; ++pos)
                cells_.push_back({r, pos});
        rows_.resize(row_len_.size());
        inc_.assign(row_len_.size(), 0);
        win_ = SignedPermutation::identity(query.target.n()).window();
        need_ = need_table(query.target);
        letter_allowed_.assign(static_cast<std::size_t>(nl_), false);
        for (int i = 0; i < nl_; ++i) {
            std::vector<int> gen = win_;
            apply_raw(gen, i);
            letter_allowed_[static_cast<std::size_t>(i)] =
                bruhat_leq(SignedPermutation(gen), query.target);
        }
    }

    // Restricts the first cell to letters in [lo, hi); used by the job split.
    void run(int first_lo = 0, int first_hi = -1) {
        if (first_hi < 0) first_hi = nl_;
        if (total_ == 0) {
            if (target_len_ == 0) record();
            return;
        }
        if (target_len_ > total_) return;
        count += fill(0, first_lo, first_hi);
    }

    long long count = 0;
    long long nodes = 0;
    bool truncated = false;
    std::vector<ShiftedTableau> found;

private:
    void record() {
        ShiftedTableau t(shape_, rows_);
        if (!is_sdt_direct(t)) return;  // incremental checks should never miss
        ++count;
        if (keep_) {
            if (found.size() < limit_)
                found.push_back(std::move(t));
            else
                truncated = true;
        }
    }

    // Subtree results at a row boundary depend only on the row index, the
    // completed row below, and the running group element; merging those
    // states collapses the cross-row product that fat empty shapes generate.
    std::string subtree_key(int r) const {
        std::string key;
        key.push_back(static_cast<char>(r));
        if (r + 1 < static_cast<int>(rows_.size()))
            for (int v : rows_[static_cast<std::size_t>(r) + 1])
                key.push_back(static_cast<char>(v + 1));
        key.push_back(0);
        for (int v : win_) key.push_back(static_cast<char>(v + 64));
        return key;
    }

    bool bruhat_ok(const std::vector<int>& w) {
        auto [it, inserted] = bruhat_memo_.try_emplace(w, false);
        if (inserted)
            it->second = bruhat_leq(SignedPermutation(w),
                                    SignedPermutation(target_));
        return it->second;
    }

    long long fill(int idx, int letter_lo, int letter_hi) {
        const auto [r, pos] = cells_[static_cast<std::size_t>(idx)];
        const int len = row_len_[static_cast<std::size_t>(r)];

        const bool memoizable =
            !keep_ && pos == 0 && letter_lo == 0 && letter_hi == nl_;
        std::string key;
        if (memoizable) {
            key = subtree_key(r);
            auto it = subtree_memo_.find(key);
            if (it != subtree_memo_.end()) return it->second;
        }
        long long subtotal = 0;
        const bool has_below = r + 1 < static_cast<int>(row_len_.size());
        const int blen = has_below ? row_len_[static_cast<std::size_t>(r) + 1] : 0;
        auto& row = rows_[static_cast<std::size_t>(r)];
        const auto* below = has_below ? &rows_[static_cast<std::size_t>(r) + 1] : nullptr;
        const int cells_left_in_row = len - 1 - pos;
        const int cells_after = total_ - idx - 1;

        // first entries strictly increase bottom to top and every entry lies
        // under the first entry of the row above, so row r (0-based from the
        // top) only sees letters <= nl-1-r, and its first entry must leave
        // room for the strictly smaller first entries below it
        const int letter_cap = std::min(letter_hi, nl_ - r);
        int letter_floor = letter_lo;
        if (pos == 0)
            letter_floor = std::max(
                letter_floor, static_cast<int>(row_len_.size()) - 1 - r);

        for (int x = letter_floor; x < letter_cap; ++x) {
            if (!letter_allowed_[static_cast<std::size_t>(x)]) continue;

            // unimodality phase machine
            bool was_inc = inc_[static_cast<std::size_t>(r)] != 0;
            bool now_inc = was_inc;
            if (pos > 0) {
                int prev = row[static_cast<std::size_t>(pos) - 1];
                if (x == prev) continue;
                if (was_inc && x < prev) continue;
                now_inc = was_inc || x > prev;
            } else {
                now_inc = false;
            }
            // can the row still be completed within the alphabet?
            if (now_inc ? cells_left_in_row > nl_ - 1 - x
                        : cells_left_in_row > x + nl_ - 1)
                continue;

            if (has_below) {
                const auto& lo = *below;
                int blast = lo[static_cast<std::size_t>(blen) - 1];
                if (pos == 0) {
                    // condition (b): both ends of the lower row stay below
                    if (x <= lo[0] || x <= blast) continue;
                } else if (pos - 1 < blen) {
                    int cval = lo[static_cast<std::size_t>(pos) - 1];
                    if (x <= blast && blast < cval) continue;        // (ii)
                    if (cval < blast && blast <= x &&
                        row[static_cast<std::size_t>(pos) - 1] < x)
                        continue;                                    // (iii)
                }
                if (pos == len - 1 && blen == len - 1) {             // (iv), (v)
                    bool bad = false;
                    for (int q = 0; q < pos && !bad; ++q) {
                        int y = row[static_cast<std::size_t>(q)];
                        bad = blast < y && y <= x;
                    }
                    if (bad) continue;
                }
                if (pos == len - 1) {
                    // the local prunes above are conservative; the completed
                    // row must satisfy the full pair conditions
                    row.push_back(x);
                    bool ok = sdt_pair_valid(row, lo);
                    row.pop_back();
                    if (!ok) continue;
                }
            }

            // 0-Hecke product bounds
            bool up = increases_length_raw(win_, x);
            int new_len = cur_len_ + (up ? 1 : 0);
            if (new_len > target_len_) continue;
            if (target_len_ - new_len > cells_after) continue;

            if (up) apply_raw(win_, x);
            ++nodes;
            bool viable;
            if (need_) {
                auto it = need_->find(pack_window(win_));
                viable = it != need_->end() && it->second <= cells_after;
            } else {
                viable = !(bruhat_ && up) || bruhat_ok(win_);
            }
            if (viable) {
                row.push_back(x);
                inc_[static_cast<std::size_t>(r)] = now_inc ? 1 : 0;
                int saved_len = cur_len_;
                cur_len_ = new_len;
                if (idx + 1 == total_) {
                    if (cur_len_ == target_len_ && win_ == target_) {
                        ShiftedTableau t(shape_, rows_);
                        // each row was validated against the row below as it
                        // completed, so this can only fail on an internal bug
                        if (!is_sdt_direct(t))
                            throw Error("enumerate_sdt: incremental validation "
                                        "disagrees with is_sdt_direct");
                        ++subtotal;
                        if (keep_) {
                            if (found.size() < limit_)
                                found.push_back(std::move(t));
                            else
                                truncated = true;
                        }
                    }
                } else {
                    subtotal += fill(idx + 1, 0, nl_);
                }
                cur_len_ = saved_len;
                inc_[static_cast<std::size_t>(r)] = was_inc ? 1 : 0;
                row.pop_back();
            }
            if (up) apply_raw(win_, x);
        }
        if (memoizable && subtree_memo_.size() < (1u << 22))
            subtree_memo_[std::move(key)] = subtotal;
        return subtotal;
    }

    std::vector<int> target_;
    int target_len_;
    int nl_;
    bool keep_;
    std::size_t limit_;
    bool bruhat_;
    StrictPartition shape_;
    std::vector<int> row_len_;
    int total_ = 0;
    std::vector<std::pair<int, int>> cells_;  // (row, position), 0-based
    std::vector<std::vector<int>> rows_;
    std::vector<char> inc_;
    std::vector<int> win_;
    int cur_len_ = 0;
    std::vector<bool> letter_allowed_;
    std::shared_ptr<const NeedTable> need_;
    std::unordered_map<std::vector<int>, bool, VecHash> bruhat_memo_;
    std::unordered_map<std::string, long long> subtree_memo_;
};

}  // namespace

EnumerationReport enumerate_sdt(const SdtQuery& query,
                                const EnumerateOptions& options) {
    auto start = std::chrono::steady_clock::now();
    EnumerationReport report;

    int nl = query.max_letter < 0 ? query.target.n() : query.max_letter + 1;
    nl = std::min(nl, query.target.n());
    int jobs = std::max(1, options.jobs);
    if (query.shape.weight() == 0 || nl <= 1) jobs = 1;
    jobs = std::min(jobs, nl);

    if (jobs == 1) {
        Searcher s(query, options);
        s.run();
        report.count = s.count;
        report.nodes_explored = s.nodes;
        report.truncated = s.truncated;
        if (options.keep_tableaux) report.tableaux = std::move(s.found);
    } else {
        std::vector<std::unique_ptr<Searcher>> workers;
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t)
            workers.push_back(std::make_unique<Searcher>(query, options));
        for (int t = 0; t < jobs; ++t) {
            int lo = t * nl / jobs, hi = (t + 1) * nl / jobs;
            threads.emplace_back([&workers, t, lo, hi] { workers[static_cast<std::size_t>(t)]->run(lo, hi); });
        }
        for (auto& th : threads) th.join();
        std::vector<ShiftedTableau> merged;
        for (auto& s : workers) {
            report.count += s->count;
            report.nodes_explored += s->nodes;
            report.truncated = report.truncated || s->truncated;
            if (options.keep_tableaux)
                for (auto& t : s->found) merged.push_back(std::move(t));
        }
        if (options.keep_tableaux) {
            if (merged.size() > options.limit) {
                merged.erase(merged.begin() +
                                 static_cast<std::ptrdiff_t>(options.limit),
                             merged.end());
                report.truncated = true;
            }
            report.tableaux = std::move(merged);
        }
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

SignedPermutation pieri_target(const StrictPartition& lambda, int p) {
    if (p < 1) throw InvalidArgs("pieri target: need p >= 1");
    int n = lambda.empty() ? 1 : lambda.part(1);
    return extended_grassmannian(lambda, 1, p, n);
}

long long sdt_count_pieri(const StrictPartition& mu, const StrictPartition& lambda,
                          int p) {
    if (p < 1) throw InvalidArgs("sdt_count_pieri: need p >= 1");
    SdtQuery query{mu, pieri_target(lambda, p)};
    return enumerate_sdt(query).count;
}

std::map<StrictPartition, long long> sdt_profile(const StrictPartition& lambda,
                                                 int a, int b, int max_cells,
                                                 int n) {
    if (a < 1 || b < a) throw InvalidArgs("sdt_profile: need 1 <= a <= b");
    if (n < 0) n = lambda.empty() ? 1 : lambda.part(1);
    SignedPermutation target = extended_grassmannian(lambda, a, b, n);
    int min_cells = lambda.weight() + a * b;  // l(w): shorter words cannot reach
    std::map<StrictPartition, long long> out;
    for (int cells = min_cells; cells <= max_cells; ++cells) {
        for (const StrictPartition& mu : strict_partitions_of_weight(cells)) {
            if (mu.part(1) > 2 * target.n() - 1) continue;  // no unimodal fill
            long long c = enumerate_sdt({mu, target}).count;
            if (c > 0) out.emplace(mu, c);
        }
    }
    return out;
}

EnumerationReport naive_enumerate(const SdtQuery& query) {
    auto start = std::chrono::steady_clock::now();
    int total = query.shape.weight();
    int nl = query.max_letter < 0 ? query.target.n() : query.max_letter + 1;
    nl = std::min(nl, query.target.n());
    if (total > 9 || nl > 6)
        throw TooLarge("naive_enumerate guard: |mu| <= 9 and alphabet <= 6");

    EnumerationReport report;
    report.tableaux.emplace();
    if (total == 0) {
        if (query.target.is_identity()) {
            report.count = 1;
            report.tableaux->push_back(ShiftedTableau(query.shape, {}));
        }
        report.elapsed = std::chrono::steady_clock::now() - start;
        return report;
    }

    std::vector<int> digits(static_cast<std::size_t>(total), 0);
    int m = static_cast<int>(query.shape.length());
    for (;;) {
        ++report.nodes_explored;
        // digits are the reading word: bottom row first, left to right
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(m));
        std::size_t at = 0;
        for (int r = m - 1; r >= 0; --r) {
            auto& row = rows[static_cast<std::size_t>(r)];
            for (int pos = 0; pos < query.shape.part(static_cast<std::size_t>(r) + 1); ++pos)
                row.push_back(digits[at++]);
        }
        ShiftedTableau t(query.shape, std::move(rows));
        if (is_sdt_direct(t) &&
            evaluate_word(reading_word(t), query.target.n()) == query.target) {
            ++report.count;
            report.tableaux->push_back(std::move(t));
        }
        int i = total - 1;
        while (i >= 0 && digits[static_cast<std::size_t>(i)] == nl - 1)
            digits[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++digits[static_cast<std::size_t>(i)];
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

}  // namespace gqpieri
