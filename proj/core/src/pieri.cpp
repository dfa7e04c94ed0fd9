#include "gqpieri/pieri.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace gqpieri {

namespace {

struct MemoKey {
    CellSet cells;
    int p;
    bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const noexcept {
        std::size_t h = 1469598103934665603ull;
        auto mix = [&h](int v) {
            h ^= static_cast<std::size_t>(v + 1);
            h *= 1099511628211ull;
        };
        for (const Cell& c : k.cells) {
            mix(c.row);
            mix(c.col);
        }
        mix(k.p);
        return h;
    }
};

// Shared across expansions; remainders recur constantly during sweeps.
std::unordered_map<MemoKey, long long, MemoKeyHash> g_memo;
std::shared_mutex g_memo_mutex;

// The vanishing case of the recursion works on the symmetric double of the
// shifted diagram: a 2x2 square there is either a plain 2x2 square of cells
// or a diagonal elbow {(r,r), (r,r+1), (r+1,r+1)}, whose mirror image
// completes the square. Rims with an elbow carry no tableaux either; the
// cross-verification sweep checks both readings against enumeration.
bool rim_in_symmetric_double(const CellSet& theta) {
    if (!is_rim(theta)) return false;
    for (const Cell& c : theta) {
        if (c.row != c.col) continue;
        if (std::binary_search(theta.begin(), theta.end(),
                               Cell{c.row, c.col + 1}) &&
            std::binary_search(theta.begin(), theta.end(),
                               Cell{c.row + 1, c.col + 1}))
            return false;
    }
    return true;
}

long long coefficient(const CellSet& theta, int p) {
    if (p <= 0) return theta.empty() ? 1 : 0;
    if (theta.empty()) return 0;
    if (!rim_in_symmetric_double(theta)) return 0;

    MemoKey key{theta, p};
    {
        std::shared_lock lock(g_memo_mutex);
        auto it = g_memo.find(key);
        if (it != g_memo.end()) return it->second;
    }

    long long value = 0;
    Classification cls = classify(theta);
    if (cls.kind != ShapeKind::Neither) {
        // base cases: the whole rim is a single row or column
        int sz = static_cast<int>(theta.size());
        long long at_sz = p == sz ? 1 : 0;
        long long at_sz1 = p == sz - 1 ? 1 : 0;
        if (!cls.touches_diagonal)
            value = 2 * at_sz + at_sz1;
        else if (cls.kind == ShapeKind::Column)
            value = at_sz + at_sz1;
        else
            value = at_sz;
    } else {
        ArmDecomposition arm = northeast_arm(theta);
        int a = arm.size;
        const CellSet& rem = arm.remainder;
        if (arm.connected)
            value = coefficient(rem, p - a) + coefficient(rem, p - a + 1);
        else if (a == 1)
            value = 2 * coefficient(rem, p - 1) + 2 * coefficient(rem, p);
        else
            value = 2 * coefficient(rem, p - a) + 3 * coefficient(rem, p - a + 1) +
                    coefficient(rem, p - a + 2);
    }

    std::unique_lock lock(g_memo_mutex);
    g_memo.emplace(std::move(key), value);
    return value;
}

}  // namespace

long long pieri_coefficient(const CellSet& theta, int p) {
    return coefficient(theta, p);
}

long long pieri_coefficient(const SkewShape& theta, int p) {
    return coefficient(theta.cells(), p);
}

std::vector<StrictPartition> shapes_containing(const StrictPartition& lambda,
                                               int max_part, int max_len) {
    std::vector<StrictPartition> out;
    if (max_part < lambda.part(1) ||
        max_len < static_cast<int>(lambda.length()))
        return out;
    std::vector<int> cur;
    // shapes shorter than lambda cannot contain it, so record only once every
    // part of lambda has been dominated
    auto rec = [&](auto&& self, std::size_t i, int max_next) -> void {
        if (i >= lambda.length()) out.emplace_back(StrictPartition(cur));
        if (static_cast<int>(i) == max_len) return;
        for (int part = std::min(max_next, max_part);
             part >= std::max(lambda.part(i + 1), 1); --part) {
            cur.push_back(part);
            self(self, i + 1, part - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, max_part);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<StrictPartition> candidate_shapes(const StrictPartition& lambda, int p) {
    if (p < 1) throw InvalidArgs("candidate_shapes: need p >= 1");
    std::vector<StrictPartition> out;
    for (StrictPartition& mu : shapes_containing(
             lambda, lambda.part(1) + p + 1,
             static_cast<int>(lambda.length()) + 2)) {
        if (is_rim(SkewShape(mu, lambda).cells())) out.push_back(std::move(mu));
    }
    return out;
}

PieriExpansion pieri_expansion(const StrictPartition& lambda, int p) {
    if (p < 1) throw InvalidArgs("pieri_expansion: need p >= 1");
    PieriExpansion out{lambda, p, {}};
    if (lambda.empty()) {
        // GQ of the empty shape is the unit of the ring
        out.terms.push_back({StrictPartition({p}), 1, 0});
        return out;
    }
    for (const StrictPartition& mu : candidate_shapes(lambda, p)) {
        long long c = pieri_coefficient(SkewShape(mu, lambda).cells(), p);
        if (c == 0) continue;
        int beta = mu.weight() - lambda.weight() - p;
        if (beta < 0)
            throw Error("pieri_expansion: nonzero coefficient with negative "
                        "beta exponent at mu=" + mu.str());
        out.terms.push_back({mu, c, beta});
    }
    std::sort(out.terms.begin(), out.terms.end(),
              [](const PieriTerm& a, const PieriTerm& b) {
                  int wa = a.mu.weight(), wb = b.mu.weight();
                  if (wa != wb) return wa < wb;
                  return a.mu < b.mu;
              });
    return out;
}

}  // namespace gqpieri
