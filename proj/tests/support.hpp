#pragma once

// Shared test oracles, all deliberately independent of the library's own
// search and pruning paths.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "gqpieri/hecke.hpp"
#include "gqpieri/shapes.hpp"

namespace testsupport {

using gqpieri::HeckeWord;
using gqpieri::SignedPermutation;

// Every element of W_n, found by closing the identity under right products.
inline std::vector<SignedPermutation> whole_group(int n) {
    std::set<std::vector<int>> seen;
    std::vector<SignedPermutation> out{SignedPermutation::identity(n)};
    seen.insert(out.front().window());
    for (std::size_t at = 0; at < out.size(); ++at) {
        for (int i = 0; i < n; ++i) {
            SignedPermutation v = right_multiply(out[at], i);
            if (seen.insert(v.window()).second) out.push_back(v);
        }
    }
    return out;
}

// Graph distance from the identity in the Cayley graph of the group; the
// Coxeter length, computed without descent arguments.
inline std::map<std::vector<int>, int> bfs_lengths(int n) {
    std::map<std::vector<int>, int> dist;
    std::vector<SignedPermutation> frontier{SignedPermutation::identity(n)};
    dist[frontier.front().window()] = 0;
    for (int d = 1; !frontier.empty(); ++d) {
        std::vector<SignedPermutation> next;
        for (const auto& w : frontier) {
            for (int i = 0; i < n; ++i) {
                SignedPermutation v = right_multiply(w, i);
                if (dist.emplace(v.window(), d).second) next.push_back(v);
            }
        }
        frontier = std::move(next);
    }
    return dist;
}

// Reduced words via the descent recursion, memoized on the window.
inline const std::vector<HeckeWord>& reduced_words(
    const SignedPermutation& w, std::map<std::vector<int>, std::vector<HeckeWord>>& memo) {
    auto it = memo.find(w.window());
    if (it != memo.end()) return it->second;
    std::vector<HeckeWord> words;
    if (w.is_identity()) {
        words.push_back({});
    } else {
        for (int i = 0; i < w.n(); ++i) {
            if (increases_length(w, i)) continue;  // need a right descent
            for (HeckeWord word : reduced_words(right_multiply(w, i), memo)) {
                word.push_back(i);
                words.push_back(std::move(word));
            }
        }
        std::sort(words.begin(), words.end());
        words.erase(std::unique(words.begin(), words.end()), words.end());
    }
    return memo.emplace(w.window(), std::move(words)).first->second;
}

// Completely unpruned Hecke word search: every word of length p over the
// alphabet, kept iff it evaluates to w.
inline std::vector<HeckeWord> unpruned_hecke_words(const SignedPermutation& w, int p) {
    std::vector<HeckeWord> out;
    int n = w.n();
    HeckeWord word(static_cast<std::size_t>(p), 0);
    for (;;) {
        if (gqpieri::evaluate_word(word, n) == w) out.push_back(word);
        int i = p - 1;
        while (i >= 0 && word[static_cast<std::size_t>(i)] == n - 1)
            word[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++word[static_cast<std::size_t>(i)];
    }
    if (p == 0) return {out.begin(), out.begin() + (w.is_identity() ? 1 : 0)};
    return out;
}

// Random unimodal row over 0..max_letter with the given length.
inline std::vector<int> random_unimodal_row(std::mt19937& rng, int length,
                                            int max_letter) {
    for (;;) {
        std::vector<int> values;
        std::uniform_int_distribution<int> pick(0, max_letter);
        for (int i = 0; i < length; ++i) values.push_back(pick(rng));
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        if (static_cast<int>(values.size()) < length) continue;
        // choose a valley position and fold the sorted values around it
        std::uniform_int_distribution<int> vpick(0, length - 1);
        int valley = vpick(rng);
        std::vector<int> row(static_cast<std::size_t>(length));
        // values[0] is the minimum; descending prefix takes the next smallest
        // values in reverse, ascending suffix the rest in order
        for (int i = 0; i < valley; ++i)
            row[static_cast<std::size_t>(valley - 1 - i)] = values[static_cast<std::size_t>(i + 1)];
        row[static_cast<std::size_t>(valley)] = values[0];
        for (int i = valley + 1; i < length; ++i)
            row[static_cast<std::size_t>(i)] = values[static_cast<std::size_t>(i)];
        return row;
    }
}

}  // namespace testsupport
