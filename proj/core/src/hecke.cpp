#include "gqpieri/hecke.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace gqpieri {

SignedPermutation::SignedPermutation(std::vector<int> window)
    : window_(std::move(window)) {
    std::vector<bool> seen(window_.size(), false);
    for (int v : window_) {
        int a = std::abs(v);
        if (a < 1 || a > static_cast<int>(window_.size()) || seen[a - 1])
            throw InvalidArgs("window is not a signed permutation");
        seen[a - 1] = true;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
    std::vector<int> window;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError("bad window: '" + std::string(text) + "'");
        window.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return SignedPermutation(std::move(window));
}

bool SignedPermutation::is_identity() const {
    for (std::size_t i = 0; i < window_.size(); ++i)
        if (window_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

std::string SignedPermutation::str() const {
    std::string out;
    for (std::size_t i = 0; i < window_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(window_[i]);
    }
    return out;
}

std::size_t SignedPermutationHash::operator()(const SignedPermutation& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : w.window()) {
        h ^= static_cast<std::size_t>(v + 64);
        h *= 1099511628211ull;
    }
    return h;
}

std::string word_str(const HeckeWord& word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(word[i]);
    }
    return out;
}

namespace {

void check_index(const SignedPermutation& w, int i) {
    if (i < 0 || i >= w.n())
        throw IndexOutOfRange("generator index " + std::to_string(i) +
                              " out of range for window size " +
                              std::to_string(w.n()));
}

// In-place variants working directly on windows; callers guarantee the index.
bool increases_length_raw(const std::vector<int>& w, int i) {
    return i == 0 ? w[0] > 0 : w[i - 1] < w[i];
}

void apply_raw(std::vector<int>& w, int i) {
    if (i == 0)
        w[0] = -w[0];
    else
        std::swap(w[i - 1], w[i]);
}

}  // namespace

bool increases_length(const SignedPermutation& w, int i) {
    check_index(w, i);
    return increases_length_raw(w.window(), i);
}

SignedPermutation right_multiply(const SignedPermutation& w, int i) {
    check_index(w, i);
    std::vector<int> v = w.window();
    apply_raw(v, i);
    return SignedPermutation(std::move(v));
}

SignedPermutation hecke_right_multiply(const SignedPermutation& w, int i) {
    check_index(w, i);
    return increases_length_raw(w.window(), i) ? right_multiply(w, i) : w;
}

SignedPermutation evaluate_word(const HeckeWord& word, int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    for (int i : word) {
        if (i < 0 || i >= n)
            throw IndexOutOfRange("letter " + std::to_string(i) +
                                  " out of range for window size " + std::to_string(n));
        if (increases_length_raw(v, i)) apply_raw(v, i);
    }
    return SignedPermutation(std::move(v));
}

int coxeter_length(const SignedPermutation& w) {
    std::vector<int> v = w.window();
    int n = static_cast<int>(v.size());
    int len = 0;
    // Each pass applies one descent; every application shortens by exactly 1.
    for (;;) {
        int i = -1;
        if (v[0] < 0) i = 0;
        for (int j = 1; i < 0 && j < n; ++j)
            if (v[j - 1] > v[j]) i = j;
        if (i < 0) break;
        apply_raw(v, i);
        ++len;
    }
    return len;
}

std::vector<HeckeWord> hecke_words(const SignedPermutation& w, int p) {
    std::vector<HeckeWord> out;
    if (p < 0) return out;
    int n = w.n();
    int target_len = coxeter_length(w);
    if (p < target_len) return out;

    std::vector<int> cur = SignedPermutation::identity(n).window();
    HeckeWord word;
    int cur_len = 0;

    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(word.size()) == p) {
            if (cur == w.window()) out.push_back(word);
            return;
        }
        int remaining = p - static_cast<int>(word.size()) - 1;
        for (int i = 0; i < n; ++i) {
            bool up = increases_length_raw(cur, i);
            int next_len = cur_len + (up ? 1 : 0);
            if (next_len > target_len) continue;          // products never shorten
            if (target_len - next_len > remaining) continue;
            if (up) apply_raw(cur, i);
            word.push_back(i);
            std::swap(cur_len, next_len);
            self(self);
            std::swap(cur_len, next_len);
            word.pop_back();
            if (up) apply_raw(cur, i);  // generators are involutions in the group
        }
    };
    rec(rec);
    return out;
}

SignedPermutation grassmannian(const StrictPartition& lambda, int n) {
    if (n < lambda.part(1))
        throw InvalidArgs("grassmannian: need n >= lambda_1");
    std::vector<int> window;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (int part : lambda.parts()) {
        window.push_back(-part);
        used[static_cast<std::size_t>(part)] = true;
    }
    for (int v = 1; v <= n; ++v)
        if (!used[static_cast<std::size_t>(v)]) window.push_back(v);
    return SignedPermutation(std::move(window));
}

SignedPermutation extended_grassmannian(const StrictPartition& lambda, int a,
                                        int b, int n) {
    if (a < 1 || b < a) throw InvalidArgs("extended_grassmannian: need 1 <= a <= b");
    if (n < lambda.part(1))
        throw InvalidArgs("extended_grassmannian: need n >= lambda_1");
    std::vector<int> window = grassmannian(lambda, n).window();
    for (int v = n + a + 1; v <= n + a + b; ++v) window.push_back(v);
    for (int v = n + 1; v <= n + a; ++v) window.push_back(v);
    return SignedPermutation(std::move(window));
}

HeckeWord canonical_reduced_word(const StrictPartition& lambda, int a, int b,
                                 int n) {
    if (a < 1 || b < a) throw InvalidArgs("canonical_reduced_word: need 1 <= a <= b");
    if (n < lambda.part(1))
        throw InvalidArgs("canonical_reduced_word: need n >= lambda_1");
    HeckeWord word;
    for (std::size_t i = lambda.length(); i >= 1; --i)
        for (int letter = lambda.part(i) - 1; letter >= 0; --letter)
            word.push_back(letter);
    for (int r = a; r >= 1; --r)
        for (int letter = n + r; letter <= n + r + b - 1; ++letter)
            word.push_back(letter);
    return word;
}

bool bruhat_leq(const SignedPermutation& u, const SignedPermutation& w) {
    if (u.n() != w.n()) throw InvalidArgs("bruhat_leq: window sizes differ");
    std::vector<int> uv = u.window(), wv = w.window();
    int n = static_cast<int>(uv.size());
    // Lifting property: for a right descent s of w,
    // u <= w iff (us < u ? us <= ws : u <= ws).
    for (;;) {
        if (uv == wv) return true;
        int i = -1;
        if (wv[0] < 0) i = 0;
        for (int j = 1; i < 0 && j < n; ++j)
            if (wv[j - 1] > wv[j]) i = j;
        if (i < 0) return false;  // w is the identity, u is not
        apply_raw(wv, i);
        if (!increases_length_raw(uv, i)) apply_raw(uv, i);
    }
}

}  // namespace gqpieri
