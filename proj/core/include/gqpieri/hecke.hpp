#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gqpieri/errors.hpp"
#include "gqpieri/shapes.hpp"

namespace gqpieri {

// Element of the hyperoctahedral group W_n in window notation: the sequence
// w(1..n) of signed values whose absolute values are exactly {1..n}.
// Antisymmetry w(-i) = -w(i) is implicit.
class SignedPermutation {
public:
    explicit SignedPermutation(std::vector<int> window);
    static SignedPermutation identity(int n);
    static SignedPermutation parse(std::string_view text);  // "-2,3,1"

    int n() const { return static_cast<int>(window_.size()); }
    const std::vector<int>& window() const { return window_; }

    // 1-based: value at position i
    int operator()(int i) const { return window_[static_cast<std::size_t>(i) - 1]; }

    bool is_identity() const;
    std::string str() const;

    auto operator<=>(const SignedPermutation&) const = default;

private:
    std::vector<int> window_;
};

struct SignedPermutationHash {
    std::size_t operator()(const SignedPermutation& w) const noexcept;
};

// Sequence of generator indices in {0 .. n-1}.
using HeckeWord = std::vector<int>;

std::string word_str(const HeckeWord& word);  // "1 0 2"

// True iff l(w s_i) = l(w) + 1. For i >= 1 this is w(i) < w(i+1); for i = 0 it
// is w(1) > 0. s_0 negates position 1, s_i swaps positions i and i+1.
bool increases_length(const SignedPermutation& w, int i);

// Group product w * s_i.
SignedPermutation right_multiply(const SignedPermutation& w, int i);

// 0-Hecke product w o s_i: w * s_i if that is longer, else w itself.
SignedPermutation hecke_right_multiply(const SignedPermutation& w, int i);

// Left-to-right fold of hecke_right_multiply starting at the identity of W_n.
SignedPermutation evaluate_word(const HeckeWord& word, int n);

// Coxeter length via greedy descent reduction to the identity.
int coxeter_length(const SignedPermutation& w);

// All Hecke words for w with exactly p letters, in lexicographic order.
// Exhaustive search with conservative pruning; intended for small p.
std::vector<HeckeWord> hecke_words(const SignedPermutation& w, int p);

// Grassmannian signed permutation w(lambda, n): the negated parts of lambda
// followed by the ascending complement of {lambda_1..lambda_k} in [n].
SignedPermutation grassmannian(const StrictPartition& lambda, int n);

// w(lambda, a, b, n): w(lambda, n) extended by the blocks
// n+a+1 .. n+a+b and n+1 .. n+a; window size n+a+b, length |lambda| + ab.
SignedPermutation extended_grassmannian(const StrictPartition& lambda, int a,
                                        int b, int n);

// Braid-free reduced word for w(lambda, a, b, n): the block
// (lambda_k-1 .. 0, lambda_{k-1}-1 .. 0, ..., lambda_1-1 .. 0) followed by the
// runs (n+r, ..., n+r+b-1) for r = a down to 1.
HeckeWord canonical_reduced_word(const StrictPartition& lambda, int a, int b,
                                 int n);

// Bruhat order on W_n via the lifting property. Requires u.n() == w.n().
bool bruhat_leq(const SignedPermutation& u, const SignedPermutation& w);

}  // namespace gqpieri
