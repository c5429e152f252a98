#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "indel/exact.hpp"
#include "indel/word.hpp"

namespace indel {

/// Emb(x; y): the number of index sets I with x_I = y.
///
/// Runs the prefix DP restricted to the diagonal band of width |x| - |y|,
/// so the cost is O(|x| * (|x| - |y| + 1)). Uses 128-bit arithmetic when the
/// result provably fits and arbitrary precision otherwise.
BigInt embedding_number(const Word& x, const Word& y);
BigInt embedding_number(std::span<const Symbol> x, std::span<const Symbol> y);

/// Deletion ball D_t(x): distinct subsequences of length |x| - t in
/// lexicographic order. Throws std::domain_error when t > |x|.
std::vector<Word> deletion_ball(const Word& x, std::size_t t);

/// Insertion ball I_t(x) over the alphabet of x, lexicographic order.
std::vector<Word> insertion_ball(const Word& x, std::size_t t);

/// |I_t(x)| for any x of length n: sum_{i<=t} C(n+t, i) (q-1)^i.
BigInt insertion_ball_size(std::size_t n, std::size_t t, unsigned q);

/// Number of binary words of length n whose runs all have length <= k.
BigInt words_with_runs_at_most(std::size_t n, std::size_t k);

/// Average longest-run length over all 2^n binary words, exact.
/// Throws std::domain_error for n == 0.
Rational tau_of_space(std::size_t n);

}  // namespace indel
