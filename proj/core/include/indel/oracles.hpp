#pragma once

// Exhaustive reference implementations. Each one is written from the
// definition with no shared kernels, and is only meant for small inputs in
// tests and the oracle-check command.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "indel/exact.hpp"
#include "indel/vt_codes.hpp"
#include "indel/word.hpp"

namespace indel::oracle {

/// Counts index subsets of x spelling y by walking all 2^|x| masks.
std::uint64_t embedding_number(const Word& x, const Word& y);

/// Every subsequence of x (all lengths) with the number of index masks
/// producing it.
std::map<Word, std::uint64_t> subsequence_counts(const Word& x);

/// Sorted distinct subsequences of length |x| - t, via index masks.
std::vector<Word> deletion_ball(const Word& x, std::size_t t);

/// Sorted distinct words reached by t single-symbol insertions.
std::vector<Word> insertion_ball(const Word& x, std::size_t t);

/// Longest common subsequence length by checking every subsequence of a.
std::size_t lcs_length(const Word& a, const Word& b);

/// All words of the minimal length containing both a and b, by sweeping
/// Sigma_q^L for increasing L.
std::vector<Word> shortest_common_supersequences(const Word& a, const Word& b);

/// All distinct common subsequences of maximal length.
std::vector<Word> longest_common_subsequences(const Word& a, const Word& b);

/// Sum of the longest-run lengths over Sigma_2^n, divided by 2^n.
Rational tau_of_space(std::size_t n);

/// Codewords in I_1(y) with the right checksum.
std::vector<Word> vt_decode_candidates(const Word& y, const VtParams& p);

/// Codewords obtained by inserting one bit at a window position.
std::vector<Word> svt_decode_candidates(const Word& y, const SvtParams& p, std::size_t window_start);

/// Largest Emb(x; y) over all x of length m, and every x attaining it.
std::pair<std::uint64_t, std::vector<Word>> max_embedding(const Word& y, std::size_t m);

/// For every binary y of length n - k (indexed by Word::from_index order),
/// the pairs (index of c, number of k-subsets of c whose deletion gives y),
/// found by applying every deletion pattern to every c in Sigma_2^n.
using Preimages = std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>;
Preimages deletion_preimages(std::size_t n, std::size_t k);

/// sum over preimages c of count * (d_L(x, c) - baseline). Distances use the
/// library kernel, which is checked against lcs_length separately.
long long weighted_distance_gap(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pre, std::size_t n,
                                const Word& x, long long baseline);

/// Exact expected normalized distance by enumerating every transmitted
/// word and every k-subset of deleted positions.
Rational expected_distance(const std::function<Word(const Word&)>& decoder, std::size_t n, std::size_t k);

/// Indel distance from the exhaustive LCS above.
std::size_t indel_distance(const Word& x, const Word& y);

}  // namespace indel::oracle
