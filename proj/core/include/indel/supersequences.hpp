#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "indel/word.hpp"

namespace indel {

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

struct ScsResult {
  std::size_t length = 0;
  std::vector<Word> candidates;  ///< lexicographic order, distinct
  bool truncated = false;
};

struct LcsResult {
  std::size_t length = 0;
  std::vector<Word> candidates;
  bool truncated = false;
};

/// Quadratic-time LCS with a single rolling row.
std::size_t lcs_length(const Word& a, const Word& b);

std::size_t scs_length(const Word& a, const Word& b);

/// Visits every distinct shortest common supersequence of a and b in
/// lexicographic order. With `band`, the DP is restricted to cells with
/// |i - j| <= band; this loses nothing as long as band >= max(d1, d2) where
/// d_i = scs_length - |y_i|. The visitor returns false to stop early.
/// Returns false if the visit was stopped (by the visitor or by `cap`).
bool for_each_scs(const Word& a, const Word& b, std::optional<std::size_t> band, std::size_t cap,
                  const std::function<bool(std::span<const Symbol>)>& visit);

ScsResult enumerate_scs(const Word& a, const Word& b, std::optional<std::size_t> band = std::nullopt,
                        std::size_t cap = kDefaultEnumerationCap);

/// All distinct longest common subsequences, lexicographic order.
LcsResult enumerate_lcs(const Word& a, const Word& b, std::size_t cap = kDefaultEnumerationCap);

}  // namespace indel
