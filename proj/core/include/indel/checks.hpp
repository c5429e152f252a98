#pragma once

// Exhaustive agreement checks between the library and the oracles in
// oracles.hpp. Shared by the acceptance suite and `indelsim oracle-check`.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace indel::oracle {

struct CheckReport {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> samples;  ///< first few violations, human readable
  std::string note;                  ///< free-form summary

  void fail(std::string what);
  bool ok() const noexcept { return violations == 0; }
  std::string summary() const;
};

/// Emb against subset enumeration for every binary x with |x| <= max_len and
/// every y with |y| <= |x|; sum of Emb over D_t(x) equals C(|x|, t); the
/// deletion ball matches the mask oracle.
CheckReport check_embedding(std::size_t max_len);

/// |I_t(x)| against the closed form for |x| <= max_len, q <= max_q and
/// t in {1, 2}; full ball equality with the oracle on smaller inputs.
CheckReport check_insertion_balls(std::size_t max_len, unsigned max_q);

/// enumerate_scs against filtering all words of the minimal length, for every
/// pair of binary words of lengths <= max_len. Also compares the banded and
/// unbanded enumerations and, for lengths <= 6, enumerate_lcs.
CheckReport check_scs(std::size_t max_len);

/// exact_expected_distance(lazy, n, 1) == 1/n; cross-checked with the
/// enumeration oracle when n <= 16.
CheckReport check_lazy_law(std::size_t n);

/// exact_expected_distance(EN^n, n, 1) > 1/n. `expect_worse` selects whether a
/// value at or below 1/n counts as a violation (it is reported either way).
CheckReport check_en_vs_lazy(std::size_t n, bool expect_worse = true);

/// For every y of length n - 2: the sign of
/// sum_{c in I_2(y)} Emb(c; y) (d_L(EN^{n-1}(y), c) - 2) agrees with the
/// polynomial test of ml_star_2del (non-negative on both sides meaning lazy).
CheckReport check_two_del_condition(std::size_t n);

/// For every y of length n - 2: the brute-force minimizer over lengths
/// [n-2, n+1] has length n-2 or n-1, and equals ml_star_2del(y) when unique.
CheckReport check_ml_star_window(std::size_t n);

/// Every codeword of every VT_a(n) is recovered from each of its single
/// deletions, and the insertion search finds exactly that codeword.
CheckReport check_vt(std::size_t n);

/// tau(Sigma_2^n) <= 2 log2 n, and DP equals enumeration when n <= 16.
CheckReport check_tau(std::size_t n);

}  // namespace indel::oracle
