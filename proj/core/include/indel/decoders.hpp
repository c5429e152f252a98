#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "indel/exact.hpp"
#include "indel/supersequences.hpp"
#include "indel/vt_codes.hpp"
#include "indel/word.hpp"

namespace indel {

enum class DecoderId { Lazy, EN, MLCode, MLD2Del, MLD2Ins, MLStar1Del, MLStar2Del, BruteForce };

/// Decoder selection as it appears in configs and on the command line:
/// lazy, en, en:<m>, mlcode, mld2del, mld2ins, mlstar1, mlstar2, brute,
/// brute:<lo>-<hi>. Without an explicit target, EN uses the block length n
/// and the brute-force window is [n-2, n+1].
struct DecoderKind {
  DecoderId id = DecoderId::Lazy;
  std::optional<std::size_t> m;
  std::optional<std::size_t> lo, hi;

  static DecoderKind of(DecoderId id) {
    DecoderKind k;
    k.id = id;
    return k;
  }
  static DecoderKind parse(const std::string& s);
  std::string str() const;
  /// Number of traces the decoder consumes.
  unsigned traces() const noexcept { return id == DecoderId::MLD2Del || id == DecoderId::MLD2Ins ? 2 : 1; }
};

struct MldResult {
  Word word;
  BigInt score;            ///< Emb product of the winner
  std::size_t candidates = 0;
  bool truncated = false;
  bool restricted = false;  ///< winner came from the code-restricted set
};

Word decode_lazy(const Word& y);

/// Length-m word maximizing Emb(x; y), built by prolonging runs of y.
/// Each extra symbol goes to the run with the largest marginal gain
/// (r + k + 1) / (k + 1); ties prefer a run that is already prolonged, then
/// the first run. Throws std::domain_error if m < |y|.
Word decode_en(const Word& y, std::size_t m);

/// argmax_{c in code} Emb(c; y), ties to the lexicographically smallest.
/// `zero_likelihood` is set when every codeword has Emb = 0.
Word decode_ml_code(const Word& y, std::span<const Word> code, bool* zero_likelihood = nullptr);

/// argmax over shortest common supersequences of Emb(x; y1) Emb(x; y2).
MldResult decode_mld_two_del(const Word& y1, const Word& y2, std::size_t cap = kDefaultEnumerationCap);

/// Code-aware variant. If the SCS length equals n the candidates are the
/// codewords among the SCSs; if it equals n - 1 they are the codewords one
/// insertion away from some SCS. Otherwise, or if no codeword qualifies,
/// the unrestricted result is returned.
MldResult decode_mld_two_del(const Word& y1, const Word& y2, const Code& code,
                             std::size_t cap = kDefaultEnumerationCap);

/// argmax over longest common subsequences of Emb(y1; x) Emb(y2; x).
MldResult decode_mld_two_ins(const Word& y1, const Word& y2, std::size_t cap = kDefaultEnumerationCap);

using Membership = std::function<bool(const Word&)>;

/// Integer score sum_{c in I_k(y), c in code} d_L(x, c) Emb(c; y).
/// Dividing by |C| n C(n, k) gives the expected normalized distance of
/// answering x, so argmin is unaffected by the scaling. An empty
/// membership means the whole space.
BigInt objective_f(const Word& y, const Word& x, std::size_t k, const Membership& code = {});

struct BruteForceResult {
  Word best;
  BigInt score;
  std::size_t minimizers = 0;  ///< number of words attaining the minimum
  std::uint64_t evaluated = 0;
};

/// Exhaustive minimization of objective_f over all words with length in
/// [lo, hi]. Ties go to the shortest, then lexicographically smallest word.
/// Throws std::domain_error when more than `max_candidates` words would be
/// scored.
BruteForceResult brute_force_ml_star(const Word& y, std::size_t k, std::size_t lo, std::size_t hi,
                                     const Membership& code = {}, std::uint64_t max_candidates = 1u << 22);

/// Lazy decoding for one deletion. Writes a note to `warn` (when non-null)
/// if n = |y| + 1 is below 17, where optimality is not established.
Word ml_star_1del(const Word& y, std::ostream* warn = nullptr);

/// 2n^2 - 4n r_i - 6n + r_i^2 + 3 r_i + r + 1 for block length n, longest
/// run r_i and run count r of the received word.
long long two_del_condition(long long n, long long r_i, long long r);

/// Lazy when two_del_condition >= 0, otherwise EN^{n-1}(y), with n = |y| + 2.
Word ml_star_2del(const Word& y);

}  // namespace indel
