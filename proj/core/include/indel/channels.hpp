#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "indel/exact.hpp"
#include "indel/rng.hpp"
#include "indel/word.hpp"

namespace indel {

enum class ChannelKind { Del, Ins, KDel };

struct ChannelSpec {
  ChannelKind kind = ChannelKind::Del;
  double p = 0.0;      ///< Del / Ins
  std::size_t k = 0;   ///< KDel
  unsigned q = 2;      ///< alphabet of inserted symbols

  static ChannelSpec del(double p) { return {ChannelKind::Del, p, 0, 2}; }
  static ChannelSpec ins(double p, unsigned q) { return {ChannelKind::Ins, p, 0, q}; }
  static ChannelSpec kdel(std::size_t k) { return {ChannelKind::KDel, 0.0, k, 2}; }

  /// Throws std::invalid_argument if p is outside [0, 1] or q < 2.
  void validate() const;
};

std::string to_string(ChannelKind k);
/// Accepts "del", "ins", "kdel" (case-sensitive).
ChannelKind parse_channel_kind(const std::string& s);

/// Each symbol is kept independently with probability 1 - p.
Word transmit_del(const Word& x, double p, Rng& rng);
/// Each of the |x| + 1 gaps receives one uniform symbol with probability p.
Word transmit_ins(const Word& x, double p, Rng& rng);
/// Deletes a uniformly random k-subset of positions.
Word transmit_kdel(const Word& x, std::size_t k, Rng& rng);
Word transmit(const ChannelSpec& ch, const Word& x, Rng& rng);

inline Word transmit_del(const Word& x, double p, std::uint64_t seed) {
  Rng r(seed);
  return transmit_del(x, p, r);
}
inline Word transmit_ins(const Word& x, double p, std::uint64_t seed) {
  Rng r(seed);
  return transmit_ins(x, p, r);
}
inline Word transmit_kdel(const Word& x, std::size_t k, std::uint64_t seed) {
  Rng r(seed);
  return transmit_kdel(x, k, r);
}

/// coefficient * p^p_exp * (1-p)^one_minus_p_exp * q^-q_inv_exp.
/// Keeps the integer part exact so likelihoods at a common p compare
/// without cancellation.
struct ChannelMonomial {
  BigInt coefficient = 0;
  std::size_t p_exp = 0;
  std::size_t one_minus_p_exp = 0;
  std::size_t q_inv_exp = 0;

  double value(double p, unsigned q = 2) const;
};

/// Pr{y | x} through Del(p).
ChannelMonomial cond_prob_del(const Word& x, const Word& y);
double cond_prob_del(const Word& x, const Word& y, double p);

/// Pr{y | x} through Ins(p). The coefficient counts embeddings of x in y
/// whose skipped positions of y are pairwise non-adjacent, since a gap holds
/// at most one inserted symbol. It equals Emb(y; x) whenever no two
/// inserted symbols can be adjacent.
ChannelMonomial cond_prob_ins(const Word& x, const Word& y);
double cond_prob_ins(const Word& x, const Word& y, double p);

/// Number of embeddings of x in y with no two skipped positions adjacent.
BigInt gap_constrained_embeddings(const Word& y, const Word& x);

/// Emb(x; y) / C(|x|, |x| - |y|).
Rational cond_prob_kdel(const Word& x, const Word& y);

}  // namespace indel
