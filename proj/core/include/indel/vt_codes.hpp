#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "indel/rng.hpp"
#include "indel/word.hpp"

namespace indel {

/// Largest length for which codes are enumerated exhaustively.
inline constexpr std::size_t kMaxEnumerableLength = 24;

struct VtParams {
  std::size_t n = 0;
  std::size_t a = 0;  ///< residue mod n + 1
};

struct SvtParams {
  std::size_t n = 0;
  std::size_t a = 0;  ///< residue mod P
  std::size_t P = 0;  ///< 0 selects svt_default_modulus(n)
  unsigned b = 0;     ///< weight parity

  std::size_t modulus() const;
};

/// ceil(log2 n) + 2, clamped to [2, n + 1].
std::size_t svt_default_modulus(std::size_t n);

class DecodeFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// sum_i i * x_i with 1-based positions.
std::uint64_t vt_checksum(const Word& x);

bool vt_is_member(const Word& x, const VtParams& params);

/// Recovers the codeword from one deletion using the weight/checksum rule.
/// Requires |y| = n - 1 and binary y; throws std::domain_error otherwise.
Word vt_decode_1del(const Word& y, const VtParams& params);

bool svt_is_member(const Word& x, const SvtParams& params);

/// Recovers the codeword when the deleted position (0-based, in the
/// codeword) is known to lie in [window_start, window_start + P - 1).
/// Throws DecodeFailure if no insertion in the window yields a member.
Word svt_decode_1del(const Word& y, const SvtParams& params, std::size_t window_start);

std::vector<Word> enumerate_vt(const VtParams& params);
std::vector<Word> enumerate_svt(const SvtParams& params);

enum class CodeKind { All, Vt, Svt };

std::string to_string(CodeKind k);
CodeKind parse_code_kind(const std::string& s);

/// A binary block code of length n used as the message set of an experiment.
class Code {
 public:
  static Code all(std::size_t n, unsigned q = 2);
  static Code vt(const VtParams& p);
  static Code svt(const SvtParams& p);

  CodeKind kind() const noexcept { return kind_; }
  std::size_t length() const noexcept { return n_; }
  unsigned alphabet() const noexcept { return q_; }
  const VtParams& vt_params() const noexcept { return vt_; }
  const SvtParams& svt_params() const noexcept { return svt_; }

  bool contains(const Word& w) const;

  /// Uniform codeword. VT and SVT draw by rejection on the checksum, which
  /// is exactly uniform over the code.
  Word sample(Rng& rng) const;

  /// All members in lexicographic order; throws std::domain_error above
  /// kMaxEnumerableLength.
  std::vector<Word> enumerate() const;

  std::string describe() const;

 private:
  CodeKind kind_ = CodeKind::All;
  std::size_t n_ = 0;
  unsigned q_ = 2;
  VtParams vt_{};
  SvtParams svt_{};
};

}  // namespace indel
