#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace indel {

using Symbol = std::uint8_t;

/// Largest alphabet a Word may carry; symbols serialize as single digits.
inline constexpr unsigned kMaxAlphabet = 10;

/// A finite word over the alphabet {0, ..., q-1}.
///
/// The alphabet size travels with the symbols so binary and q-ary code paths
/// share one type. Ordering is lexicographic on the symbol sequence; two
/// words compare equal only if their symbols and alphabets agree.
class Word {
 public:
  Word() = default;
  explicit Word(unsigned q);
  Word(std::vector<Symbol> symbols, unsigned q);

  /// Parses an ASCII digit string such as "01001". Throws std::invalid_argument
  /// on characters outside [0, q).
  static Word parse(std::string_view digits, unsigned q = 2);

  /// Word of length `length` whose symbols are the base-q digits of `index`,
  /// most significant first. Used to sweep Sigma_q^n in lexicographic order.
  static Word from_index(std::uint64_t index, std::size_t length, unsigned q = 2);

  std::string str() const;

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  unsigned alphabet() const noexcept { return q_; }

  Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  void push_back(Symbol s);
  void append(std::span<const Symbol> tail);
  void set(std::size_t i, Symbol s);
  void reserve(std::size_t n) { symbols_.reserve(n); }

  Word with_inserted(std::size_t pos, Symbol s) const;
  Word with_erased(std::size_t pos) const;
  Word slice(std::size_t from, std::size_t to) const;

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.q_ == b.q_ && a.symbols_ == b.symbols_;
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
    if (auto c = a.symbols_ <=> b.symbols_; c != 0) return c;
    return a.q_ <=> b.q_;
  }

 private:
  std::vector<Symbol> symbols_;
  unsigned q_ = 2;
};

/// Shortest first, then lexicographic. The tie rule used by every decoder.
inline bool shortlex_less(const Word& a, const Word& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/// Maximal-run decomposition of a word.
struct RunProfile {
  std::vector<std::size_t> run_lengths;
  std::vector<Symbol> run_symbols;
  std::size_t longest_idx = 0;  ///< index of the FIRST run of maximal length
  std::size_t r_max = 0;

  std::size_t count() const noexcept { return run_lengths.size(); }
};

RunProfile runs(const Word& w);

/// Inverse of runs(). Throws std::invalid_argument if adjacent run symbols
/// coincide or a run length is zero.
Word reconstruct(const RunProfile& profile, unsigned q);

/// Indel (insertion/deletion only) distance |x| + |y| - 2 LCS(x, y).
/// Substitutions are not a move.
std::size_t indel_distance(const Word& x, const Word& y);

/// LCS length through the bit-parallel kernel used by indel_distance.
std::size_t lcs_length_bitparallel(std::span<const Symbol> a, std::span<const Symbol> b, unsigned q);

/// True iff y can be obtained from x by deleting symbols.
bool is_subsequence(const Word& y, const Word& x);

/// True iff w cyclically repeats all q symbols in one fixed order
/// (for q = 2: every run has length one).
bool is_alternating(const Word& w);

/// True iff w is ABAB... over two distinct symbols A, B. Words of length
/// at most one qualify trivially. This is the notion the two-channel
/// alternating-error analysis uses for every q.
bool is_two_symbol_alternating(std::span<const Symbol> w);

}  // namespace indel
