#include "indel/word.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "indel/exact.hpp"

namespace indel {

namespace {

void check_alphabet(unsigned q) {
  if (q < 2 || q > kMaxAlphabet) throw std::invalid_argument("alphabet size must lie in [2, 10]");
}

}  // namespace

Word::Word(unsigned q) : q_(q) { check_alphabet(q); }

Word::Word(std::vector<Symbol> symbols, unsigned q) : symbols_(std::move(symbols)), q_(q) {
  check_alphabet(q);
  for (Symbol s : symbols_)
    if (s >= q) throw std::invalid_argument("symbol outside alphabet");
}

Word Word::parse(std::string_view digits, unsigned q) {
  check_alphabet(q);
  std::vector<Symbol> s;
  s.reserve(digits.size());
  for (char ch : digits) {
    if (ch < '0' || ch > '9' || static_cast<unsigned>(ch - '0') >= q)
      throw std::invalid_argument(std::string("bad symbol '") + ch + "' for alphabet " + std::to_string(q));
    s.push_back(static_cast<Symbol>(ch - '0'));
  }
  return Word(std::move(s), q);
}

Word Word::from_index(std::uint64_t index, std::size_t length, unsigned q) {
  std::vector<Symbol> s(length);
  for (std::size_t i = length; i-- > 0;) {
    s[i] = static_cast<Symbol>(index % q);
    index /= q;
  }
  return Word(std::move(s), q);
}

std::string Word::str() const {
  std::string out(symbols_.size(), '0');
  for (std::size_t i = 0; i < symbols_.size(); ++i) out[i] = static_cast<char>('0' + symbols_[i]);
  return out;
}

void Word::push_back(Symbol s) {
  if (s >= q_) throw std::invalid_argument("symbol outside alphabet");
  symbols_.push_back(s);
}

void Word::append(std::span<const Symbol> tail) {
  for (Symbol s : tail)
    if (s >= q_) throw std::invalid_argument("symbol outside alphabet");
  symbols_.insert(symbols_.end(), tail.begin(), tail.end());
}

void Word::set(std::size_t i, Symbol s) {
  if (s >= q_) throw std::invalid_argument("symbol outside alphabet");
  symbols_.at(i) = s;
}

Word Word::with_inserted(std::size_t pos, Symbol s) const {
  Word w = *this;
  if (s >= q_) throw std::invalid_argument("symbol outside alphabet");
  w.symbols_.insert(w.symbols_.begin() + static_cast<std::ptrdiff_t>(pos), s);
  return w;
}

Word Word::with_erased(std::size_t pos) const {
  Word w = *this;
  w.symbols_.erase(w.symbols_.begin() + static_cast<std::ptrdiff_t>(pos));
  return w;
}

Word Word::slice(std::size_t from, std::size_t to) const {
  Word w(q_);
  w.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(from),
                    symbols_.begin() + static_cast<std::ptrdiff_t>(to));
  return w;
}

RunProfile runs(const Word& w) {
  RunProfile p;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    p.run_lengths.push_back(j - i);
    p.run_symbols.push_back(w[i]);
    if (j - i > p.r_max) {
      p.r_max = j - i;
      p.longest_idx = p.run_lengths.size() - 1;
    }
    i = j;
  }
  return p;
}

Word reconstruct(const RunProfile& profile, unsigned q) {
  if (profile.run_lengths.size() != profile.run_symbols.size())
    throw std::invalid_argument("run lengths and symbols differ in count");
  Word w(q);
  for (std::size_t i = 0; i < profile.count(); ++i) {
    if (profile.run_lengths[i] == 0) throw std::invalid_argument("zero-length run");
    if (i > 0 && profile.run_symbols[i] == profile.run_symbols[i - 1])
      throw std::invalid_argument("adjacent runs share a symbol");
    for (std::size_t k = 0; k < profile.run_lengths[i]; ++k) w.push_back(profile.run_symbols[i]);
  }
  return w;
}

// Bit-vector LCS (Hyyro's formulation of Allison-Dix). One bit per symbol of
// the shorter word; a zero bit in V marks a position matched by the LCS.
std::size_t lcs_length_bitparallel(std::span<const Symbol> a, std::span<const Symbol> b, unsigned q) {
  if (a.size() > b.size()) std::swap(a, b);
  const std::size_t m = a.size();
  if (m == 0) return 0;
  const std::size_t words = (m + 63) / 64;

  std::vector<std::uint64_t> match(static_cast<std::size_t>(q) * words, 0);
  for (std::size_t i = 0; i < m; ++i) match[a[i] * words + i / 64] |= std::uint64_t{1} << (i % 64);

  std::vector<std::uint64_t> v(words, ~std::uint64_t{0});
  for (Symbol c : b) {
    const std::uint64_t* mc = &match[c * words];
    std::uint64_t carry = 0;
    for (std::size_t k = 0; k < words; ++k) {
      const std::uint64_t u = v[k] & mc[k];
      const std::uint64_t s1 = v[k] + u;
      const std::uint64_t c1 = s1 < v[k];
      const std::uint64_t s2 = s1 + carry;
      const std::uint64_t c2 = s2 < s1;
      v[k] = s2 | (v[k] & ~mc[k]);
      carry = c1 | c2;
    }
  }

  std::size_t ones = 0;
  for (std::size_t k = 0; k < words; ++k) {
    std::uint64_t x = v[k];
    if (k == words - 1 && m % 64 != 0) x |= ~std::uint64_t{0} << (m % 64);
    ones += static_cast<std::size_t>(std::popcount(~x));
  }
  return ones;
}

std::size_t indel_distance(const Word& x, const Word& y) {
  if (x.alphabet() != y.alphabet()) throw std::invalid_argument("indel_distance: alphabet mismatch");
  const std::size_t l = lcs_length_bitparallel(x.symbols(), y.symbols(), x.alphabet());
  return x.size() + y.size() - 2 * l;
}

bool is_subsequence(const Word& y, const Word& x) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < x.size() && j < y.size(); ++i)
    if (x[i] == y[j]) ++j;
  return j == y.size();
}

bool is_alternating(const Word& w) {
  const unsigned q = w.alphabet();
  if (w.size() <= 1) return true;
  // The first q symbols must be distinct (when present); afterwards the word
  // repeats with period q.
  const std::size_t head = std::min<std::size_t>(q, w.size());
  std::vector<bool> seen(q, false);
  for (std::size_t i = 0; i < head; ++i) {
    if (seen[w[i]]) return false;
    seen[w[i]] = true;
  }
  for (std::size_t i = q; i < w.size(); ++i)
    if (w[i] != w[i - q]) return false;
  return true;
}

bool is_two_symbol_alternating(std::span<const Symbol> w) {
  if (w.size() <= 1) return true;
  if (w[0] == w[1]) return false;
  for (std::size_t i = 2; i < w.size(); ++i)
    if (w[i] != w[i - 2]) return false;
  return true;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace indel
