#include "indel/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace indel {

namespace {

template <class Int>
Int embedding_dp(std::span<const Symbol> x, std::span<const Symbol> y) {
  const std::size_t n = x.size(), m = y.size();
  const std::size_t k = n - m;  // callers guarantee 0 < m <= n
  std::vector<Int> dp(m + 1, Int(0));
  dp[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t hi = std::min(i, m - 1);
    const std::size_t lo = i > k ? i - k : 0;
    for (std::size_t j = hi + 1; j-- > lo;)
      if (x[i] == y[j]) dp[j + 1] += dp[j];
  }
  return dp[m];
}

// log2 C(n, k) with a little slack; used only to pick the integer width.
double log2_binomial(std::size_t n, std::size_t k) {
  return (std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) - std::lgamma(double(n - k) + 1)) / std::log(2.0) + 1.0;
}

BigInt from_u128(u128 v) {
  BigInt hi = static_cast<std::uint64_t>(v >> 64);
  return (hi << 64) | BigInt(static_cast<std::uint64_t>(v));
}

void ball_del_dfs(const Word& x, std::size_t from, std::size_t need,
                  const std::vector<std::vector<std::size_t>>& next, std::vector<Symbol>& cur,
                  std::vector<Word>& out) {
  if (need == 0) {
    out.emplace_back(cur, x.alphabet());
    return;
  }
  for (unsigned s = 0; s < x.alphabet(); ++s) {
    const std::size_t pos = next[from][s];
    if (pos == x.size() || x.size() - pos < need) continue;
    cur.push_back(static_cast<Symbol>(s));
    ball_del_dfs(x, pos + 1, need - 1, next, cur, out);
    cur.pop_back();
  }
}

void ball_ins_dfs(const Word& x, std::size_t matched, std::size_t remaining, std::vector<Symbol>& cur,
                  std::vector<Word>& out) {
  if (remaining == 0) {
    if (matched == x.size()) out.emplace_back(cur, x.alphabet());
    return;
  }
  for (unsigned s = 0; s < x.alphabet(); ++s) {
    const std::size_t m = (matched < x.size() && x[matched] == s) ? matched + 1 : matched;
    if (x.size() - m > remaining - 1) continue;
    cur.push_back(static_cast<Symbol>(s));
    ball_ins_dfs(x, m, remaining - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

BigInt embedding_number(std::span<const Symbol> x, std::span<const Symbol> y) {
  if (y.size() > x.size()) return 0;
  if (y.empty()) return 1;
  if (x.size() <= 120 || log2_binomial(x.size(), x.size() - y.size()) < 120.0)
    return from_u128(embedding_dp<u128>(x, y));
  return embedding_dp<BigInt>(x, y);
}

BigInt embedding_number(const Word& x, const Word& y) { return embedding_number(x.symbols(), y.symbols()); }

std::vector<Word> deletion_ball(const Word& x, std::size_t t) {
  if (t > x.size()) throw std::domain_error("deletion_ball: radius exceeds word length");
  // next[i][s] = first position >= i holding s, or |x|.
  std::vector<std::vector<std::size_t>> next(x.size() + 1, std::vector<std::size_t>(x.alphabet(), x.size()));
  for (std::size_t i = x.size(); i-- > 0;) {
    next[i] = next[i + 1];
    next[i][x[i]] = i;
  }
  std::vector<Word> out;
  std::vector<Symbol> cur;
  ball_del_dfs(x, 0, x.size() - t, next, cur, out);
  return out;
}

std::vector<Word> insertion_ball(const Word& x, std::size_t t) {
  std::vector<Word> out;
  std::vector<Symbol> cur;
  cur.reserve(x.size() + t);
  ball_ins_dfs(x, 0, x.size() + t, cur, out);
  return out;
}

BigInt insertion_ball_size(std::size_t n, std::size_t t, unsigned q) {
  BigInt total = 0, pw = 1;
  for (std::size_t i = 0; i <= t; ++i) {
    total += binomial(n + t, i) * pw;
    pw *= (q - 1);
  }
  return total;
}

BigInt words_with_runs_at_most(std::size_t n, std::size_t k) {
  if (n == 0) return 1;
  if (k == 0) return 0;
  // compositions of n into parts <= k, times two choices of the first symbol
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[0] = 1;
  BigInt window = 1;  // sum of c[i-k .. i-1]
  for (std::size_t i = 1; i <= n; ++i) {
    c[i] = window;
    window += c[i];
    if (i >= k) window -= c[i - k];
  }
  return 2 * c[n];
}

Rational tau_of_space(std::size_t n) {
  if (n == 0) throw std::domain_error("tau_of_space: n must be positive");
  BigInt weighted = 0, prev = 0;
  for (std::size_t r = 1; r <= n; ++r) {
    BigInt b = words_with_runs_at_most(n, r);
    weighted += BigInt(r) * (b - prev);
    prev = std::move(b);
  }
  return Rational(weighted, BigInt(1) << n);
}

}  // namespace indel
