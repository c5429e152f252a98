#include "indel/oracles.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace indel::oracle {

namespace {

void guard(std::size_t bits, std::size_t limit, const char* what) {
  if (bits > limit) throw std::domain_error(std::string(what) + ": input too large for exhaustive search");
}

Word pick(const Word& x, std::uint64_t mask) {
  Word w(x.alphabet());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (mask >> i & 1) w.push_back(x[i]);
  return w;
}

std::uint64_t word_count(unsigned q, std::size_t len) {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < len; ++i) c *= q;
  return c;
}

bool contains(const Word& big, const Word& small) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < big.size() && j < small.size(); ++i)
    if (big[i] == small[j]) ++j;
  return j == small.size();
}

}  // namespace

std::uint64_t embedding_number(const Word& x, const Word& y) {
  guard(x.size(), 24, "embedding_number");
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << x.size()); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != y.size()) continue;
    std::size_t j = 0;
    bool ok = true;
    for (std::size_t i = 0; i < x.size() && ok; ++i)
      if (mask >> i & 1) ok = x[i] == y[j++];
    count += ok;
  }
  return count;
}

std::map<Word, std::uint64_t> subsequence_counts(const Word& x) {
  guard(x.size(), 24, "subsequence_counts");
  std::map<Word, std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << x.size()); ++mask) ++out[pick(x, mask)];
  return out;
}

std::vector<Word> deletion_ball(const Word& x, std::size_t t) {
  guard(x.size(), 24, "deletion_ball");
  if (t > x.size()) throw std::domain_error("deletion_ball: radius exceeds word length");
  std::set<Word> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << x.size()); ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) == x.size() - t) out.insert(pick(x, mask));
  return {out.begin(), out.end()};
}

std::vector<Word> insertion_ball(const Word& x, std::size_t t) {
  std::set<Word> frontier{x};
  for (std::size_t r = 0; r < t; ++r) {
    std::set<Word> next;
    for (const Word& w : frontier)
      for (std::size_t pos = 0; pos <= w.size(); ++pos)
        for (unsigned s = 0; s < x.alphabet(); ++s) next.insert(w.with_inserted(pos, static_cast<Symbol>(s)));
    frontier.swap(next);
  }
  return {frontier.begin(), frontier.end()};
}

std::size_t lcs_length(const Word& a, const Word& b) {
  guard(a.size(), 24, "lcs_length");
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a.size()); ++mask) {
    const auto len = static_cast<std::size_t>(std::popcount(mask));
    if (len > best && contains(b, pick(a, mask))) best = len;
  }
  return best;
}

std::vector<Word> shortest_common_supersequences(const Word& a, const Word& b) {
  const unsigned q = a.alphabet();
  for (std::size_t len = std::max(a.size(), b.size());; ++len) {
    guard(len, 22, "shortest_common_supersequences");
    std::vector<Word> out;
    for (std::uint64_t i = 0; i < word_count(q, len); ++i) {
      Word w = Word::from_index(i, len, q);
      if (contains(w, a) && contains(w, b)) out.push_back(std::move(w));
    }
    if (!out.empty()) return out;
  }
}

std::vector<Word> longest_common_subsequences(const Word& a, const Word& b) {
  guard(a.size(), 24, "longest_common_subsequences");
  std::set<Word> best;
  std::size_t best_len = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a.size()); ++mask) {
    const auto len = static_cast<std::size_t>(std::popcount(mask));
    if (len < best_len) continue;
    Word w = pick(a, mask);
    if (!contains(b, w)) continue;
    if (len > best_len) {
      best.clear();
      best_len = len;
    }
    best.insert(std::move(w));
  }
  return {best.begin(), best.end()};
}

Rational tau_of_space(std::size_t n) {
  guard(n, 26, "tau_of_space");
  if (n == 0) throw std::domain_error("tau_of_space: n must be positive");
  std::uint64_t total = 0;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    std::size_t best = 1, cur = 1;
    for (std::size_t i = 1; i < n; ++i) {
      cur = ((w >> i & 1) == (w >> (i - 1) & 1)) ? cur + 1 : 1;
      best = std::max(best, cur);
    }
    total += best;
  }
  return Rational(BigInt(total), BigInt(1) << n);
}

std::vector<Word> vt_decode_candidates(const Word& y, const VtParams& p) {
  std::vector<Word> out;
  for (const Word& c : insertion_ball(y, 1))
    if (c.size() == p.n && vt_is_member(c, p)) out.push_back(c);
  return out;
}

std::vector<Word> svt_decode_candidates(const Word& y, const SvtParams& p, std::size_t window_start) {
  std::set<Word> out;
  const std::size_t P = p.modulus();
  for (std::size_t j = window_start; j < window_start + P - 1 && j <= y.size(); ++j)
    for (Symbol s : {Symbol{0}, Symbol{1}}) {
      Word c = y.with_inserted(j, s);
      if (svt_is_member(c, p)) out.insert(std::move(c));
    }
  return {out.begin(), out.end()};
}

std::pair<std::uint64_t, std::vector<Word>> max_embedding(const Word& y, std::size_t m) {
  const unsigned q = y.alphabet();
  guard(m, 22, "max_embedding");
  std::uint64_t best = 0;
  std::vector<Word> arg;
  for (std::uint64_t i = 0; i < word_count(q, m); ++i) {
    Word x = Word::from_index(i, m, q);
    const std::uint64_t e = embedding_number(x, y);
    if (e > best) {
      best = e;
      arg.clear();
    }
    if (e == best) arg.push_back(std::move(x));
  }
  return {best, arg};
}

Preimages deletion_preimages(std::size_t n, std::size_t k) {
  guard(n, 20, "deletion_preimages");
  if (k > n) throw std::domain_error("deletion_preimages: k exceeds n");
  const std::size_t m = n - k;
  Preimages pre(std::size_t{1} << m);
  std::vector<std::uint64_t> patterns;  // kept positions
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) == m) patterns.push_back(mask);

  std::vector<std::uint32_t> hits(std::size_t{1} << m, 0);
  std::vector<std::uint32_t> touched;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
    touched.clear();
    for (std::uint64_t keep : patterns) {
      // bit i of c is symbol i (most significant first, as in from_index)
      std::uint64_t y = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (keep >> i & 1) y = (y << 1) | (c >> (n - 1 - i) & 1);
      if (hits[y]++ == 0) touched.push_back(static_cast<std::uint32_t>(y));
    }
    for (std::uint32_t y : touched) {
      pre[y].emplace_back(static_cast<std::uint32_t>(c), hits[y]);
      hits[y] = 0;
    }
  }
  return pre;
}

long long weighted_distance_gap(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pre, std::size_t n,
                                const Word& x, long long baseline) {
  long long total = 0;
  for (auto [c, count] : pre) {
    const Word cw = Word::from_index(c, n, 2);
    total += static_cast<long long>(count) * (static_cast<long long>(indel::indel_distance(x, cw)) - baseline);
  }
  return total;
}

Rational expected_distance(const std::function<Word(const Word&)>& decoder, std::size_t n, std::size_t k) {
  guard(n, 16, "expected_distance");
  const Preimages pre = deletion_preimages(n, k);
  BigInt num = 0;
  for (std::size_t y = 0; y < pre.size(); ++y) {
    const Word out = decoder(Word::from_index(y, n - k, 2));
    num += weighted_distance_gap(pre[y], n, out, 0);
  }
  return Rational(num, (BigInt(1) << n) * n * binomial(n, k));
}

std::size_t indel_distance(const Word& x, const Word& y) { return x.size() + y.size() - 2 * lcs_length(x, y); }

}  // namespace indel::oracle
