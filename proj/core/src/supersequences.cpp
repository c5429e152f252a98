#include "indel/supersequences.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace indel {

namespace {

constexpr int kNeg = INT_MIN / 4;

// Suffix LCS table: at(i, j) = LCS(a[i..], b[j..]) restricted to the band.
class SuffixLcs {
 public:
  SuffixLcs(std::span<const Symbol> a, std::span<const Symbol> b, std::optional<std::size_t> band)
      : na_(a.size()), nb_(b.size()), cells_((na_ + 1) * (nb_ + 1), kNeg) {
    const long w = band ? static_cast<long>(*band) : LONG_MAX / 2;
    for (std::size_t i = na_ + 1; i-- > 0;) {
      const long li = static_cast<long>(i);
      const std::size_t jlo = static_cast<std::size_t>(std::max(0L, li - w));
      const std::size_t jhi = static_cast<std::size_t>(std::min(static_cast<long>(nb_), li + w));
      for (std::size_t j = jhi + 1; j-- > jlo;) {
        int v;
        if (i == na_ || j == nb_) v = 0;
        else if (a[i] == b[j]) v = at(i + 1, j + 1) == kNeg ? kNeg : 1 + at(i + 1, j + 1);
        else v = std::max(at(i + 1, j), at(i, j + 1));
        cells_[i * (nb_ + 1) + j] = v;
      }
    }
  }

  int at(std::size_t i, std::size_t j) const { return cells_[i * (nb_ + 1) + j]; }

 private:
  std::size_t na_, nb_;
  std::vector<int> cells_;
};

struct ScsWalker {
  std::span<const Symbol> a, b;
  const SuffixLcs& L;
  std::size_t cap;
  const std::function<bool(std::span<const Symbol>)>& visit;
  std::vector<Symbol> buf;
  std::size_t emitted = 0;
  bool stopped = false;

  void walk(std::size_t i, std::size_t j) {
    if (stopped) return;
    if (i == a.size() || j == b.size()) {
      const std::size_t mark = buf.size();
      if (i == a.size()) buf.insert(buf.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
      else buf.insert(buf.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
      if (emitted == cap || !visit(buf)) stopped = true;
      else ++emitted;
      buf.resize(mark);
      return;
    }
    if (a[i] == b[j]) {
      buf.push_back(a[i]);
      walk(i + 1, j + 1);
      buf.pop_back();
      return;
    }
    const int here = L.at(i, j);
    const bool take_a = L.at(i + 1, j) == here;
    const bool take_b = L.at(i, j + 1) == here;
    // smaller symbol first keeps the output lexicographic
    if (a[i] < b[j]) {
      if (take_a) step(a[i], i + 1, j);
      if (take_b) step(b[j], i, j + 1);
    } else {
      if (take_b) step(b[j], i, j + 1);
      if (take_a) step(a[i], i + 1, j);
    }
  }

  void step(Symbol s, std::size_t i, std::size_t j) {
    if (stopped) return;
    buf.push_back(s);
    walk(i, j);
    buf.pop_back();
  }
};

struct LcsWalker {
  std::span<const Symbol> a, b;
  unsigned q;
  const SuffixLcs& L;
  const std::vector<std::size_t>& next_a;  // (|a|+1) x q
  const std::vector<std::size_t>& next_b;
  std::size_t cap;
  LcsResult& out;
  std::vector<Symbol> buf;

  void walk(std::size_t i, std::size_t j, int need) {
    if (out.truncated) return;
    if (need == 0) {
      if (out.candidates.size() == cap) {
        out.truncated = true;
        return;
      }
      out.candidates.emplace_back(buf, q);
      return;
    }
    for (unsigned s = 0; s < q; ++s) {
      const std::size_t i2 = next_a[i * q + s], j2 = next_b[j * q + s];
      if (i2 == a.size() || j2 == b.size()) continue;
      if (1 + L.at(i2 + 1, j2 + 1) != need) continue;
      buf.push_back(static_cast<Symbol>(s));
      walk(i2 + 1, j2 + 1, need - 1);
      buf.pop_back();
    }
  }
};

std::vector<std::size_t> next_table(std::span<const Symbol> w, unsigned q) {
  std::vector<std::size_t> t((w.size() + 1) * q, w.size());
  for (std::size_t i = w.size(); i-- > 0;) {
    std::copy_n(t.begin() + static_cast<std::ptrdiff_t>((i + 1) * q), q, t.begin() + static_cast<std::ptrdiff_t>(i * q));
    t[i * q + w[i]] = i;
  }
  return t;
}

}  // namespace

std::size_t lcs_length(const Word& a, const Word& b) {
  const Word& lo = a.size() <= b.size() ? a : b;
  const Word& hi = a.size() <= b.size() ? b : a;
  std::vector<std::size_t> row(lo.size() + 1, 0);
  for (std::size_t i = 0; i < hi.size(); ++i) {
    std::size_t diag = 0;
    for (std::size_t j = 0; j < lo.size(); ++j) {
      const std::size_t up = row[j + 1];
      row[j + 1] = hi[i] == lo[j] ? diag + 1 : std::max(up, row[j]);
      diag = up;
    }
  }
  return row[lo.size()];
}

std::size_t scs_length(const Word& a, const Word& b) { return a.size() + b.size() - lcs_length(a, b); }

bool for_each_scs(const Word& a, const Word& b, std::optional<std::size_t> band, std::size_t cap,
                  const std::function<bool(std::span<const Symbol>)>& visit) {
  if (cap == 0) throw std::invalid_argument("for_each_scs: cap must be positive");
  if (a.alphabet() != b.alphabet()) throw std::invalid_argument("for_each_scs: alphabet mismatch");
  if (band) {
    const std::size_t gap = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
    if (*band < gap) throw std::invalid_argument("for_each_scs: band narrower than the length difference");
  }
  SuffixLcs L(a.symbols(), b.symbols(), band);
  ScsWalker w{a.symbols(), b.symbols(), L, cap, visit, {}, 0, false};
  w.buf.reserve(a.size() + b.size());
  w.walk(0, 0);
  return !w.stopped;
}

ScsResult enumerate_scs(const Word& a, const Word& b, std::optional<std::size_t> band, std::size_t cap) {
  ScsResult r;
  r.length = scs_length(a, b);
  const unsigned q = a.alphabet();
  r.truncated = !for_each_scs(a, b, band, cap, [&](std::span<const Symbol> s) {
    r.candidates.emplace_back(std::vector<Symbol>(s.begin(), s.end()), q);
    return true;
  });
  return r;
}

LcsResult enumerate_lcs(const Word& a, const Word& b, std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("enumerate_lcs: cap must be positive");
  if (a.alphabet() != b.alphabet()) throw std::invalid_argument("enumerate_lcs: alphabet mismatch");
  const unsigned q = a.alphabet();
  SuffixLcs L(a.symbols(), b.symbols(), std::nullopt);
  const auto na = next_table(a.symbols(), q), nb = next_table(b.symbols(), q);
  LcsResult r;
  r.length = static_cast<std::size_t>(L.at(0, 0));
  LcsWalker w{a.symbols(), b.symbols(), q, L, na, nb, cap, r, {}};
  w.walk(0, 0, L.at(0, 0));
  return r;
}

}  // namespace indel
