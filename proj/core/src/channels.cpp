#include "indel/channels.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "indel/combinatorics.hpp"

namespace indel {

void ChannelSpec::validate() const {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("channel probability must lie in [0, 1]");
  if (q < 2 || q > kMaxAlphabet) throw std::invalid_argument("channel alphabet must lie in [2, 10]");
}

std::string to_string(ChannelKind k) {
  switch (k) {
    case ChannelKind::Del: return "del";
    case ChannelKind::Ins: return "ins";
    case ChannelKind::KDel: return "kdel";
  }
  return "?";
}

ChannelKind parse_channel_kind(const std::string& s) {
  if (s == "del") return ChannelKind::Del;
  if (s == "ins") return ChannelKind::Ins;
  if (s == "kdel") return ChannelKind::KDel;
  throw std::invalid_argument("unknown channel kind: " + s);
}

Word transmit_del(const Word& x, double p, Rng& rng) {
  Word y(x.alphabet());
  y.reserve(x.size());
  for (Symbol s : x)
    if (!rng.bernoulli(p)) y.push_back(s);
  return y;
}

Word transmit_ins(const Word& x, double p, Rng& rng) {
  const unsigned q = x.alphabet();
  Word y(q);
  y.reserve(x.size() + 8);
  for (std::size_t gap = 0; gap <= x.size(); ++gap) {
    if (rng.bernoulli(p)) y.push_back(static_cast<Symbol>(rng.below(q)));
    if (gap < x.size()) y.push_back(x[gap]);
  }
  return y;
}

Word transmit_kdel(const Word& x, std::size_t k, Rng& rng) {
  if (k > x.size()) throw std::domain_error("transmit_kdel: k exceeds word length");
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<bool> drop(x.size(), false);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.below(x.size() - i);
    std::swap(idx[i], idx[j]);
    drop[idx[i]] = true;
  }
  Word y(x.alphabet());
  y.reserve(x.size() - k);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!drop[i]) y.push_back(x[i]);
  return y;
}

Word transmit(const ChannelSpec& ch, const Word& x, Rng& rng) {
  switch (ch.kind) {
    case ChannelKind::Del: return transmit_del(x, ch.p, rng);
    case ChannelKind::Ins: return transmit_ins(x, ch.p, rng);
    case ChannelKind::KDel: return transmit_kdel(x, ch.k, rng);
  }
  throw std::logic_error("unreachable channel kind");
}

double ChannelMonomial::value(double p, unsigned q) const {
  if (coefficient == 0) return 0.0;
  return coefficient.convert_to<double>() * std::pow(p, double(p_exp)) * std::pow(1.0 - p, double(one_minus_p_exp)) *
         std::pow(double(q), -double(q_inv_exp));
}

ChannelMonomial cond_prob_del(const Word& x, const Word& y) {
  ChannelMonomial m;
  if (y.size() > x.size()) return m;
  m.coefficient = embedding_number(x, y);
  m.p_exp = x.size() - y.size();
  m.one_minus_p_exp = y.size();
  return m;
}

double cond_prob_del(const Word& x, const Word& y, double p) { return cond_prob_del(x, y).value(p); }

BigInt gap_constrained_embeddings(const Word& y, const Word& x) {
  if (x.size() > y.size()) return 0;
  // f[j][s]: x[0..j) matched, s = previous position of y was skipped
  std::vector<BigInt> matched(x.size() + 1, BigInt(0)), skipped(x.size() + 1, BigInt(0));
  matched[0] = 1;
  for (std::size_t i = 0; i < y.size(); ++i) {
    std::vector<BigInt> nm(x.size() + 1, BigInt(0)), ns(x.size() + 1, BigInt(0));
    for (std::size_t j = 0; j <= x.size(); ++j) {
      const BigInt total = matched[j] + skipped[j];
      if (total == 0) continue;
      if (j < x.size() && y[i] == x[j]) nm[j + 1] += total;
      ns[j] += matched[j];
    }
    matched.swap(nm);
    skipped.swap(ns);
  }
  return matched[x.size()] + skipped[x.size()];
}

ChannelMonomial cond_prob_ins(const Word& x, const Word& y) {
  ChannelMonomial m;
  if (y.size() < x.size() || y.size() - x.size() > x.size() + 1) return m;
  const std::size_t t = y.size() - x.size();
  m.coefficient = gap_constrained_embeddings(y, x);
  m.p_exp = t;
  m.q_inv_exp = t;
  m.one_minus_p_exp = x.size() + 1 - t;
  return m;
}

double cond_prob_ins(const Word& x, const Word& y, double p) { return cond_prob_ins(x, y).value(p, x.alphabet()); }

Rational cond_prob_kdel(const Word& x, const Word& y) {
  if (y.size() > x.size()) return Rational(0);
  return Rational(embedding_number(x, y), binomial(x.size(), x.size() - y.size()));
}

}  // namespace indel
