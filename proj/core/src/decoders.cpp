#include "indel/decoders.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <set>
#include <stdexcept>

#include "indel/combinatorics.hpp"

namespace indel {

namespace {

std::size_t parse_size(std::string_view s, const std::string& whole) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw std::invalid_argument("bad decoder spec: " + whole);
  return v;
}

// Keeps the candidate with the largest score; equal scores keep the
// lexicographically smaller word.
struct Argmax {
  std::optional<Word> best;
  BigInt score = -1;

  void offer(const Word& w, const BigInt& s) {
    if (!best || s > score || (s == score && w < *best)) {
      best = w;
      score = s;
    }
  }
};

}  // namespace

DecoderKind DecoderKind::parse(const std::string& s) {
  DecoderKind k;
  const auto colon = s.find(':');
  const std::string head = s.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : s.substr(colon + 1);
  if (head == "lazy") k.id = DecoderId::Lazy;
  else if (head == "en") k.id = DecoderId::EN;
  else if (head == "mlcode") k.id = DecoderId::MLCode;
  else if (head == "mld2del") k.id = DecoderId::MLD2Del;
  else if (head == "mld2ins") k.id = DecoderId::MLD2Ins;
  else if (head == "mlstar1") k.id = DecoderId::MLStar1Del;
  else if (head == "mlstar2") k.id = DecoderId::MLStar2Del;
  else if (head == "brute") k.id = DecoderId::BruteForce;
  else throw std::invalid_argument("unknown decoder: " + s);

  if (!tail.empty()) {
    if (k.id == DecoderId::EN) {
      k.m = parse_size(tail, s);
    } else if (k.id == DecoderId::BruteForce) {
      const auto dash = tail.find('-');
      if (dash == std::string::npos) throw std::invalid_argument("brute window must be lo-hi: " + s);
      k.lo = parse_size(std::string_view(tail).substr(0, dash), s);
      k.hi = parse_size(std::string_view(tail).substr(dash + 1), s);
      if (*k.lo > *k.hi) throw std::invalid_argument("brute window is empty: " + s);
    } else {
      throw std::invalid_argument("decoder takes no argument: " + s);
    }
  }
  return k;
}

std::string DecoderKind::str() const {
  switch (id) {
    case DecoderId::Lazy: return "lazy";
    case DecoderId::EN: return m ? "en:" + std::to_string(*m) : "en";
    case DecoderId::MLCode: return "mlcode";
    case DecoderId::MLD2Del: return "mld2del";
    case DecoderId::MLD2Ins: return "mld2ins";
    case DecoderId::MLStar1Del: return "mlstar1";
    case DecoderId::MLStar2Del: return "mlstar2";
    case DecoderId::BruteForce:
      return lo ? "brute:" + std::to_string(*lo) + "-" + std::to_string(*hi) : "brute";
  }
  return "?";
}

Word decode_lazy(const Word& y) { return y; }

Word decode_en(const Word& y, std::size_t m) {
  if (m < y.size()) throw std::domain_error("decode_en: target length shorter than the trace");
  if (y.empty()) return Word(std::vector<Symbol>(m, 0), y.alphabet());

  RunProfile prof = runs(y);
  std::vector<std::size_t> extra(prof.count(), 0);
  for (std::size_t step = y.size(); step < m; ++step) {
    // gain of one more symbol in run j: (r + k + 1) / (k + 1)
    std::size_t best = 0;
    for (std::size_t j = 1; j < prof.count(); ++j) {
      const auto num_j = static_cast<u128>(prof.run_lengths[j] + extra[j] + 1) * (extra[best] + 1);
      const auto num_b = static_cast<u128>(prof.run_lengths[best] + extra[best] + 1) * (extra[j] + 1);
      if (num_j > num_b || (num_j == num_b && extra[j] > 0 && extra[best] == 0)) best = j;
    }
    ++extra[best];
  }
  for (std::size_t j = 0; j < prof.count(); ++j) prof.run_lengths[j] += extra[j];
  return reconstruct(prof, y.alphabet());
}

Word decode_ml_code(const Word& y, std::span<const Word> code, bool* zero_likelihood) {
  if (code.empty()) throw std::invalid_argument("decode_ml_code: empty code");
  Argmax am;
  for (const Word& c : code) am.offer(c, embedding_number(c, y));
  if (zero_likelihood) *zero_likelihood = am.score == 0;
  return *am.best;
}

MldResult decode_mld_two_del(const Word& y1, const Word& y2, std::size_t cap) {
  const std::size_t len = scs_length(y1, y2);
  const std::size_t band = len - std::min(y1.size(), y2.size());
  const unsigned q = y1.alphabet();
  MldResult r;
  BigInt best = -1;
  std::vector<Symbol> best_syms;
  r.truncated = !for_each_scs(y1, y2, band, cap, [&](std::span<const Symbol> x) {
    ++r.candidates;
    BigInt s = embedding_number(x, y1.symbols());
    s *= embedding_number(x, y2.symbols());
    if (s > best) {  // visits are lexicographic, so the first maximum wins ties
      best = std::move(s);
      best_syms.assign(x.begin(), x.end());
    }
    return true;
  });
  r.word = Word(std::move(best_syms), q);
  r.score = best;
  return r;
}

MldResult decode_mld_two_del(const Word& y1, const Word& y2, const Code& code, std::size_t cap) {
  MldResult open = decode_mld_two_del(y1, y2, cap);
  if (code.kind() == CodeKind::All) return open;

  const std::size_t n = code.length();
  const std::size_t len = open.word.size();
  std::set<Word> pool;
  if (len == n) {
    const std::size_t band = len - std::min(y1.size(), y2.size());
    for_each_scs(y1, y2, band, cap, [&](std::span<const Symbol> x) {
      Word w(std::vector<Symbol>(x.begin(), x.end()), y1.alphabet());
      if (code.contains(w)) pool.insert(std::move(w));
      return true;
    });
  } else if (len + 1 == n) {
    const std::size_t band = len - std::min(y1.size(), y2.size());
    for_each_scs(y1, y2, band, cap, [&](std::span<const Symbol> x) {
      Word s(std::vector<Symbol>(x.begin(), x.end()), y1.alphabet());
      if (code.kind() == CodeKind::Vt) {
        pool.insert(vt_decode_1del(s, code.vt_params()));
      } else {
        for (Word& c : insertion_ball(s, 1))
          if (code.contains(c)) pool.insert(std::move(c));
      }
      return true;
    });
  }
  if (pool.empty()) return open;

  Argmax am;
  for (const Word& c : pool) am.offer(c, embedding_number(c, y1) * embedding_number(c, y2));
  MldResult r;
  r.word = *am.best;
  r.score = am.score;
  r.candidates = pool.size();
  r.truncated = open.truncated;
  r.restricted = true;
  return r;
}

MldResult decode_mld_two_ins(const Word& y1, const Word& y2, std::size_t cap) {
  LcsResult lcs = enumerate_lcs(y1, y2, cap);
  Argmax am;
  for (const Word& x : lcs.candidates) am.offer(x, embedding_number(y1, x) * embedding_number(y2, x));
  MldResult r;
  r.word = *am.best;
  r.score = am.score;
  r.candidates = lcs.candidates.size();
  r.truncated = lcs.truncated;
  return r;
}

BigInt objective_f(const Word& y, const Word& x, std::size_t k, const Membership& code) {
  BigInt total = 0;
  for (const Word& c : insertion_ball(y, k)) {
    if (code && !code(c)) continue;
    total += BigInt(indel_distance(x, c)) * embedding_number(c, y);
  }
  return total;
}

BruteForceResult brute_force_ml_star(const Word& y, std::size_t k, std::size_t lo, std::size_t hi,
                                     const Membership& code, std::uint64_t max_candidates) {
  if (lo > hi) throw std::invalid_argument("brute_force_ml_star: empty length window");
  const unsigned q = y.alphabet();
  std::uint64_t total = 0;
  for (std::size_t len = lo; len <= hi; ++len) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < len && count <= max_candidates; ++i) count *= q;
    total += count;
    if (total > max_candidates) throw std::domain_error("brute_force_ml_star: search space too large");
  }

  // Channel inputs with their weights, heaviest first so that the running
  // sum crosses the incumbent as early as possible.
  struct Term {
    Word c;
    std::uint64_t weight;
  };
  std::vector<Term> terms;
  for (Word& c : insertion_ball(y, k)) {
    if (code && !code(c)) continue;
    terms.push_back({std::move(c), 0});
  }
  for (Term& t : terms) t.weight = embedding_number(t.c, y).convert_to<std::uint64_t>();
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.weight > b.weight; });

  BruteForceResult r;
  std::uint64_t best = UINT64_MAX;
  for (std::size_t len = lo; len <= hi; ++len) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < len; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      const Word x = Word::from_index(idx, len, q);
      std::uint64_t s = 0;
      bool pruned = false;
      for (const Term& t : terms) {
        s += t.weight * indel_distance(x, t.c);
        if (s > best) {
          pruned = true;
          break;
        }
      }
      ++r.evaluated;
      if (pruned) continue;
      if (s < best) {
        best = s;
        r.best = x;
        r.minimizers = 1;
      } else {
        ++r.minimizers;
      }
    }
  }
  r.score = best;
  return r;
}

Word ml_star_1del(const Word& y, std::ostream* warn) {
  if (warn && y.size() + 1 < 17)
    *warn << "warning: lazy decoding is only shown optimal for n >= 17 (n = " << y.size() + 1 << ")\n";
  return y;
}

long long two_del_condition(long long n, long long r_i, long long r) {
  return 2 * n * n - 4 * n * r_i - 6 * n + r_i * r_i + 3 * r_i + r + 1;
}

Word ml_star_2del(const Word& y) {
  if (y.alphabet() != 2) throw std::domain_error("ml_star_2del: binary words only");
  const RunProfile prof = runs(y);
  const auto n = static_cast<long long>(y.size() + 2);
  if (two_del_condition(n, static_cast<long long>(prof.r_max), static_cast<long long>(prof.count())) >= 0) return y;
  return decode_en(y, y.size() + 1);
}

}  // namespace indel
