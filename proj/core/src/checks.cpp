#include "indel/checks.hpp"

#include <cmath>
#include <sstream>

#include "indel/combinatorics.hpp"
#include "indel/decoders.hpp"
#include "indel/experiment.hpp"
#include "indel/oracles.hpp"
#include "indel/supersequences.hpp"
#include "indel/vt_codes.hpp"

namespace indel::oracle {

namespace {

constexpr std::size_t kKeptSamples = 5;

std::uint64_t pow_u(unsigned q, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= q;
  return r;
}

std::string join(const std::vector<Word>& ws) {
  std::string s = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? "," : "") + ws[i].str();
  return s + "}";
}

// sum_{i <= t} C(n + t, i) (q - 1)^i, evaluated here rather than through the
// library helper.
BigInt ball_formula(std::size_t n, std::size_t t, unsigned q) {
  BigInt total = 0, power = 1;
  for (std::size_t i = 0; i <= t; ++i) {
    BigInt c = 1;
    for (std::size_t j = 0; j < i; ++j) c = c * (n + t - j) / (j + 1);
    total += c * power;
    power *= q - 1;
  }
  return total;
}

}  // namespace

void CheckReport::fail(std::string what) {
  ++violations;
  if (samples.size() < kKeptSamples) samples.push_back(std::move(what));
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  os << name << ": " << checked << " checked, " << violations << " violations";
  if (!note.empty()) os << " (" << note << ")";
  for (const std::string& s : samples) os << "\n    " << s;
  return os.str();
}

CheckReport check_embedding(std::size_t max_len) {
  CheckReport r;
  r.name = "emb n<=" + std::to_string(max_len);
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (std::uint64_t xi = 0; xi < pow_u(2, len); ++xi) {
      const Word x = Word::from_index(xi, len, 2);
      const auto counts = subsequence_counts(x);
      for (std::size_t m = 0; m <= len; ++m)
        for (std::uint64_t yi = 0; yi < pow_u(2, m); ++yi) {
          const Word y = Word::from_index(yi, m, 2);
          const auto it = counts.find(y);
          const std::uint64_t want = it == counts.end() ? 0 : it->second;
          ++r.checked;
          if (indel::embedding_number(x, y) != want)
            r.fail("Emb(" + x.str() + ";" + y.str() + ") != " + std::to_string(want));
        }
      for (std::size_t t = 0; t <= len; ++t) {
        const auto ball = indel::deletion_ball(x, t);
        BigInt total = 0;
        for (const Word& y : ball) total += indel::embedding_number(x, y);
        ++r.checked;
        if (total != binomial(len, t)) r.fail("sum over D_" + std::to_string(t) + "(" + x.str() + ") != C(n,t)");
        ++r.checked;
        if (ball != oracle::deletion_ball(x, t)) r.fail("D_" + std::to_string(t) + "(" + x.str() + ") differs");
      }
    }
  }
  return r;
}

CheckReport check_insertion_balls(std::size_t max_len, unsigned max_q) {
  CheckReport r;
  r.name = "insertion balls n<=" + std::to_string(max_len) + " q<=" + std::to_string(max_q);
  for (unsigned q = 2; q <= max_q; ++q)
    for (std::size_t len = 0; len <= max_len; ++len)
      for (std::uint64_t xi = 0; xi < pow_u(q, len); ++xi) {
        const Word x = Word::from_index(xi, len, q);
        for (std::size_t t = 1; t <= 2; ++t) {
          const auto ball = indel::insertion_ball(x, t);
          ++r.checked;
          if (BigInt(ball.size()) != ball_formula(len, t, q) || insertion_ball_size(len, t, q) != ball_formula(len, t, q))
            r.fail("|I_" + std::to_string(t) + "(" + x.str() + ")| = " + std::to_string(ball.size()));
          if (len <= 5 && q <= 3) {
            ++r.checked;
            if (ball != oracle::insertion_ball(x, t)) r.fail("I_" + std::to_string(t) + "(" + x.str() + ") differs");
          }
        }
      }
  return r;
}

CheckReport check_scs(std::size_t max_len) {
  CheckReport r;
  r.name = "scs |y|<=" + std::to_string(max_len);
  std::vector<Word> words;
  for (std::size_t len = 0; len <= max_len; ++len)
    for (std::uint64_t i = 0; i < pow_u(2, len); ++i) words.push_back(Word::from_index(i, len, 2));

  for (const Word& a : words)
    for (const Word& b : words) {
      const auto want = shortest_common_supersequences(a, b);
      const ScsResult got = enumerate_scs(a, b);
      ++r.checked;
      if (got.candidates != want || got.length != want.front().size())
        r.fail("SCS(" + a.str() + "," + b.str() + ") = " + join(got.candidates) + " expected " + join(want));
      const std::size_t band = got.length - std::min(a.size(), b.size());
      ++r.checked;
      if (enumerate_scs(a, b, band).candidates != want) r.fail("banded SCS(" + a.str() + "," + b.str() + ") differs");
      if (a.size() <= 6 && b.size() <= 6) {
        ++r.checked;
        const auto lw = longest_common_subsequences(a, b);
        if (enumerate_lcs(a, b).candidates != lw) r.fail("LCS(" + a.str() + "," + b.str() + ") differs");
      }
    }
  return r;
}

CheckReport check_lazy_law(std::size_t n) {
  CheckReport r;
  r.name = "lazy 1-del n=" + std::to_string(n);
  const Rational v = exact_expected_distance(DecoderKind::of(DecoderId::Lazy), n, 1);
  r.note = "value " + to_string(v);
  ++r.checked;
  if (v != Rational(1, static_cast<long long>(n))) r.fail("lazy gives " + to_string(v));
  if (n <= 16) {
    ++r.checked;
    if (v != expected_distance([](const Word& y) { return y; }, n, 1)) r.fail("enumeration oracle disagrees");
  }
  return r;
}

CheckReport check_en_vs_lazy(std::size_t n, bool expect_worse) {
  CheckReport r;
  r.name = "EN^n vs lazy n=" + std::to_string(n);
  const Rational v = exact_expected_distance(DecoderKind::of(DecoderId::EN), n, 1);
  const Rational lazy(1, static_cast<long long>(n));
  r.note = "EN " + to_string(v) + " ~ " + std::to_string(to_double(v)) + ", lazy " + to_string(lazy);
  ++r.checked;
  if (expect_worse && !(v > lazy)) r.fail("EN^n is not worse than lazy");
  if (n <= 16) {
    ++r.checked;
    if (v != expected_distance([n](const Word& y) { return decode_en(y, n); }, n, 1))
      r.fail("enumeration oracle disagrees");
  }
  return r;
}

CheckReport check_two_del_condition(std::size_t n) {
  CheckReport r;
  r.name = "2-del condition n=" + std::to_string(n);
  const Preimages pre = deletion_preimages(n, 2);
  for (std::uint64_t yi = 0; yi < pre.size(); ++yi) {
    const Word y = Word::from_index(yi, n - 2, 2);
    const long long gap = weighted_distance_gap(pre[yi], n, decode_en(y, n - 1), 2);
    const RunProfile prof = runs(y);
    const long long poly = two_del_condition(static_cast<long long>(n), static_cast<long long>(prof.r_max),
                                             static_cast<long long>(prof.count()));
    ++r.checked;
    if ((gap >= 0) != (poly >= 0))
      r.fail("y=" + y.str() + " exact " + std::to_string(gap) + " polynomial " + std::to_string(poly));
  }
  return r;
}

CheckReport check_ml_star_window(std::size_t n) {
  CheckReport r;
  r.name = "ML* window n=" + std::to_string(n);
  std::uint64_t ties = 0;
  for (std::uint64_t yi = 0; yi < pow_u(2, n - 2); ++yi) {
    const Word y = Word::from_index(yi, n - 2, 2);
    const BruteForceResult b = brute_force_ml_star(y, 2, n - 2, n + 1);
    ++r.checked;
    if (b.best.size() != n - 2 && b.best.size() != n - 1)
      r.fail("y=" + y.str() + " minimizer " + b.best.str() + " has length " + std::to_string(b.best.size()));
    if (b.minimizers != 1) {
      ++ties;
      continue;
    }
    const Word ml = ml_star_2del(y);
    ++r.checked;
    if (b.best != ml) r.fail("y=" + y.str() + " minimizer " + b.best.str() + " but ml_star_2del gives " + ml.str());
  }
  r.note = std::to_string(ties) + " traces with tied minimizers";
  return r;
}

CheckReport check_vt(std::size_t n) {
  CheckReport r;
  r.name = "VT n=" + std::to_string(n);
  for (std::size_t a = 0; a <= n; ++a) {
    const VtParams params{n, a};
    for (const Word& c : enumerate_vt(params))
      for (const Word& y : indel::deletion_ball(c, 1)) {
        ++r.checked;
        const Word got = vt_decode_1del(y, params);
        if (got != c) r.fail("a=" + std::to_string(a) + " y=" + y.str() + " gave " + got.str() + " not " + c.str());
        const auto search = vt_decode_candidates(y, params);
        if (search.size() != 1 || search.front() != c)
          r.fail("a=" + std::to_string(a) + " y=" + y.str() + " search found " + join(search));
      }
  }
  return r;
}

CheckReport check_tau(std::size_t n) {
  CheckReport r;
  r.name = "tau n=" + std::to_string(n);
  const Rational t = indel::tau_of_space(n);
  r.note = "tau " + std::to_string(to_double(t)) + ", bound " + std::to_string(2 * std::log2(static_cast<double>(n)));
  ++r.checked;
  // the bound is irrational; the margins here are far above double rounding
  if (to_double(t) > 2 * std::log2(static_cast<double>(n)) + 1e-12) r.fail("bound exceeded");
  if (n <= 16) {
    ++r.checked;
    if (t != oracle::tau_of_space(n)) r.fail("DP " + to_string(t) + " vs enumeration " + to_string(oracle::tau_of_space(n)));
  }
  return r;
}

}  // namespace indel::oracle
