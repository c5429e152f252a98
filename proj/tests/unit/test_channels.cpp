#include <doctest.h>

#include <cmath>
#include <map>

#include "indel/channels.hpp"
#include "indel/combinatorics.hpp"
#include "indel/oracles.hpp"
#include "indel/rng.hpp"
#include "support.hpp"

using namespace indel;
using test::W;

namespace {

Word zeros(std::size_t n) { return Word(std::vector<Symbol>(n, 0), 2); }

}  // namespace

TEST_CASE("rng streams are reproducible and distinct") {
  Rng a(derive_seed(1, 2, 3, 0)), b(derive_seed(1, 2, 3, 0)), c(derive_seed(1, 2, 3, 1));
  for (int i = 0; i < 10; ++i) {
    const auto va = a.next();
    CHECK(va == b.next());
    CHECK(va != c.next());
  }
  CHECK(derive_seed(1, 0, 0, 0) != derive_seed(2, 0, 0, 0));
  CHECK(derive_seed(1, 1, 0, 0) != derive_seed(1, 0, 1, 0));
  Rng r(99);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(r.below(7) < 7);
  }
}

TEST_CASE("deletion channel") {
  const Word x = W("0110100111");
  CHECK(transmit_del(x, 0.0, 5) == x);
  CHECK(transmit_del(x, 1.0, 5).empty());
  CHECK(transmit_del(x, 0.3, 42) == transmit_del(x, 0.3, 42));
  for (std::uint64_t s = 0; s < 50; ++s) CHECK(is_subsequence(transmit_del(x, 0.3, s), x));

  // deleted fraction within 3 sigma
  const Word big = zeros(450);
  const double p = 0.02;
  const int trials = 20000;
  std::uint64_t deleted = 0;
  Rng rng(2024);
  for (int t = 0; t < trials; ++t) deleted += 450 - transmit_del(big, p, rng).size();
  const double N = 450.0 * trials;
  const double frac = double(deleted) / N;
  CHECK(std::abs(frac - p) < 3 * std::sqrt(p * (1 - p) / N));
}

TEST_CASE("insertion channel") {
  const Word x = W("0110");
  CHECK(transmit_ins(x, 0.0, 3) == x);
  CHECK(transmit_ins(x, 1.0, 3).size() == 9);
  for (std::uint64_t s = 0; s < 50; ++s) CHECK(is_subsequence(x, transmit_ins(x, 0.4, s)));

  const unsigned q = 4;
  const Word big = Word(std::vector<Symbol>(500, 3), q);
  const double p = 0.03;
  const int trials = 5000;
  double sum = 0;
  std::map<Symbol, std::uint64_t> hist;
  Rng rng(77);
  for (int t = 0; t < trials; ++t) {
    const Word y = transmit_ins(big, p, rng);
    sum += double(y.size() - 500);
    for (Symbol s : y)
      if (s != 3) ++hist[s];
  }
  const double mean = sum / trials, expect = p * 501;
  CHECK(std::abs(mean - expect) < 3 * std::sqrt(501 * p * (1 - p) / trials));
  // symbols 0..2 are only ever inserted; each should carry ~1/4 of insertions
  const double inserted = sum, share = inserted / q;
  for (Symbol s = 0; s < 3; ++s) CHECK(std::abs(double(hist[s]) - share) < 4 * std::sqrt(share));
}

TEST_CASE("k-deletion channel") {
  const Word x = W("01001");
  CHECK(transmit_kdel(x, 0, 1) == x);
  CHECK(transmit_kdel(x, 5, 1).empty());
  CHECK_THROWS_AS(transmit_kdel(x, 6, 1), std::domain_error);

  std::map<std::string, int> hist;
  const int trials = 100000;
  Rng rng(9);
  for (int t = 0; t < trials; ++t) ++hist[transmit_kdel(x, 2, rng).str()];
  const double se = std::sqrt(0.3 * 0.7 / trials);
  CHECK(std::abs(hist["001"] / double(trials) - 0.3) < 4 * se);
  CHECK(std::abs(hist["000"] / double(trials) - 0.1) < 4 * std::sqrt(0.09 / trials));
  for (const auto& [y, c] : hist)
    CHECK(std::abs(c / double(trials) - to_double(cond_prob_kdel(x, W(y)))) < 0.006);
}

TEST_CASE("deletion likelihood") {
  const ChannelMonomial m = cond_prob_del(W("01001"), W("001"));
  CHECK(m.coefficient == 3);
  CHECK(m.p_exp == 2);
  CHECK(m.one_minus_p_exp == 3);
  CHECK(cond_prob_del(W("01001"), W("001"), 0.1) == doctest::Approx(3 * 0.01 * 0.729));
  CHECK(cond_prob_del(W("0110"), W("0110"), 0.2) == doctest::Approx(std::pow(0.8, 4)));
  CHECK(cond_prob_del(W("0110"), W("111"), 0.2) == 0.0);

  // total probability over every subsequence
  for (std::size_t len = 0; len <= 10; ++len) {
    const Word x = Word::from_index((std::uint64_t{0x2d5} * 7) % (std::uint64_t{1} << len), len);
    double total = 0;
    for (std::size_t t = 0; t <= len; ++t)
      for (const Word& y : deletion_ball(x, t)) total += cond_prob_del(x, y, 0.37);
    CHECK(total == doctest::Approx(1.0));
  }
}

TEST_CASE("insertion likelihood") {
  CHECK(cond_prob_ins(W("0110"), W("0110"), 0.1) == doctest::Approx(std::pow(0.9, 5)));
  CHECK(cond_prob_ins(W("0"), W("00"), 0.1) == doctest::Approx(0.05 * 0.9 * 2));
  CHECK(cond_prob_ins(W("0"), W("11"), 0.1) == 0.0);

  // the gap-constrained count differs from Emb when inserted symbols would
  // have to be adjacent
  CHECK(gap_constrained_embeddings(W("000"), W("0")) == 1);
  CHECK(embedding_number(W("000"), W("0")) == 3);

  // sums to one over all outputs
  for (std::size_t len = 0; len <= 6; ++len)
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << len); i += 3) {
      const Word x = Word::from_index(i, len);
      double total = 0;
      for (std::size_t t = 0; t <= len + 1; ++t)
        for (const Word& y : insertion_ball(x, t)) total += cond_prob_ins(x, y, 0.23);
      REQUIRE(total == doctest::Approx(1.0));
    }
}

TEST_CASE("insertion sampler matches the likelihood") {
  const Word x = W("01");
  std::map<std::string, int> hist;
  const int trials = 200000;
  Rng rng(31);
  for (int t = 0; t < trials; ++t) ++hist[transmit_ins(x, 0.3, rng).str()];
  for (const auto& [y, c] : hist) CHECK(std::abs(c / double(trials) - cond_prob_ins(x, W(y), 0.3)) < 0.005);
}

TEST_CASE("k-deletion likelihood") {
  CHECK(cond_prob_kdel(W("01001"), W("001")) == Rational(3, 10));
  CHECK(cond_prob_kdel(W("01001"), W("01001")) == 1);
  for (std::size_t len = 0; len <= 12; ++len) {
    const Word x = Word::from_index((std::uint64_t{0xa5b} * 13) % (std::uint64_t{1} << len), len);
    for (std::size_t k = 0; k <= len; ++k) {
      Rational total = 0;
      for (const Word& y : deletion_ball(x, k)) total += cond_prob_kdel(x, y);
      REQUIRE(total == 1);
    }
  }
}

TEST_CASE("channel spec") {
  CHECK_THROWS(ChannelSpec::del(1.5).validate());
  CHECK_THROWS(ChannelSpec::ins(0.1, 1).validate());
  CHECK_NOTHROW(ChannelSpec::kdel(2).validate());
  CHECK(parse_channel_kind("ins") == ChannelKind::Ins);
  CHECK(to_string(ChannelKind::KDel) == "kdel");
  CHECK_THROWS(parse_channel_kind("DEL"));
}
