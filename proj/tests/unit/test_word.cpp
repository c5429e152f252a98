#include <doctest.h>

#include <random>

#include "indel/combinatorics.hpp"
#include "indel/oracles.hpp"
#include "indel/supersequences.hpp"
#include "indel/word.hpp"
#include "support.hpp"

using namespace indel;
using test::W;

TEST_CASE("parse and print") {
  CHECK(W("01001").str() == "01001");
  CHECK(W("").empty());
  CHECK(Word::parse("0120", 3).alphabet() == 3);
  CHECK_THROWS_AS(Word::parse("012", 2), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("0a", 2), std::invalid_argument);
  CHECK_THROWS(Word(11));
}

TEST_CASE("from_index walks Sigma^n lexicographically") {
  CHECK(Word::from_index(0, 3).str() == "000");
  CHECK(Word::from_index(5, 3).str() == "101");
  CHECK(Word::from_index(7, 2, 3).str() == "21");
  for (std::uint64_t i = 0; i + 1 < 16; ++i) CHECK(Word::from_index(i, 4) < Word::from_index(i + 1, 4));
}

TEST_CASE("edits") {
  const Word x = W("0110");
  CHECK(x.with_inserted(0, 1).str() == "10110");
  CHECK(x.with_inserted(4, 0).str() == "01100");
  CHECK(x.with_erased(1).str() == "010");
  CHECK(x.slice(1, 3).str() == "11");
  CHECK(shortlex_less(W("11"), W("000")));
  CHECK(shortlex_less(W("001"), W("010")));
}

TEST_CASE("runs") {
  const RunProfile p = runs(W("00111010"));
  CHECK(p.run_lengths == std::vector<std::size_t>{2, 3, 1, 1, 1});
  CHECK(p.count() == 5);
  CHECK(p.r_max == 3);
  CHECK(p.longest_idx == 1);

  CHECK(runs(W("0000")).run_lengths == std::vector<std::size_t>{4});
  const RunProfile e = runs(W(""));
  CHECK(e.count() == 0);
  CHECK(e.r_max == 0);

  // the first of several longest runs
  CHECK(runs(W("0011011")).longest_idx == 0);
}

TEST_CASE("runs and reconstruct are inverse") {
  for (std::size_t len = 0; len <= 10; ++len)
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << len); ++i) {
      const Word w = Word::from_index(i, len);
      CHECK(reconstruct(runs(w), 2) == w);
    }
  const Word t = Word::parse("0012220", 3);
  CHECK(reconstruct(runs(t), 3) == t);

  RunProfile bad;
  bad.run_lengths = {1, 1};
  bad.run_symbols = {0, 0};
  CHECK_THROWS_AS(reconstruct(bad, 2), std::invalid_argument);
}

TEST_CASE("indel distance examples") {
  CHECK(indel_distance(W("01"), W("10")) == 2);
  CHECK(indel_distance(W("0110"), W("0110")) == 0);
  CHECK(indel_distance(W("0110"), W("110")) == 1);
  CHECK(indel_distance(W(""), W("0101")) == 4);
  // substitutions are not a move
  CHECK(indel_distance(W("000"), W("010")) == 2);
}

TEST_CASE("indel distance matches exhaustive LCS") {
  for (std::size_t la = 0; la <= 7; ++la)
    for (std::size_t lb = 0; lb <= 7; ++lb)
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << la); ++i)
        for (std::uint64_t j = 0; j < (std::uint64_t{1} << lb); j += 3) {
          const Word a = Word::from_index(i, la), b = Word::from_index(j, lb);
          REQUIRE(indel_distance(a, b) == oracle::indel_distance(a, b));
        }
}

TEST_CASE("indel distance is a metric") {
  std::mt19937_64 gen(7);
  auto rnd = [&](unsigned q) {
    Word w(q);
    const std::size_t len = gen() % 13;
    for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<Symbol>(gen() % q));
    return w;
  };
  for (int it = 0; it < 3000; ++it) {
    const unsigned q = 2 + static_cast<unsigned>(gen() % 3);
    const Word x = rnd(q), y = rnd(q), z = rnd(q);
    CHECK(indel_distance(x, y) == indel_distance(y, x));
    CHECK((indel_distance(x, y) == 0) == (x == y));
    CHECK(indel_distance(x, z) <= indel_distance(x, y) + indel_distance(y, z));
    CHECK(indel_distance(x, y) == x.size() + y.size() - 2 * lcs_length(x, y));
  }
}

TEST_CASE("bit-parallel LCS across word boundaries") {
  std::mt19937_64 gen(11);
  for (int it = 0; it < 200; ++it) {
    const unsigned q = 2 + static_cast<unsigned>(gen() % 4);
    Word a(q), b(q);
    const std::size_t la = gen() % 300, lb = gen() % 300;
    for (std::size_t i = 0; i < la; ++i) a.push_back(static_cast<Symbol>(gen() % q));
    for (std::size_t i = 0; i < lb; ++i) b.push_back(static_cast<Symbol>(gen() % q));
    REQUIRE(lcs_length_bitparallel(a.symbols(), b.symbols(), q) == lcs_length(a, b));
  }
}

TEST_CASE("deletion ball members sit at distance r") {
  for (std::size_t len = 0; len <= 8; ++len)
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << len); i += 5) {
      const Word x = Word::from_index(i, len);
      for (std::size_t r = 0; r <= len; ++r)
        for (const Word& y : deletion_ball(x, r)) REQUIRE(indel_distance(x, y) == r);
    }
}

TEST_CASE("subsequence") {
  CHECK(is_subsequence(W("001"), W("01001")));
  CHECK(is_subsequence(W(""), W("0110")));
  CHECK_FALSE(is_subsequence(W("10"), W("01")));
  CHECK_FALSE(is_subsequence(W("0000"), W("000")));
}

TEST_CASE("alternating predicates") {
  CHECK(is_alternating(W("010101")));
  CHECK(is_alternating(W("101")));
  CHECK(is_alternating(Word::parse("0120120", 3)));
  CHECK(is_alternating(Word::parse("2102", 3)));
  CHECK_FALSE(is_alternating(W("0110")));
  CHECK_FALSE(is_alternating(Word::parse("0101", 3)));  // misses symbol 2
  CHECK_FALSE(is_alternating(Word::parse("0121", 3)));

  const Word abab = Word::parse("1313", 4);
  CHECK(is_two_symbol_alternating(abab.symbols()));
  CHECK_FALSE(is_alternating(abab));
  CHECK_FALSE(is_two_symbol_alternating(Word::parse("0120", 3).symbols()));
  CHECK(is_two_symbol_alternating(W("1").symbols()));
}
