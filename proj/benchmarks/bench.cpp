#include <benchmark/benchmark.h>

#include "indel/channels.hpp"
#include "indel/combinatorics.hpp"
#include "indel/decoders.hpp"
#include "indel/rng.hpp"
#include "indel/supersequences.hpp"

using namespace indel;

namespace {

Word random_word(std::size_t n, unsigned q, std::uint64_t seed) {
  Rng rng(seed);
  Word w(q);
  for (std::size_t i = 0; i < n; ++i) w.push_back(static_cast<Symbol>(rng.below(q)));
  return w;
}

void BM_IndelDistance(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const Word a = random_word(n, 2, 1), b = random_word(n, 2, 2);
  for (auto _ : st) benchmark::DoNotOptimize(indel_distance(a, b));
}
BENCHMARK(BM_IndelDistance)->Arg(150)->Arg(450)->Arg(2000);

void BM_EmbeddingNumber(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const Word x = random_word(n, 2, 3);
  const Word y = transmit_del(x, 0.05, 4);
  for (auto _ : st) benchmark::DoNotOptimize(embedding_number(x, y));
}
BENCHMARK(BM_EmbeddingNumber)->Arg(150)->Arg(450);

void BM_EnumerateScs(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const Word x = random_word(n, 2, 5);
  const Word y1 = transmit_kdel(x, 2, 6), y2 = transmit_kdel(x, 2, 7);
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_scs(y1, y2).candidates.size());
}
BENCHMARK(BM_EnumerateScs)->Arg(150)->Arg(450);

void BM_MldTrial(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const Word x = random_word(n, 2, 8);
  std::uint64_t seed = 9;
  for (auto _ : st) {
    const Word y1 = transmit_del(x, 0.03, seed++), y2 = transmit_del(x, 0.03, seed++);
    benchmark::DoNotOptimize(decode_mld_two_del(y1, y2).word.size());
  }
}
BENCHMARK(BM_MldTrial)->Arg(150)->Arg(450);

}  // namespace

BENCHMARK_MAIN();
