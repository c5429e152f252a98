#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "indel/channels.hpp"
#include "indel/decoders.hpp"
#include "indel/exact.hpp"
#include "indel/vt_codes.hpp"

namespace indel {

enum class Metric { LevenshteinRate, FailureRate, RunComponent, AltComponent };

std::string to_string(Metric m);
Metric parse_metric(const std::string& s);

struct CodeSpec {
  CodeKind kind = CodeKind::All;
  std::size_t a = 0;
  std::size_t P = 0;  ///< SVT modulus, 0 = default
  unsigned b = 0;

  Code build(std::size_t n, unsigned q) const;
};

struct ExperimentConfig {
  ChannelSpec channel;  ///< p is taken from p_grid per point
  unsigned t = 2;
  std::size_t n = 150;
  unsigned q = 2;
  CodeSpec code;
  DecoderKind decoder = DecoderKind::of(DecoderId::MLD2Del);
  std::vector<double> p_grid;
  std::uint64_t trials_per_point = 20000;
  std::uint64_t master_seed = 1;
  std::vector<Metric> metrics{Metric::LevenshteinRate};
  unsigned workers = 0;  ///< 0: INDEL_WORKERS, else hardware concurrency
  std::size_t scs_cap = 100000;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

/// Reads a config from JSON text, e.g.
/// {"channel":{"kind":"del"},"t":2,"n":150,"q":2,"code":{"code":"vt","a":0},
///  "decoder":"mld2del","p_grid":[0.01,0.02],"trials_per_point":20000,
///  "master_seed":7,"metrics":["levenshtein_rate"]}
ExperimentConfig parse_config(const std::string& json_text);
std::string config_to_json(const ExperimentConfig& cfg);

/// Integer tallies for one grid point; independent of scheduling.
struct PointResult {
  double p = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t dist_sum = 0, dist_sq_sum = 0;  ///< d_L(output, c)
  std::uint64_t run_sum = 0, run_sq_sum = 0;    ///< | |output| - n |
  std::uint64_t alt_sum = 0, alt_sq_sum = 0;    ///< d_L - | |output| - n |
  std::uint64_t failures = 0;
  std::uint64_t run_errors = 0, alt_errors = 0, other_errors = 0;
  std::uint64_t truncated = 0;
  double wall_seconds = 0.0;

  /// Mean and standard error of a per-trial quantity, normalized by n.
  static std::pair<double, double> mean_stderr(std::uint64_t sum, std::uint64_t sq, std::uint64_t trials, double scale);
};

struct AggregateResult {
  ExperimentConfig config;
  std::vector<PointResult> points;
  unsigned workers_used = 1;
};

unsigned resolve_workers(unsigned requested);

AggregateResult run_experiment(const ExperimentConfig& cfg);

/// One row of the fixed CSV schema.
struct CsvRow {
  std::string metric;
  unsigned q = 2;
  std::size_t n = 0;
  double p = 0.0;
  unsigned t = 2;
  std::string code;
  std::string decoder;
  double value = 0.0;
  double stderr_ = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

inline constexpr const char* kCsvHeader = "metric,q,n,p,t,code,decoder,value,stderr,trials,seed";

/// Rows for every requested metric at every grid point.
std::vector<CsvRow> to_rows(const AggregateResult& r);
void write_csv(std::ostream& os, const std::vector<CsvRow>& rows);
std::vector<CsvRow> read_csv(std::istream& is);

enum class ErrorCategory { None, Run, Alternating, Other };
std::string to_string(ErrorCategory c);

/// Classifies one decoding outcome. Correct outputs give None. A length
/// change in the direction of the channel (shorter for deletions, longer for
/// insertions) is a run error. An output of length n whose disagreements
/// with c are all two-symbol alternating segments read in swapped phase is
/// an alternating error. Anything else is Other.
ErrorCategory attribute_error(const Word& c, const Word& output, ChannelKind kind);

/// Same classification with the channel direction read off the traces:
/// any trace longer than c means insertions, otherwise deletions.
ErrorCategory attribute_error(const Word& c, const Word& y1, const Word& y2, const Word& output);

/// Exact expected normalized distance of a single-trace decoder over the
/// exact-k deletion channel, averaged uniformly over the code:
/// sum_y sum_{c in I_k(y) and C} Emb(c; y) d_L(D(y), c) / (|C| n C(n, k)).
/// Throws std::domain_error when 2^(n-k) exceeds 2^22.
Rational exact_expected_distance(const DecoderKind& decoder, std::size_t n, std::size_t k,
                                 const CodeSpec& code = {});

/// Applies a single-trace decoder for block length n. `code_words` is only
/// read by the mlcode decoder.
Word decode_single(const DecoderKind& decoder, const Word& y, std::size_t n, std::size_t k,
                   std::span<const Word> code_words = {});

}  // namespace indel
