#include "indel/experiment.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "indel/combinatorics.hpp"

namespace indel {

using nlohmann::json;

std::string to_string(Metric m) {
  switch (m) {
    case Metric::LevenshteinRate: return "levenshtein_rate";
    case Metric::FailureRate: return "failure_rate";
    case Metric::RunComponent: return "run_component";
    case Metric::AltComponent: return "alt_component";
  }
  return "?";
}

Metric parse_metric(const std::string& s) {
  if (s == "levenshtein_rate") return Metric::LevenshteinRate;
  if (s == "failure_rate") return Metric::FailureRate;
  if (s == "run_component") return Metric::RunComponent;
  if (s == "alt_component") return Metric::AltComponent;
  throw std::invalid_argument("unknown metric: " + s);
}

std::string to_string(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::None: return "none";
    case ErrorCategory::Run: return "run";
    case ErrorCategory::Alternating: return "alternating";
    case ErrorCategory::Other: return "other";
  }
  return "?";
}

Code CodeSpec::build(std::size_t n, unsigned q) const {
  switch (kind) {
    case CodeKind::All: return Code::all(n, q);
    case CodeKind::Vt:
      if (q != 2) throw std::invalid_argument("VT codes are binary");
      return Code::vt({n, a});
    case CodeKind::Svt:
      if (q != 2) throw std::invalid_argument("SVT codes are binary");
      return Code::svt({n, a, P, b});
  }
  throw std::logic_error("unreachable code kind");
}

void ExperimentConfig::validate() const {
  if (t != 1 && t != 2) throw std::invalid_argument("t must be 1 or 2");
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (q < 2 || q > kMaxAlphabet) throw std::invalid_argument("q must lie in [2, 10]");
  if (trials_per_point == 0) throw std::invalid_argument("trials_per_point must be at least 1");
  if (p_grid.empty()) throw std::invalid_argument("p_grid must not be empty");
  for (double p : p_grid)
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p_grid values must lie in [0, 1]");
  if (decoder.traces() != t) throw std::invalid_argument("decoder " + decoder.str() + " needs t = " + std::to_string(decoder.traces()));
  if (decoder.id == DecoderId::MLD2Del && channel.kind != ChannelKind::Del)
    throw std::invalid_argument("mld2del expects the del channel");
  if (decoder.id == DecoderId::MLD2Ins && channel.kind != ChannelKind::Ins)
    throw std::invalid_argument("mld2ins expects the ins channel");
  if (channel.kind == ChannelKind::KDel && channel.k > n) throw std::invalid_argument("k exceeds n");
  if (metrics.empty()) throw std::invalid_argument("metrics must not be empty");
  code.build(n, q);
}

ExperimentConfig parse_config(const std::string& json_text) {
  const json j = json::parse(json_text);
  ExperimentConfig c;
  if (j.contains("channel")) {
    const json& ch = j.at("channel");
    c.channel.kind = parse_channel_kind(ch.at("kind").get<std::string>());
    c.channel.p = ch.value("p", 0.0);
    c.channel.k = ch.value("k", std::size_t{0});
  }
  c.t = j.value("t", c.t);
  c.n = j.value("n", c.n);
  c.q = j.value("q", c.q);
  c.channel.q = c.q;
  if (j.contains("code")) {
    const json& cd = j.at("code");
    if (cd.is_string()) {
      c.code.kind = parse_code_kind(cd.get<std::string>());
    } else {
      c.code.kind = parse_code_kind(cd.at("code").get<std::string>());
      c.code.a = cd.value("a", std::size_t{0});
      c.code.P = cd.value("P", std::size_t{0});
      c.code.b = cd.value("b", 0u);
    }
  }
  if (j.contains("decoder")) c.decoder = DecoderKind::parse(j.at("decoder").get<std::string>());
  if (j.contains("p_grid")) c.p_grid = j.at("p_grid").get<std::vector<double>>();
  else if (c.channel.p > 0.0 || c.channel.kind == ChannelKind::KDel) c.p_grid = {c.channel.p};
  c.trials_per_point = j.value("trials_per_point", c.trials_per_point);
  c.master_seed = j.value("master_seed", c.master_seed);
  if (j.contains("metrics")) {
    c.metrics.clear();
    for (const auto& m : j.at("metrics")) c.metrics.push_back(parse_metric(m.get<std::string>()));
  }
  c.workers = j.value("workers", c.workers);
  c.scs_cap = j.value("scs_cap", c.scs_cap);
  c.validate();
  return c;
}

std::string config_to_json(const ExperimentConfig& c) {
  json j;
  j["channel"] = {{"kind", to_string(c.channel.kind)}};
  if (c.channel.kind == ChannelKind::KDel) j["channel"]["k"] = c.channel.k;
  j["t"] = c.t;
  j["n"] = c.n;
  j["q"] = c.q;
  j["code"] = {{"code", to_string(c.code.kind)}, {"a", c.code.a}, {"P", c.code.P}, {"b", c.code.b}};
  j["decoder"] = c.decoder.str();
  j["p_grid"] = c.p_grid;
  j["trials_per_point"] = c.trials_per_point;
  j["master_seed"] = c.master_seed;
  std::vector<std::string> ms;
  for (Metric m : c.metrics) ms.push_back(to_string(m));
  j["metrics"] = ms;
  j["scs_cap"] = c.scs_cap;
  return j.dump(2);
}

std::pair<double, double> PointResult::mean_stderr(std::uint64_t sum, std::uint64_t sq, std::uint64_t trials,
                                                   double scale) {
  if (trials == 0) return {0.0, 0.0};
  const long double T = static_cast<long double>(trials);
  const long double mean = static_cast<long double>(sum) / T;
  long double var = 0.0L;
  if (trials > 1) var = (static_cast<long double>(sq) / T - mean * mean) * T / (T - 1);
  if (var < 0) var = 0;
  return {static_cast<double>(mean / scale), static_cast<double>(std::sqrt(var / T) / scale)};
}

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("INDEL_WORKERS")) {
    unsigned v = 0;
    const std::string_view s(env);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc{} && p == s.data() + s.size() && v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

ErrorCategory attribute_error(const Word& c, const Word& output, ChannelKind kind) {
  if (output == c) return ErrorCategory::None;
  const std::size_t n = c.size();
  if (kind == ChannelKind::Ins ? output.size() > n : output.size() < n) return ErrorCategory::Run;
  if (output.size() != n) return ErrorCategory::Other;
  std::size_t i = 0;
  while (i < n) {
    if (output[i] == c[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && output[j] != c[j]) ++j;
    const auto cs = c.symbols().subspan(i, j - i), os = output.symbols().subspan(i, j - i);
    if (j - i < 2 || !is_two_symbol_alternating(cs) || !is_two_symbol_alternating(os) || os[0] != cs[1] ||
        os[1] != cs[0])
      return ErrorCategory::Other;
    i = j;
  }
  return ErrorCategory::Alternating;
}

ErrorCategory attribute_error(const Word& c, const Word& y1, const Word& y2, const Word& output) {
  const bool ins = y1.size() > c.size() || y2.size() > c.size();
  return attribute_error(c, output, ins ? ChannelKind::Ins : ChannelKind::Del);
}

Word decode_single(const DecoderKind& decoder, const Word& y, std::size_t n, std::size_t k,
                   std::span<const Word> code_words) {
  switch (decoder.id) {
    case DecoderId::Lazy: return decode_lazy(y);
    case DecoderId::EN: return decode_en(y, decoder.m.value_or(n));
    case DecoderId::MLStar1Del: return ml_star_1del(y);
    case DecoderId::MLStar2Del: return ml_star_2del(y);
    case DecoderId::MLCode:
      if (code_words.empty()) throw std::invalid_argument("mlcode needs an enumerable code");
      return decode_ml_code(y, code_words);
    case DecoderId::BruteForce:
      return brute_force_ml_star(y, k, decoder.lo.value_or(y.size()), decoder.hi.value_or(n + 1)).best;
    case DecoderId::MLD2Del:
    case DecoderId::MLD2Ins: break;
  }
  throw std::invalid_argument("decoder " + decoder.str() + " needs two traces");
}

namespace {

void tally(PointResult& pr, const Word& c, const Word& out, ChannelKind kind, bool truncated) {
  const std::uint64_t n = c.size();
  const std::uint64_t d = indel_distance(out, c);
  const std::uint64_t run = out.size() > n ? out.size() - n : n - out.size();
  const std::uint64_t alt = d - run;
  ++pr.trials;
  pr.dist_sum += d;
  pr.dist_sq_sum += d * d;
  pr.run_sum += run;
  pr.run_sq_sum += run * run;
  pr.alt_sum += alt;
  pr.alt_sq_sum += alt * alt;
  if (truncated) ++pr.truncated;
  switch (attribute_error(c, out, kind)) {
    case ErrorCategory::None: return;
    case ErrorCategory::Run: ++pr.run_errors; break;
    case ErrorCategory::Alternating: ++pr.alt_errors; break;
    case ErrorCategory::Other: ++pr.other_errors; break;
  }
  ++pr.failures;
}

void merge(PointResult& into, const PointResult& from) {
  into.trials += from.trials;
  into.dist_sum += from.dist_sum;
  into.dist_sq_sum += from.dist_sq_sum;
  into.run_sum += from.run_sum;
  into.run_sq_sum += from.run_sq_sum;
  into.alt_sum += from.alt_sum;
  into.alt_sq_sum += from.alt_sq_sum;
  into.failures += from.failures;
  into.run_errors += from.run_errors;
  into.alt_errors += from.alt_errors;
  into.other_errors += from.other_errors;
  into.truncated += from.truncated;
}

}  // namespace

AggregateResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  AggregateResult res;
  res.config = cfg;
  res.workers_used = resolve_workers(cfg.workers);
  const Code code = cfg.code.build(cfg.n, cfg.q);
  std::vector<Word> code_words;
  if (cfg.decoder.id == DecoderId::MLCode) code_words = code.enumerate();

  constexpr std::uint64_t kChunk = 64;
  for (std::size_t pi = 0; pi < cfg.p_grid.size(); ++pi) {
    ChannelSpec ch = cfg.channel;
    ch.p = cfg.p_grid[pi];
    ch.q = cfg.q;
    const auto t0 = std::chrono::steady_clock::now();

    std::atomic<std::uint64_t> next{0};
    std::vector<PointResult> partial(res.workers_used);
    std::vector<std::exception_ptr> errors(res.workers_used);
    auto work = [&](unsigned w) {
      try {
        PointResult& pr = partial[w];
        for (;;) {
          const std::uint64_t begin = next.fetch_add(kChunk);
          if (begin >= cfg.trials_per_point) break;
          const std::uint64_t end = std::min(begin + kChunk, cfg.trials_per_point);
          for (std::uint64_t trial = begin; trial < end; ++trial) {
            Rng src(derive_seed(cfg.master_seed, pi, trial, 0));
            const Word c = code.sample(src);
            Rng r1(derive_seed(cfg.master_seed, pi, trial, 1));
            const Word y1 = transmit(ch, c, r1);
            Word out;
            bool truncated = false;
            if (cfg.t == 2) {
              Rng r2(derive_seed(cfg.master_seed, pi, trial, 2));
              const Word y2 = transmit(ch, c, r2);
              MldResult m = cfg.decoder.id == DecoderId::MLD2Del ? decode_mld_two_del(y1, y2, code, cfg.scs_cap)
                                                                 : decode_mld_two_ins(y1, y2, cfg.scs_cap);
              out = std::move(m.word);
              truncated = m.truncated;
            } else {
              out = decode_single(cfg.decoder, y1, cfg.n, cfg.n >= y1.size() ? cfg.n - y1.size() : 0, code_words);
            }
            tally(pr, c, out, ch.kind, truncated);
          }
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    };

    if (res.workers_used == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < res.workers_used; ++w) pool.emplace_back(work, w);
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);

    PointResult total;
    total.p = ch.p;
    for (const auto& pr : partial) merge(total, pr);
    total.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.points.push_back(total);
  }
  return res;
}

std::vector<CsvRow> to_rows(const AggregateResult& r) {
  const ExperimentConfig& c = r.config;
  std::vector<CsvRow> rows;
  const double n = static_cast<double>(c.n);
  for (const PointResult& pt : r.points) {
    for (Metric m : c.metrics) {
      CsvRow row{to_string(m), c.q, c.n, pt.p, c.t, to_string(c.code.kind), c.decoder.str(), 0, 0, pt.trials,
                 c.master_seed};
      std::pair<double, double> v;
      switch (m) {
        case Metric::LevenshteinRate: v = PointResult::mean_stderr(pt.dist_sum, pt.dist_sq_sum, pt.trials, n); break;
        case Metric::RunComponent: v = PointResult::mean_stderr(pt.run_sum, pt.run_sq_sum, pt.trials, n); break;
        case Metric::AltComponent: v = PointResult::mean_stderr(pt.alt_sum, pt.alt_sq_sum, pt.trials, n); break;
        case Metric::FailureRate: v = PointResult::mean_stderr(pt.failures, pt.failures, pt.trials, 1.0); break;
      }
      row.value = v.first;
      row.stderr_ = v.second;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

namespace {

std::string fmt(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<CsvRow>& rows) {
  os << kCsvHeader << '\n';
  for (const CsvRow& r : rows)
    os << r.metric << ',' << r.q << ',' << r.n << ',' << fmt(r.p) << ',' << r.t << ',' << r.code << ','
       << r.decoder << ',' << fmt(r.value) << ',' << fmt(r.stderr_) << ',' << r.trials << ',' << r.seed << '\n';
}

std::vector<CsvRow> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) throw std::runtime_error("read_csv: unexpected header");
  std::vector<CsvRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 11) throw std::runtime_error("read_csv: expected 11 fields in: " + line);
    CsvRow r;
    r.metric = f[0];
    r.q = static_cast<unsigned>(std::stoul(f[1]));
    r.n = std::stoull(f[2]);
    r.p = std::stod(f[3]);
    r.t = static_cast<unsigned>(std::stoul(f[4]));
    r.code = f[5];
    r.decoder = f[6];
    r.value = std::stod(f[7]);
    r.stderr_ = std::stod(f[8]);
    r.trials = std::stoull(f[9]);
    r.seed = std::stoull(f[10]);
    rows.push_back(std::move(r));
  }
  return rows;
}

Rational exact_expected_distance(const DecoderKind& decoder, std::size_t n, std::size_t k, const CodeSpec& code_spec) {
  if (k > n) throw std::domain_error("exact_expected_distance: k exceeds n");
  if (n - k > 22) throw std::domain_error("exact_expected_distance: enumeration too large");
  if (decoder.traces() != 1) throw std::invalid_argument("exact_expected_distance: single-trace decoders only");
  const Code code = code_spec.build(n, 2);
  std::vector<Word> code_words;
  BigInt code_size = BigInt(1) << n;
  if (code.kind() != CodeKind::All || decoder.id == DecoderId::MLCode) {
    code_words = code.enumerate();
    code_size = code_words.size();
  }

  BigInt num = 0;
  const std::size_t m = n - k;
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << m); ++idx) {
    const Word y = Word::from_index(idx, m, 2);
    const Word out = decode_single(decoder, y, n, k, code_words);
    std::uint64_t acc = 0;
    for (const Word& c : insertion_ball(y, k)) {
      if (code.kind() != CodeKind::All && !code.contains(c)) continue;
      acc += embedding_number(c, y).convert_to<std::uint64_t>() * indel_distance(out, c);
    }
    num += acc;
  }
  return Rational(num, code_size * n * binomial(n, k));
}

}  // namespace indel
