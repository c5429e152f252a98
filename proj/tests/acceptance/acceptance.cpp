// Acceptance run: one PASS/FAIL line per criterion. Exit status is 0 only if
// every selected criterion passes. Pass criterion numbers to run a subset.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "indel/analysis.hpp"
#include "indel/checks.hpp"
#include "indel/experiment.hpp"
#include "indel/figures.hpp"

using namespace indel;

namespace {

constexpr std::uint64_t kSeed = 20240101;
constexpr std::uint64_t kTrials = 20000;
constexpr std::size_t kN = 150;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Stat {
  double mean, se;
};

Stat stat(std::uint64_t sum, std::uint64_t sq, std::uint64_t trials, double scale) {
  const auto [m, s] = PointResult::mean_stderr(sum, sq, trials, scale);
  return {m, s};
}

ExperimentConfig del_config(unsigned q) {
  ExperimentConfig c;
  c.channel = ChannelSpec::del(0.0);
  c.q = q;
  c.n = kN;
  c.p_grid = figure_p_grid(Scale::Desk);
  c.trials_per_point = kTrials;
  c.master_seed = kSeed;
  c.workers = 1;
  c.metrics = {Metric::LevenshteinRate, Metric::RunComponent, Metric::AltComponent};
  return c;
}

// the two-deletion runs are shared by criteria 1 and 2
const AggregateResult& del_run(unsigned q) {
  static std::vector<std::pair<unsigned, AggregateResult>> cache;
  for (const auto& [k, r] : cache)
    if (k == q) return r;
  cache.emplace_back(q, run_experiment(del_config(q)));
  return cache.back().second;
}

std::string fmt(const char* f, double a, double b, double c) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// ratio of measured to formula in [lo, hi]
void band(Outcome& o, const std::string& label, double p, double measured, double formula, double lo, double hi) {
  const double ratio = measured / formula;
  const bool ok = ratio >= lo && ratio <= hi;
  if (!ok) o.pass = false;
  o.detail += "\n    " + label + fmt(" p=%.3f measured=%.3e ratio=%.3f", p, measured, ratio) + (ok ? "" : "  <-- out of band");
}

Outcome crit_fig1() {
  Outcome o;
  for (unsigned q : {2u, 4u}) {
    const AggregateResult& r = del_run(q);
    for (const PointResult& pt : r.points) {
      const Stat s = stat(pt.dist_sum, pt.dist_sq_sum, pt.trials, double(kN));
      band(o, "q=" + std::to_string(q), pt.p, s.mean, two_del_formulas(q, pt.p, kN).p_err_approx, 0.4, 1.1);
    }
  }
  return o;
}

Outcome crit_fig2() {
  Outcome o;
  for (unsigned q : {2u, 4u}) {
    const AggregateResult& r = del_run(q);
    for (const PointResult& pt : r.points) {
      const auto f = two_del_formulas(q, pt.p, kN);
      const Stat run = stat(pt.run_sum, pt.run_sq_sum, pt.trials, double(kN));
      const Stat alt = stat(pt.alt_sum, pt.alt_sq_sum, pt.trials, double(kN));
      band(o, "q=" + std::to_string(q) + " run", pt.p, run.mean, f.p_run, 0.4, 1.1);
      band(o, "q=" + std::to_string(q) + " alt", pt.p, alt.mean, f.p_alt, 0.4, 1.1);
    }
  }
  return o;
}

Outcome crit_fig5() {
  Outcome o;
  ExperimentConfig c = del_config(2);
  c.channel = ChannelSpec::ins(0.0, 2);
  c.decoder = DecoderKind::of(DecoderId::MLD2Ins);
  c.metrics = {Metric::LevenshteinRate};
  const AggregateResult r = run_experiment(c);
  for (const PointResult& pt : r.points) {
    const Stat s = stat(pt.dist_sum, pt.dist_sq_sum, pt.trials, double(kN));
    band(o, "q=2 ins", pt.p, s.mean, two_ins_formulas(2, pt.p, kN).p_err_approx, 0.4, 1.1);
  }
  return o;
}

Outcome crit_fig3() {
  Outcome o;
  std::vector<AggregateResult> res;
  for (CodeKind k : {CodeKind::All, CodeKind::Vt, CodeKind::Svt}) {
    ExperimentConfig c = del_config(2);
    c.code.kind = k;
    c.metrics = {Metric::FailureRate};
    res.push_back(run_experiment(c));
  }
  const double eps = 0.05;
  for (std::size_t i = 0; i < res[0].points.size(); ++i) {
    auto succ = [&](std::size_t code) {
      const PointResult& pt = res[code].points[i];
      const Stat f = stat(pt.failures, pt.failures, pt.trials, 1.0);
      return Stat{1.0 - f.mean, f.se};
    };
    const Stat all = succ(0), vt = succ(1), svt = succ(2);
    const double p = res[0].points[i].p;
    const bool vt_svt = vt.mean + 3 * std::hypot(vt.se, svt.se) >= svt.mean;
    const bool svt_all = svt.mean + 3 * std::hypot(svt.se, all.se) >= all.mean;
    const double bound = std::exp(-5 * p * p * double(kN)) * (1 - eps);
    const bool lower = all.mean >= bound;
    if (!(vt_svt && svt_all && lower)) o.pass = false;
    o.detail += fmt("\n    p=%.3f success vt=%.4f svt=%.4f", p, vt.mean, svt.mean) +
                fmt(" all=%.4f bound=%.4f", all.mean, bound, 0.0) + (vt_svt && svt_all && lower ? "" : "  <-- violated");
  }
  return o;
}

void absorb(Outcome& o, const oracle::CheckReport& r) {
  if (!r.ok()) {
    o.pass = false;
    o.detail += "\n    " + r.summary();
  }
}

Outcome crit_lazy_law() {
  Outcome o;
  for (std::size_t n = 5; n <= 20; ++n) absorb(o, oracle::check_lazy_law(n));
  return o;
}

Outcome crit_en_vs_lazy() {
  Outcome o;
  for (std::size_t n : {17u, 18u}) {
    const auto r = oracle::check_en_vs_lazy(n, true);
    absorb(o, r);
    o.detail += "\n    " + r.note;
  }
  return o;
}

Outcome crit_two_del_condition() {
  Outcome o;
  std::uint64_t total = 0;
  for (std::size_t n = 8; n <= 14; ++n) {
    const auto r = oracle::check_two_del_condition(n);
    total += r.violations;
    absorb(o, r);
  }
  o.detail += "\n    total violations " + std::to_string(total);
  return o;
}

Outcome crit_ml_star_window() {
  Outcome o;
  std::uint64_t total = 0;
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto r = oracle::check_ml_star_window(n);
    total += r.violations;
    absorb(o, r);
  }
  o.detail += "\n    total violations " + std::to_string(total);
  return o;
}

Outcome crit_combinatorics() {
  Outcome o;
  absorb(o, oracle::check_embedding(10));
  absorb(o, oracle::check_insertion_balls(8, 4));
  absorb(o, oracle::check_scs(8));
  return o;
}

Outcome crit_vt() {
  Outcome o;
  for (std::size_t n = 1; n <= 12; ++n) absorb(o, oracle::check_vt(n));
  for (std::size_t n = 2; n <= 24; ++n) absorb(o, oracle::check_tau(n));
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;  // 0: none stated
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  const std::vector<Criterion> all{
      {1, "two-deletion Levenshtein rate vs (3q-1)/(q-1) p^2, q in {2,4}", 600, crit_fig1},
      {2, "run and alternating components vs (q+1)/(q-1) p^2 and 2p^2", 600, crit_fig2},
      {3, "two-insertion Levenshtein rate vs 5/2 p^2, q = 2", 600, crit_fig5},
      {4, "coded success VT >= SVT >= uncoded, uncoded >= exp(-5p^2 n)(1-eps)", 0, crit_fig3},
      {5, "lazy decoder expected distance is exactly 1/n, n = 5..20", 60, crit_lazy_law},
      {6, "EN^n expected distance exceeds 1/n at n = 17, 18", 300, crit_en_vs_lazy},
      {7, "two-deletion ML* polynomial matches the exact sign, n = 8..14", 300, crit_two_del_condition},
      {8, "brute-force ML* window gives length n-2 or n-1, n <= 12", 0, crit_ml_star_window},
      {9, "Emb, ball sizes and SCS enumeration against brute force", 0, crit_combinatorics},
      {10, "VT single-deletion decoding n <= 12, tau <= 2 log2 n", 0, crit_vt},
  };

  int failed = 0;
  for (const Criterion& c : all) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("\n    exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      o.pass = false;
      o.detail += fmt("\n    runtime %.1fs over budget %.0fs", secs, c.budget_seconds, 0.0);
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %d: %s (%.1fs)%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
