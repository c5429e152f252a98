// indelsim: command line front end for the indel library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "indel/checks.hpp"
#include "indel/decoders.hpp"
#include "indel/experiment.hpp"
#include "indel/figures.hpp"

namespace {

using namespace indel;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "-" or empty means stdout.
void emit_csv(const std::string& path, const std::vector<CsvRow>& rows) {
  if (path.empty() || path == "-") {
    write_csv(std::cout, rows);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_csv(out, rows);
}

struct SimulateArgs {
  std::string config, out;
  std::optional<std::uint64_t> seed, trials;
  std::optional<unsigned> workers;
};

int run_simulate(const SimulateArgs& a) {
  ExperimentConfig cfg = parse_config(slurp(a.config));
  if (a.seed) cfg.master_seed = *a.seed;
  if (a.trials) cfg.trials_per_point = *a.trials;
  if (a.workers) cfg.workers = *a.workers;
  const AggregateResult r = run_experiment(cfg);
  emit_csv(a.out, to_rows(r));
  for (const PointResult& pt : r.points) {
    std::cerr << "p=" << pt.p << " trials=" << pt.trials << " failures=" << pt.failures << " run=" << pt.run_errors
              << " alt=" << pt.alt_errors << " other=" << pt.other_errors << " wall=" << pt.wall_seconds << "s";
    if (pt.truncated) std::cerr << " truncated=" << pt.truncated;
    std::cerr << '\n';
  }
  std::cerr << "workers: " << r.workers_used << '\n';
  return 0;
}

struct FigureArgs {
  std::string figure, scale = "desk", out, plot;
  std::optional<std::uint64_t> seed, trials;
  std::optional<std::size_t> n;
  std::optional<unsigned> workers;
};

int run_figure(const FigureArgs& a) {
  const FigureId id = parse_figure_id(a.figure);
  FigureOptions opt;
  opt.scale = parse_scale(a.scale);
  if (a.seed) opt.seed = *a.seed;
  if (a.workers) opt.workers = *a.workers;
  opt.trials = a.trials;
  opt.n = a.n;
  const auto rows = reproduce_figure(id, opt);
  emit_csv(a.out, rows);
  if (!a.plot.empty()) {
    std::ofstream svg(a.plot);
    if (!svg) throw std::runtime_error("cannot write " + a.plot);
    write_svg(svg, rows, to_string(id) + " (" + a.scale + " scale)");
  }
  return 0;
}

int run_oracle_check(const std::string& what, std::size_t n) {
  using namespace indel::oracle;
  std::vector<CheckReport> reports;
  if (what == "emb") {
    reports.push_back(check_embedding(n));
    reports.push_back(check_insertion_balls(std::min<std::size_t>(n, 8), 4));
  } else if (what == "scs") {
    reports.push_back(check_scs(n));
  } else if (what == "1del") {
    reports.push_back(check_lazy_law(n));
    reports.push_back(check_en_vs_lazy(n, n >= 17));
    reports.push_back(check_vt(n));
    reports.push_back(check_tau(n));
  } else if (what == "2del") {
    if (n < 4) throw std::invalid_argument("2del needs n >= 4");
    reports.push_back(check_two_del_condition(n));
    reports.push_back(check_ml_star_window(n));
  } else {
    throw std::invalid_argument("unknown oracle check: " + what);
  }
  bool ok = true;
  for (const CheckReport& r : reports) {
    std::cout << (r.ok() ? "ok   " : "FAIL ") << r.summary() << '\n';
    ok = ok && r.ok();
  }
  return ok ? 0 : 1;
}

int run_analyze(const std::string& grid, const std::string& channel, const std::string& out) {
  emit_csv(out, analysis_rows(parse_grid(grid), parse_channel_kind(channel)));
  return 0;
}

struct DecodeArgs {
  std::string decoder;
  std::vector<std::string> traces;
  unsigned q = 2;
  std::optional<std::size_t> n;
  std::size_t k = 2;
  std::string code = "all";
  std::size_t a = 0;
  std::size_t P = 0;
  unsigned b = 0;
  bool verbose = false;
};

int run_decode(const DecodeArgs& a) {
  const DecoderKind dk = DecoderKind::parse(a.decoder);
  if (a.traces.size() != dk.traces())
    throw std::invalid_argument(dk.str() + " takes " + std::to_string(dk.traces()) + " trace(s)");
  std::vector<Word> ys;
  for (const std::string& s : a.traces) ys.push_back(Word::parse(s, a.q));

  CodeSpec cs;
  cs.kind = parse_code_kind(a.code);
  cs.a = a.a;
  cs.P = a.P;
  cs.b = a.b;

  if (dk.traces() == 2) {
    MldResult r;
    if (dk.id == DecoderId::MLD2Ins) {
      r = decode_mld_two_ins(ys[0], ys[1]);
    } else if (cs.kind == CodeKind::All) {
      r = decode_mld_two_del(ys[0], ys[1]);
    } else {
      if (!a.n) throw std::invalid_argument("--n is required with --code");
      r = decode_mld_two_del(ys[0], ys[1], cs.build(*a.n, a.q));
    }
    std::cout << r.word.str() << '\n';
    if (a.verbose)
      std::cerr << "score " << to_string(r.score) << ", candidates " << r.candidates
                << (r.truncated ? ", truncated" : "") << (r.restricted ? ", code-restricted" : "") << '\n';
    return 0;
  }

  const Word& y = ys[0];
  std::size_t k = a.k;
  if (dk.id == DecoderId::MLStar1Del || dk.id == DecoderId::MLCode) k = 1;
  const std::size_t n = a.n.value_or(y.size() + k);
  if (dk.id == DecoderId::MLStar1Del) {
    std::cout << ml_star_1del(y, &std::cerr).str() << '\n';
    return 0;
  }
  std::vector<Word> code_words;
  if (dk.id == DecoderId::MLCode) code_words = cs.build(n, a.q).enumerate();
  if (dk.id == DecoderId::BruteForce) {
    const BruteForceResult r = brute_force_ml_star(y, k, dk.lo.value_or(n >= 2 ? n - 2 : 0), dk.hi.value_or(n + 1));
    std::cout << r.best.str() << '\n';
    if (a.verbose)
      std::cerr << "score " << to_string(r.score) << ", minimizers " << r.minimizers << ", evaluated " << r.evaluated
                << '\n';
    return 0;
  }
  std::cout << decode_single(dk, y, n, k, code_words).str() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decoders, exact checks and Monte Carlo experiments for deletion and insertion channels"};
  app.require_subcommand(1);
  app.footer("Worker threads default to $INDEL_WORKERS, then to the hardware concurrency.");

  SimulateArgs sim;
  auto* s_sim = app.add_subcommand("simulate", "Run an experiment described by a JSON config");
  s_sim->add_option("--config", sim.config, "Experiment JSON")->required()->check(CLI::ExistingFile);
  s_sim->add_option("--out", sim.out, "CSV output (default stdout)");
  s_sim->add_option("--seed", sim.seed, "Override master_seed");
  s_sim->add_option("--trials", sim.trials, "Override trials_per_point");
  s_sim->add_option("--workers", sim.workers, "Worker threads");

  FigureArgs fig;
  auto* s_fig = app.add_subcommand("reproduce-figure", "Measured and closed-form curves for fig1, fig2, fig3 or fig5");
  s_fig->add_option("figure", fig.figure, "fig1 | fig2 | fig3 | fig5")->required();
  s_fig->add_option("--scale", fig.scale, "desk | paper")->check(CLI::IsMember({"desk", "paper"}));
  s_fig->add_option("--out", fig.out, "CSV output (default stdout)");
  s_fig->add_option("--plot", fig.plot, "Also write an SVG chart to this path");
  s_fig->add_option("--seed", fig.seed, "Master seed");
  s_fig->add_option("--trials", fig.trials, "Trials per grid point");
  s_fig->add_option("--n", fig.n, "Block length");
  s_fig->add_option("--workers", fig.workers, "Worker threads");

  std::string check_kind;
  std::size_t check_n = 8;
  auto* s_chk = app.add_subcommand("oracle-check", "Compare library results with brute-force oracles");
  s_chk->add_option("kind", check_kind, "1del | 2del | scs | emb")
      ->required()
      ->check(CLI::IsMember({"1del", "2del", "scs", "emb"}));
  s_chk->add_option("--n", check_n, "Size parameter")->check(CLI::Range(1, 22));

  std::string grid, channel = "del", analyze_out;
  auto* s_an = app.add_subcommand("analyze", "Closed-form approximations over a parameter grid");
  s_an->add_option("--grid", grid, "e.g. \"p=0.005:0.05:0.005;n=150,450;q=2,4\"");
  s_an->add_option("--channel", channel, "del | ins")->check(CLI::IsMember({"del", "ins"}));
  s_an->add_option("--out", analyze_out, "CSV output (default stdout)");

  DecodeArgs dec;
  auto* s_dec = app.add_subcommand("decode", "Decode one or two traces");
  s_dec->add_option("--decoder", dec.decoder, "lazy, en[:m], mlcode, mld2del, mld2ins, mlstar1, mlstar2, brute[:lo-hi]")
      ->required();
  s_dec->add_option("traces", dec.traces, "Trace words as digit strings")->required();
  s_dec->add_option("--q", dec.q, "Alphabet size")->check(CLI::Range(2, 10));
  s_dec->add_option("--n", dec.n, "Block length of the transmitted word");
  s_dec->add_option("--k", dec.k, "Deletions assumed by brute (default 2)");
  s_dec->add_option("--code", dec.code, "all | vt | svt")->check(CLI::IsMember({"all", "vt", "svt"}));
  s_dec->add_option("--a", dec.a, "Code residue");
  s_dec->add_option("--P", dec.P, "SVT modulus (0 = default)");
  s_dec->add_option("--b", dec.b, "SVT weight parity");
  s_dec->add_flag("-v,--verbose", dec.verbose, "Print scores to stderr");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*s_sim) return run_simulate(sim);
    if (*s_fig) return run_figure(fig);
    if (*s_chk) return run_oracle_check(check_kind, check_n);
    if (*s_an) return run_analyze(grid, channel, analyze_out);
    if (*s_dec) return run_decode(dec);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
