#include <doctest.h>

#include <cmath>
#include <sstream>

#include "indel/analysis.hpp"
#include "indel/experiment.hpp"
#include "indel/figures.hpp"
#include "support.hpp"

using namespace indel;
using test::W;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.channel = ChannelSpec::del(0.0);
  c.n = 40;
  c.p_grid = {0.0, 0.03};
  c.trials_per_point = 300;
  c.master_seed = 11;
  c.metrics = {Metric::LevenshteinRate, Metric::FailureRate, Metric::RunComponent, Metric::AltComponent};
  return c;
}

std::string csv_of(const AggregateResult& r) {
  std::ostringstream os;
  write_csv(os, to_rows(r));
  return os.str();
}

}  // namespace

TEST_CASE("config json round trip") {
  ExperimentConfig c = small_config();
  c.code.kind = CodeKind::Svt;
  c.code.a = 2;
  c.code.b = 1;
  const ExperimentConfig d = parse_config(config_to_json(c));
  CHECK(d.n == c.n);
  CHECK(d.p_grid == c.p_grid);
  CHECK(d.code.kind == CodeKind::Svt);
  CHECK(d.code.a == 2);
  CHECK(d.code.b == 1u);
  CHECK(d.decoder.str() == c.decoder.str());
  CHECK(d.metrics == c.metrics);
  CHECK(config_to_json(d) == config_to_json(c));

  const ExperimentConfig e = parse_config(
      R"({"channel":{"kind":"ins"},"t":2,"n":20,"q":3,"decoder":"mld2ins","p_grid":[0.1],"trials_per_point":5})");
  CHECK(e.channel.kind == ChannelKind::Ins);
  CHECK(e.q == 3u);
  CHECK_NOTHROW(e.validate());
}

TEST_CASE("config validation") {
  auto bad = [](auto&& mutate) {
    ExperimentConfig c = small_config();
    mutate(c);
    return c;
  };
  CHECK_THROWS_AS(bad([](auto& c) { c.t = 3; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](auto& c) { c.q = 11; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](auto& c) { c.p_grid = {}; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](auto& c) { c.p_grid = {1.2}; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](auto& c) { c.trials_per_point = 0; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](auto& c) { c.decoder = DecoderKind::of(DecoderId::Lazy); }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](auto& c) { c.channel = ChannelSpec::ins(0.0, 2); }).validate(), std::invalid_argument);
  CHECK_THROWS(parse_config("{not json"));
  CHECK_THROWS(parse_config(R"({"metrics":["bogus"]})"));
}

TEST_CASE("noiseless points have zero error") {
  const AggregateResult r = run_experiment(small_config());
  REQUIRE(r.points.size() == 2);
  CHECK(r.points[0].trials == 300);
  CHECK(r.points[0].dist_sum == 0);
  CHECK(r.points[0].failures == 0);
  CHECK(r.points[1].failures > 0);
  CHECK(r.points[1].failures == r.points[1].run_errors + r.points[1].alt_errors + r.points[1].other_errors);
  CHECK(r.points[1].dist_sum == r.points[1].run_sum + r.points[1].alt_sum);
}

TEST_CASE("results do not depend on the worker count") {
  ExperimentConfig c = small_config();
  c.workers = 1;
  const std::string one = csv_of(run_experiment(c));
  c.workers = 3;
  CHECK(csv_of(run_experiment(c)) == one);
  c.workers = 1;
  CHECK(csv_of(run_experiment(c)) == one);
  c.master_seed = 12;
  CHECK(csv_of(run_experiment(c)) != one);
}

TEST_CASE("csv round trip") {
  const auto rows = to_rows(run_experiment(small_config()));
  CHECK(rows.size() == 8);
  std::stringstream ss;
  write_csv(ss, rows);
  CHECK(ss.str().rfind(kCsvHeader, 0) == 0);
  const auto back = read_csv(ss);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].metric == rows[i].metric);
    CHECK(back[i].p == doctest::Approx(rows[i].p));
    CHECK(back[i].value == doctest::Approx(rows[i].value));
    CHECK(back[i].trials == rows[i].trials);
    CHECK(back[i].seed == rows[i].seed);
  }
  std::istringstream junk("metric,q\n");
  CHECK_THROWS(read_csv(junk));
}

TEST_CASE("error attribution") {
  const Word c = W("0010");
  CHECK(attribute_error(c, c, ChannelKind::Del) == ErrorCategory::None);
  CHECK(attribute_error(c, W("010"), ChannelKind::Del) == ErrorCategory::Run);
  CHECK(attribute_error(c, W("0100"), ChannelKind::Del) == ErrorCategory::Alternating);
  CHECK(attribute_error(W("0000"), W("1111"), ChannelKind::Del) == ErrorCategory::Other);
  CHECK(attribute_error(c, W("00100"), ChannelKind::Ins) == ErrorCategory::Run);

  const Word x = W("0110");
  CHECK(attribute_error(x, W("011"), W("110"), x) == ErrorCategory::None);
  CHECK(attribute_error(x, W("011"), W("110"), W("011")) == ErrorCategory::Run);
  CHECK(attribute_error(x, W("01100"), W("0110"), W("01101")) == ErrorCategory::Run);
  CHECK(to_string(ErrorCategory::Alternating) == "alternating");
}

TEST_CASE("exact expected distance") {
  for (std::size_t n = 4; n <= 12; ++n)
    CHECK(exact_expected_distance(DecoderKind::of(DecoderId::Lazy), n, 1) == Rational(1, n));
  const std::size_t n = 12;
  const Rational lazy = exact_expected_distance(DecoderKind::of(DecoderId::Lazy), n, 2);
  const Rational star = exact_expected_distance(DecoderKind::parse("mlstar2"), n, 2);
  const Rational en = exact_expected_distance(DecoderKind::parse("en:11"), n, 2);
  CHECK(star <= lazy);
  CHECK(star <= en);
  CHECK_THROWS_AS(exact_expected_distance(DecoderKind::of(DecoderId::Lazy), 30, 2), std::domain_error);
}

TEST_CASE("single-trace experiment over the exact-k channel") {
  ExperimentConfig c;
  c.t = 1;
  c.n = 100;
  c.channel = ChannelSpec::kdel(1);
  c.decoder = DecoderKind::of(DecoderId::Lazy);
  c.p_grid = {0.0};
  c.trials_per_point = 4000;
  c.master_seed = 3;
  const AggregateResult r = run_experiment(c);
  const auto [mean, se] = PointResult::mean_stderr(r.points[0].dist_sum, r.points[0].dist_sq_sum, 4000, 100.0);
  CHECK(std::abs(mean - 0.01) < 3 * se + 1e-12);
}

TEST_CASE("figure configs") {
  FigureOptions opt;
  const auto f1 = figure_configs(FigureId::Fig1, opt);
  REQUIRE(f1.size() == 2);
  CHECK(f1[0].q == 2u);
  CHECK(f1[1].q == 4u);
  CHECK(f1[0].n == 150);
  CHECK(f1[0].p_grid == figure_p_grid(Scale::Desk));
  const auto f3 = figure_configs(FigureId::Fig3, opt);
  REQUIRE(f3.size() == 3);
  CHECK(f3[1].code.kind == CodeKind::Vt);
  opt.scale = Scale::Paper;
  const auto f5 = figure_configs(FigureId::Fig5, opt);
  REQUIRE(f5.size() == 1);
  CHECK(f5[0].n == 500);
  CHECK(f5[0].channel.kind == ChannelKind::Ins);
  CHECK(f5[0].trials_per_point == 200000);
  CHECK(figure_p_grid(Scale::Paper).size() == 10);
  for (const auto& c : f5) CHECK_NOTHROW(c.validate());
  CHECK(parse_figure_id("fig2") == FigureId::Fig2);
  CHECK_THROWS(parse_figure_id("fig4"));
}

TEST_CASE("figure rows") {
  FigureOptions opt;
  opt.trials = 50;
  opt.n = 30;
  const auto rows = reproduce_figure(FigureId::Fig3, opt);
  std::size_t success = 0, bound = 0;
  for (const auto& r : rows) {
    success += r.metric == "success_rate";
    bound += r.metric == "formula_success_bound";
    if (r.decoder == "formula") CHECK(r.stderr_ == 0.0);
  }
  CHECK(success == 12);
  CHECK(bound == 12);

  std::ostringstream svg;
  write_svg(svg, rows, "fig3");
  CHECK(svg.str().find("<svg") != std::string::npos);
  CHECK(svg.str().size() > 200);
}

TEST_CASE("analysis grid") {
  const AnalysisGrid g = parse_grid("p=0.01:0.03:0.01;n=150,450;q=2,4");
  CHECK(g.p == std::vector<double>{0.01, 0.02, 0.03});
  CHECK(g.n == std::vector<std::size_t>{150, 450});
  CHECK(g.q == std::vector<unsigned>{2, 4});
  const AnalysisGrid d = parse_grid("");
  CHECK(d.p == figure_p_grid(Scale::Desk));
  CHECK(d.n == std::vector<std::size_t>{150});
  CHECK_THROWS_AS(parse_grid("x=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("p=2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("q=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("p=0.1:"), std::invalid_argument);

  const auto del = analysis_rows(parse_grid("p=0.02"), ChannelKind::Del);
  bool found = false;
  for (const auto& r : del)
    if (r.metric == "formula_p_err") {
      CHECK(r.value == doctest::Approx(2e-3));
      found = true;
    }
  CHECK(found);
  CHECK(del.size() > analysis_rows(parse_grid("p=0.02"), ChannelKind::Ins).size());
  CHECK_THROWS(analysis_rows(parse_grid("p=0.02"), ChannelKind::KDel));
}
