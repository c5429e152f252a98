#include "indel/figures.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "indel/analysis.hpp"

namespace indel {

FigureId parse_figure_id(const std::string& s) {
  if (s == "fig1") return FigureId::Fig1;
  if (s == "fig2") return FigureId::Fig2;
  if (s == "fig3") return FigureId::Fig3;
  if (s == "fig5") return FigureId::Fig5;
  throw std::invalid_argument("unknown figure: " + s);
}

std::string to_string(FigureId f) {
  switch (f) {
    case FigureId::Fig1: return "fig1";
    case FigureId::Fig2: return "fig2";
    case FigureId::Fig3: return "fig3";
    case FigureId::Fig5: return "fig5";
  }
  return "?";
}

Scale parse_scale(const std::string& s) {
  if (s == "desk") return Scale::Desk;
  if (s == "paper") return Scale::Paper;
  throw std::invalid_argument("unknown scale: " + s);
}

std::vector<double> figure_p_grid(Scale s) {
  if (s == Scale::Desk) return {0.01, 0.02, 0.03, 0.05};
  std::vector<double> g;
  for (int i = 1; i <= 10; ++i) g.push_back(0.005 * i);
  return g;
}

std::vector<ExperimentConfig> figure_configs(FigureId id, const FigureOptions& opt) {
  ExperimentConfig base;
  base.t = 2;
  base.p_grid = figure_p_grid(opt.scale);
  base.trials_per_point = opt.trials.value_or(opt.scale == Scale::Desk ? 20000 : 200000);
  base.master_seed = opt.seed;
  base.workers = opt.workers;
  const bool ins = id == FigureId::Fig5;
  base.n = opt.n.value_or(opt.scale == Scale::Desk ? 150 : (ins ? 500 : 450));
  base.channel = ins ? ChannelSpec::ins(0.0, 2) : ChannelSpec::del(0.0);
  base.decoder = DecoderKind::of(ins ? DecoderId::MLD2Ins : DecoderId::MLD2Del);

  std::vector<ExperimentConfig> out;
  switch (id) {
    case FigureId::Fig1:
    case FigureId::Fig2:
      base.metrics = id == FigureId::Fig1 ? std::vector<Metric>{Metric::LevenshteinRate}
                                          : std::vector<Metric>{Metric::RunComponent, Metric::AltComponent};
      for (unsigned q : {2u, 4u}) {
        ExperimentConfig c = base;
        c.q = q;
        c.channel.q = q;
        out.push_back(c);
      }
      break;
    case FigureId::Fig3:
      base.metrics = {Metric::FailureRate};
      for (CodeKind k : {CodeKind::All, CodeKind::Vt, CodeKind::Svt}) {
        ExperimentConfig c = base;
        c.code.kind = k;
        out.push_back(c);
      }
      break;
    case FigureId::Fig5:
      base.metrics = {Metric::LevenshteinRate};
      out.push_back(base);
      break;
  }
  return out;
}

std::vector<CsvRow> formula_rows(FigureId id, const ExperimentConfig& cfg) {
  std::vector<CsvRow> rows;
  auto add = [&](const std::string& metric, double p, double v) {
    rows.push_back(CsvRow{metric, cfg.q, cfg.n, p, cfg.t, to_string(cfg.code.kind), "formula", v, 0.0, 0, 0});
  };
  for (double p : cfg.p_grid) {
    switch (id) {
      case FigureId::Fig1: add("formula_p_err", p, two_del_formulas(cfg.q, p, cfg.n).p_err_approx); break;
      case FigureId::Fig2: {
        const auto f = two_del_formulas(cfg.q, p, cfg.n);
        add("formula_p_run", p, f.p_run);
        add("formula_p_alt", p, f.p_alt);
        break;
      }
      case FigureId::Fig3:
        add("formula_success_bound", p, coded_success_bound(cfg.q, p, cfg.n, cfg.code.kind));
        if (cfg.code.kind == CodeKind::All) add("formula_fail_exp", p, two_del_formulas(cfg.q, p, cfg.n).p_fail_bound);
        break;
      case FigureId::Fig5: add("formula_p_err", p, two_ins_formulas(cfg.q, p, cfg.n).p_err_approx); break;
    }
  }
  return rows;
}

std::vector<CsvRow> figure_rows(FigureId id, const std::vector<AggregateResult>& results) {
  std::vector<CsvRow> rows;
  for (const AggregateResult& r : results) {
    for (CsvRow& row : to_rows(r)) {
      if (id == FigureId::Fig3 && row.metric == "failure_rate") {
        CsvRow s = row;
        s.metric = "success_rate";
        s.value = 1.0 - row.value;
        rows.push_back(row);
        rows.push_back(std::move(s));
      } else {
        rows.push_back(std::move(row));
      }
    }
  }
  for (const AggregateResult& r : results)
    for (CsvRow& row : formula_rows(id, r.config)) rows.push_back(std::move(row));
  return rows;
}

std::vector<CsvRow> reproduce_figure(FigureId id, const FigureOptions& opt) {
  std::vector<AggregateResult> results;
  for (const ExperimentConfig& c : figure_configs(id, opt)) results.push_back(run_experiment(c));
  return figure_rows(id, results);
}

namespace {

template <class T>
T parse_number(std::string_view s, const std::string& whole) {
  T v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw std::invalid_argument("bad grid value in: " + whole);
  return v;
}

template <class T>
std::vector<T> parse_axis(std::string_view body, const std::string& whole) {
  std::vector<T> out;
  if (body.find(':') != std::string_view::npos) {
    std::vector<double> parts;
    std::size_t start = 0;
    while (true) {
      const auto colon = body.find(':', start);
      parts.push_back(parse_number<double>(body.substr(start, colon - start), whole));
      if (colon == std::string_view::npos) break;
      start = colon + 1;
    }
    if (parts.size() != 3 || parts[2] <= 0 || parts[1] < parts[0])
      throw std::invalid_argument("range must be start:stop:step with step > 0: " + whole);
    const auto steps = static_cast<long>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9));
    for (long i = 0; i <= steps; ++i) {
      const double v = std::round((parts[0] + static_cast<double>(i) * parts[2]) * 1e12) / 1e12;
      out.push_back(static_cast<T>(v));
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= body.size()) {
    const auto comma = body.find(',', start);
    out.push_back(parse_number<T>(body.substr(start, comma - start), whole));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

AnalysisGrid parse_grid(const std::string& text) {
  AnalysisGrid g;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto semi = rest.find(';');
    const std::string_view item = rest.substr(0, semi);
    rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("grid axis needs '=': " + text);
    const std::string_view key = item.substr(0, eq), body = item.substr(eq + 1);
    if (key == "p") g.p = parse_axis<double>(body, text);
    else if (key == "n") g.n = parse_axis<std::size_t>(body, text);
    else if (key == "q") g.q = parse_axis<unsigned>(body, text);
    else throw std::invalid_argument("unknown grid axis '" + std::string(key) + "'");
  }
  if (g.p.empty()) g.p = figure_p_grid(Scale::Desk);
  if (g.n.empty()) g.n = {150};
  if (g.q.empty()) g.q = {2};
  for (double p : g.p)
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("grid p outside [0, 1]");
  for (unsigned q : g.q)
    if (q < 2 || q > kMaxAlphabet) throw std::invalid_argument("grid q outside [2, 10]");
  return g;
}

std::vector<CsvRow> analysis_rows(const AnalysisGrid& grid, ChannelKind channel) {
  if (channel == ChannelKind::KDel) throw std::invalid_argument("analyze covers the del and ins channels");
  const bool del = channel == ChannelKind::Del;
  std::vector<CsvRow> rows;
  for (unsigned q : grid.q)
    for (std::size_t n : grid.n)
      for (double p : grid.p) {
        const TwoChannelFormulas f = del ? two_del_formulas(q, p, n) : two_ins_formulas(q, p, n);
        auto add = [&](const char* metric, CodeKind code, double v) {
          rows.push_back(CsvRow{metric, q, n, p, 2, to_string(code), "formula", v, 0.0, 0, 0});
        };
        add("formula_p_run", CodeKind::All, f.p_run);
        add("formula_p_alt", CodeKind::All, f.p_alt);
        add("formula_p_err", CodeKind::All, f.p_err_approx);
        if (!del) continue;
        add("formula_fail_exp", CodeKind::All, f.p_fail_bound);
        for (CodeKind k : {CodeKind::All, CodeKind::Vt, CodeKind::Svt})
          add("formula_success_bound", k, coded_success_bound(q, p, n, k));
      }
  return rows;
}

void write_svg(std::ostream& os, const std::vector<CsvRow>& rows, const std::string& title) {
  using Key = std::tuple<std::string, unsigned, std::string, std::string>;
  std::map<Key, std::vector<std::pair<double, double>>> series;
  double xmax = 0, ymax = 0;
  for (const CsvRow& r : rows) {
    if (r.metric == "failure_rate") continue;
    series[{r.metric, r.q, r.code, r.decoder}].emplace_back(r.p, r.value);
    xmax = std::max(xmax, r.p);
    ymax = std::max(ymax, r.value);
  }
  if (xmax <= 0) xmax = 1;
  if (ymax <= 0) ymax = 1;
  const double W = 720, H = 480, L = 70, R = 220, T = 40, B = 50;
  auto px = [&](double x) { return L + x / xmax * (W - L - R); };
  auto py = [&](double y) { return H - B - y / ymax * (H - T - B); };
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << L << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\">" << title << "</text>\n";
  os << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = xmax * i / 4, yv = ymax * i / 4;
    os << "<text x=\"" << px(xv) << "\" y=\"" << H - B + 18 << "\" font-size=\"11\" text-anchor=\"middle\">" << xv
       << "</text>\n";
    os << "<text x=\"" << L - 6 << "\" y=\"" << py(yv) + 4 << "\" font-size=\"11\" text-anchor=\"end\">" << yv
       << "</text>\n";
  }
  os << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 12 << "\" font-size=\"12\" text-anchor=\"middle\">p</text>\n";

  std::size_t idx = 0;
  for (auto& [key, pts] : series) {
    std::sort(pts.begin(), pts.end());
    const char* color = palette[idx % 8];
    const bool dashed = std::get<3>(key) == "formula";
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\""
       << (dashed ? " stroke-dasharray=\"5,3\"" : "") << " points=\"";
    for (auto [x, y] : pts) os << px(x) << ',' << py(y) << ' ';
    os << "\"/>\n";
    const double ly = T + 16.0 * static_cast<double>(idx);
    os << "<text x=\"" << W - R + 10 << "\" y=\"" << ly + 4 << "\" font-size=\"11\" fill=\"" << color << "\">"
       << std::get<0>(key) << " q=" << std::get<1>(key) << ' ' << std::get<2>(key) << "</text>\n";
    ++idx;
  }
  os << "</svg>\n";
}

}  // namespace indel
