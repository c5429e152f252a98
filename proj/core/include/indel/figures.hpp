#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "indel/experiment.hpp"

namespace indel {

enum class FigureId { Fig1, Fig2, Fig3, Fig5 };
enum class Scale { Desk, Paper };

FigureId parse_figure_id(const std::string& s);
std::string to_string(FigureId f);
Scale parse_scale(const std::string& s);

struct FigureOptions {
  Scale scale = Scale::Desk;
  std::uint64_t seed = 20240101;
  unsigned workers = 0;
  std::optional<std::uint64_t> trials;  ///< overrides the scale default
  std::optional<std::size_t> n;         ///< overrides the scale default
};

/// Deletion grid 0.005..0.05 at paper scale; {0.01, 0.02, 0.03, 0.05} at
/// desk scale.
std::vector<double> figure_p_grid(Scale s);

/// The experiments behind a figure (one per alphabet or code).
std::vector<ExperimentConfig> figure_configs(FigureId id, const FigureOptions& opt);

/// Closed-form companion rows (decoder column "formula", zero stderr).
std::vector<CsvRow> formula_rows(FigureId id, const ExperimentConfig& cfg);

/// Measured rows for every config followed by the formula rows. fig3
/// additionally reports success_rate = 1 - failure_rate.
std::vector<CsvRow> figure_rows(FigureId id, const std::vector<AggregateResult>& results);

std::vector<CsvRow> reproduce_figure(FigureId id, const FigureOptions& opt);

/// Grid for the analyze command, written as ';'-separated axes, each either
/// a list "n=150,450" or a range "p=0.005:0.05:0.005" (start:stop:step,
/// inclusive). Missing axes default to p = desk grid, n = 150, q = 2.
struct AnalysisGrid {
  std::vector<double> p;
  std::vector<std::size_t> n;
  std::vector<unsigned> q;
};

/// Throws std::invalid_argument on malformed input or unknown axes.
AnalysisGrid parse_grid(const std::string& text);

/// Closed-form rows over the grid. Deletions give p_run, p_alt, p_err, the
/// uncoded failure exponent and the coded success bounds; insertions give
/// p_run, p_alt and p_err.
std::vector<CsvRow> analysis_rows(const AnalysisGrid& grid, ChannelKind channel);

/// Minimal line chart of value against p, one series per
/// (metric, q, code, decoder).
void write_svg(std::ostream& os, const std::vector<CsvRow>& rows, const std::string& title);

}  // namespace indel
