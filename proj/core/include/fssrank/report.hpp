#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "fssrank/corpus.hpp"
#include "fssrank/impact.hpp"
#include "fssrank/ranking.hpp"
#include "fssrank/scoring.hpp"

namespace fssrank {

/// Run parameters shared by every subcommand. Paths left empty resolve to
/// the conventional file names under `data_dir`.
struct RunConfig {
  std::filesystem::path data_dir = ".";
  std::filesystem::path taxonomy_path;
  std::filesystem::path roster_path;
  std::filesystem::path publications_path;
  std::filesystem::path authorships_path;

  DateWindow window{make_date(2009, 1, 1), make_date(2013, 12, 31)};
  CalDate census_date = make_date(2015, 5, 31);
  double top_percentile = 90.0;
  int min_staff_uda = 10;
  int min_staff_sds = 3;
  std::optional<std::filesystem::path> baselines_path;
  std::optional<std::filesystem::path> credit_config_path;
  std::filesystem::path output_dir = "out";

  double shift_flag_threshold = 25.0;  // percentile-shift flag in figure 3 data
  double outlier_fence_k = 1.5;
  bool emit_svg = false;

  std::filesystem::path taxonomy() const;
  std::filesystem::path roster() const;
  std::filesystem::path publications() const;
  std::filesystem::path authorships() const;

  /// window start < end, census date >= window end, 0 < top percentile < 100.
  void validate() const;
};

struct PipelineData {
  Corpus corpus;
  CitationBaseline baselines;
  CreditWeights weights;
  ScoreTable scores;
};

/// Load + baseline + scoring stages; every subcommand past `validate`
/// starts here.
PipelineData run_pipeline(const RunConfig& config);

// Subcommand bodies. Each writes its outputs under config.output_dir and
// throws (IoError / ValidationError / ComputeError) on failure; the CLI
// maps exceptions to exit codes.
void cmd_validate(const RunConfig& config);
void cmd_score(const RunConfig& config);
void cmd_rank(const RunConfig& config, Metric metric, const Scope& scope);
void cmd_compare(const RunConfig& config);
void cmd_report(const RunConfig& config);

}  // namespace fssrank
