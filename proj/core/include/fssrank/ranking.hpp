#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fssrank/scoring.hpp"

namespace fssrank {

enum class Metric { ts_ratio, fss_u };

std::string_view metric_name(Metric metric);
Metric parse_metric(std::string_view text);

struct RankingRow {
  std::string university_id;
  double value = 0.0;
  int staff = 0;
  int rank = 0;
  double percentile = 0.0;
};

struct RankingList {
  Scope scope;
  Metric metric = Metric::ts_ratio;
  std::vector<RankingRow> rows;  // descending by value, ties by university id
};

/// Ranking of universities by one metric at one scope. Universities with
/// fewer than `min_staff` staff in scope are excluded; fewer than 2
/// qualifying universities is an error (percentiles undefined).
RankingList build_ranking(Metric metric, const Scope& scope,
                          std::span<const UniversityScore> scores, int min_staff);

/// Quartile of a percentile: Q1 for p >= 75, Q2 for 50 <= p < 75,
/// Q3 for 25 <= p < 50, Q4 below.
int quartile_of(double percentile);

struct ComparisonRow {
  std::string university_id;
  int staff = 0;
  double value_a = 0.0;
  double value_b = 0.0;
  int rank_a = 0;
  int rank_b = 0;
  int rank_shift = 0;          // |rank_a - rank_b|
  double percentile_shift = 0.0;  // 100 * rank_shift / (n - 1)
  int quartile_a = 0;
  int quartile_b = 0;
  int quartile_shift = 0;
};

struct ComparisonAggregates {
  int n = 0;
  double share_shifting_rank = 0.0;      // fraction with rank_shift > 0
  double avg_percentile_shift = 0.0;
  double max_percentile_shift = 0.0;
  double share_shifting_quartile = 0.0;  // fraction with quartile_shift > 0
  int max_quartile_shift = 0;
  double spearman = 0.0;
};

struct RankComparison {
  std::vector<ComparisonRow> rows;  // ordered by rank_a, then university id
  ComparisonAggregates aggregates;
  std::vector<std::string> warnings;
};

/// Pairs the two lists by university (intersection, with a warning when the
/// sets differ) and derives the shift metrics and aggregates. Requires at
/// least 2 shared universities.
RankComparison compare_rankings(const RankingList& a, const RankingList& b);

/// Competition ranks to mid-ranks: a tied group at rank r of size k becomes
/// r + (k-1)/2.
std::vector<double> competition_to_midranks(std::span<const double> ranks);

/// Tie-corrected rank correlation: mid-rank conversion of both vectors
/// followed by the product-moment correlation. Throws ComputeError on
/// fewer than 2 pairs or a constant vector.
double spearman(std::span<const std::pair<double, double>> rank_pairs);

/// Product-moment correlation. Throws ComputeError on fewer than 2 points
/// or a constant coordinate.
double pearson(std::span<const std::pair<double, double>> points);

/// Quantile with linear interpolation at position (n-1)*p; input must be
/// sorted ascending.
double quantile_sorted(std::span<const double> sorted_values, double p);

/// Tukey fence outliers: values above Q3 + k*IQR or below Q1 - k*IQR,
/// quartiles by linear interpolation. Requires at least 4 values. Returns
/// sorted ids.
std::vector<std::string> flag_outliers(std::span<const std::pair<std::string, double>> values,
                                       double k = 1.5);

/// Differences between consecutive positions of a ranking list:
/// gaps[i] = rows[i].value - rows[i+1].value.
std::vector<double> consecutive_gaps(std::span<const RankingRow> rows);

}  // namespace fssrank
