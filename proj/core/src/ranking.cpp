#include "fssrank/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "fssrank/errors.hpp"

namespace fssrank {

std::string_view metric_name(Metric metric) {
  return metric == Metric::ts_ratio ? "ts_ratio" : "fss_u";
}

Metric parse_metric(std::string_view text) {
  if (text == "ts_ratio") return Metric::ts_ratio;
  if (text == "fss_u") return Metric::fss_u;
  throw ValidationError("invalid metric '" + std::string(text) +
                        "', expected ts_ratio or fss_u");
}

RankingList build_ranking(Metric metric, const Scope& scope,
                          std::span<const UniversityScore> scores, int min_staff) {
  RankingList list;
  list.scope = scope;
  list.metric = metric;
  for (const UniversityScore& score : scores) {
    if (score.scope != scope) continue;
    if (score.staff_count < min_staff) continue;
    list.rows.push_back({score.university_id,
                         metric == Metric::ts_ratio ? score.ts_ratio : score.fss_u,
                         score.staff_count, 0, 0.0});
  }
  if (list.rows.size() < 2) {
    throw ComputeError("fewer than 2 universities with at least " + std::to_string(min_staff) +
                       " staff in scope " + scope.label());
  }
  std::sort(list.rows.begin(), list.rows.end(), [](const RankingRow& a, const RankingRow& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.university_id < b.university_id;
  });
  const int population = static_cast<int>(list.rows.size());
  int rank = 0;
  for (std::size_t i = 0; i < list.rows.size(); ++i) {
    if (i == 0 || list.rows[i].value != list.rows[i - 1].value) {
      rank = static_cast<int>(i) + 1;
    }
    list.rows[i].rank = rank;
    list.rows[i].percentile = percentile_rank(rank, population);
  }
  return list;
}

int quartile_of(double percentile) {
  if (percentile >= 75.0) return 1;
  if (percentile >= 50.0) return 2;
  if (percentile >= 25.0) return 3;
  return 4;
}

RankComparison compare_rankings(const RankingList& a, const RankingList& b) {
  std::map<std::string_view, const RankingRow*> b_rows;
  for (const RankingRow& row : b.rows) b_rows.emplace(row.university_id, &row);

  RankComparison comparison;
  std::size_t b_matched = 0;
  for (const RankingRow& row_a : a.rows) {
    auto it = b_rows.find(row_a.university_id);
    if (it == b_rows.end()) {
      comparison.warnings.push_back("university '" + row_a.university_id +
                                    "' present in only one ranking, dropped");
      continue;
    }
    ++b_matched;
    const RankingRow& row_b = *it->second;
    ComparisonRow row;
    row.university_id = row_a.university_id;
    row.staff = row_a.staff;
    row.value_a = row_a.value;
    row.value_b = row_b.value;
    row.rank_a = row_a.rank;
    row.rank_b = row_b.rank;
    row.rank_shift = std::abs(row_a.rank - row_b.rank);
    row.quartile_a = quartile_of(row_a.percentile);
    row.quartile_b = quartile_of(row_b.percentile);
    row.quartile_shift = std::abs(row.quartile_a - row.quartile_b);
    comparison.rows.push_back(std::move(row));
  }
  for (const RankingRow& row : b.rows) {
    if (b_matched == b.rows.size()) break;
    bool in_a = std::any_of(a.rows.begin(), a.rows.end(), [&](const RankingRow& ra) {
      return ra.university_id == row.university_id;
    });
    if (!in_a) {
      comparison.warnings.push_back("university '" + row.university_id +
                                    "' present in only one ranking, dropped");
    }
  }

  const int n = static_cast<int>(comparison.rows.size());
  if (n < 2) throw ComputeError("fewer than 2 universities shared by the two rankings");

  std::vector<std::pair<double, double>> rank_pairs;
  rank_pairs.reserve(comparison.rows.size());
  int shifting_rank = 0;
  int shifting_quartile = 0;
  double shift_sum = 0.0;
  auto& agg = comparison.aggregates;
  agg.n = n;
  for (ComparisonRow& row : comparison.rows) {
    row.percentile_shift = 100.0 * row.rank_shift / (n - 1);
    shift_sum += row.percentile_shift;
    agg.max_percentile_shift = std::max(agg.max_percentile_shift, row.percentile_shift);
    agg.max_quartile_shift = std::max(agg.max_quartile_shift, row.quartile_shift);
    if (row.rank_shift > 0) ++shifting_rank;
    if (row.quartile_shift > 0) ++shifting_quartile;
    rank_pairs.emplace_back(row.rank_a, row.rank_b);
  }
  agg.share_shifting_rank = static_cast<double>(shifting_rank) / n;
  agg.share_shifting_quartile = static_cast<double>(shifting_quartile) / n;
  agg.avg_percentile_shift = shift_sum / n;
  agg.spearman = spearman(rank_pairs);

  std::sort(comparison.rows.begin(), comparison.rows.end(),
            [](const ComparisonRow& x, const ComparisonRow& y) {
              if (x.rank_a != y.rank_a) return x.rank_a < y.rank_a;
              return x.university_id < y.university_id;
            });
  return comparison;
}

std::vector<double> competition_to_midranks(std::span<const double> ranks) {
  std::map<double, int> group_size;
  for (double r : ranks) ++group_size[r];
  std::vector<double> out;
  out.reserve(ranks.size());
  for (double r : ranks) {
    out.push_back(r + (group_size[r] - 1) / 2.0);
  }
  return out;
}

double pearson(std::span<const std::pair<double, double>> points) {
  const std::size_t n = points.size();
  if (n < 2) throw ComputeError("correlation undefined for fewer than 2 points");
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& [x, y] : points) {
    mean_x += x;
    mean_y += y;
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (const auto& [x, y] : points) {
    const double dx = x - mean_x;
    const double dy = y - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw ComputeError("correlation undefined for a constant coordinate");
  }
  return sxy / std::sqrt(sxx * syy);
}

double spearman(std::span<const std::pair<double, double>> rank_pairs) {
  const std::size_t n = rank_pairs.size();
  if (n < 2) throw ComputeError("correlation undefined for fewer than 2 pairs");
  std::vector<double> a;
  std::vector<double> b;
  a.reserve(n);
  b.reserve(n);
  for (const auto& [x, y] : rank_pairs) {
    a.push_back(x);
    b.push_back(y);
  }
  const std::vector<double> ma = competition_to_midranks(a);
  const std::vector<double> mb = competition_to_midranks(b);
  std::vector<std::pair<double, double>> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) points.emplace_back(ma[i], mb[i]);
  return pearson(points);
}

double quantile_sorted(std::span<const double> sorted_values, double p) {
  if (sorted_values.empty()) throw ComputeError("quantile of an empty sample");
  if (sorted_values.size() == 1) return sorted_values[0];
  const double h = p * static_cast<double>(sorted_values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, sorted_values.size() - 1);
  const double frac = h - std::floor(h);
  return sorted_values[lo] + frac * (sorted_values[hi] - sorted_values[lo]);
}

std::vector<std::string> flag_outliers(std::span<const std::pair<std::string, double>> values,
                                       double k) {
  if (values.size() < 4) {
    throw ComputeError("outlier fence needs at least 4 values, got " +
                       std::to_string(values.size()));
  }
  std::vector<double> sorted;
  sorted.reserve(values.size());
  for (const auto& [id, v] : values) sorted.push_back(v);
  std::sort(sorted.begin(), sorted.end());
  const double q1 = quantile_sorted(sorted, 0.25);
  const double q3 = quantile_sorted(sorted, 0.75);
  const double iqr = q3 - q1;
  const double lo = q1 - k * iqr;
  const double hi = q3 + k * iqr;
  std::vector<std::string> flagged;
  for (const auto& [id, v] : values) {
    if (v > hi || v < lo) flagged.push_back(id);
  }
  std::sort(flagged.begin(), flagged.end());
  return flagged;
}

std::vector<double> consecutive_gaps(std::span<const RankingRow> rows) {
  std::vector<double> gaps;
  if (rows.size() < 2) return gaps;
  gaps.reserve(rows.size() - 1);
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    gaps.push_back(rows[i].value - rows[i + 1].value);
  }
  return gaps;
}

}  // namespace fssrank
