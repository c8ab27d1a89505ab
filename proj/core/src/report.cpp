#include "fssrank/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>

#include "fssrank/csv.hpp"
#include "fssrank/errors.hpp"
#include "json.hpp"

namespace fssrank {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

// ratios are printed as percentages with 1 decimal
std::string fmt_percent(double fraction) { return fmt(100.0 * fraction, 1); }

std::string fmt_metric(Metric metric, double value) {
  return metric == Metric::ts_ratio ? fmt_percent(value) : fmt(value, 3);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path.string());
  out << text;
  if (!out) throw IoError("write failed: " + path.string());
}

void write_json(const std::filesystem::path& path, const ordered_json& doc) {
  write_text(path, doc.dump(2) + "\n");
}

std::string sanitize_for_filename(std::string code) {
  for (char& c : code) {
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  }
  return code;
}

ordered_json issues_json(const std::vector<ValidationIssue>& issues) {
  ordered_json arr = ordered_json::array();
  for (const ValidationIssue& issue : issues) {
    arr.push_back({{"code", issue.code}, {"subject", issue.subject}, {"message", issue.message}});
  }
  return arr;
}

ordered_json aggregates_json(const Scope& scope, const ComparisonAggregates& agg) {
  return ordered_json{{"scope", scope.label()},
                      {"n", agg.n},
                      {"share_shifting_rank", agg.share_shifting_rank},
                      {"avg_percentile_shift", agg.avg_percentile_shift},
                      {"max_percentile_shift", agg.max_percentile_shift},
                      {"share_shifting_quartile", agg.share_shifting_quartile},
                      {"max_quartile_shift", agg.max_quartile_shift},
                      {"spearman", agg.spearman}};
}

void write_comparison_csv(const std::filesystem::path& path, const RankComparison& comparison) {
  std::vector<std::vector<std::string>> rows;
  for (const ComparisonRow& row : comparison.rows) {
    rows.push_back({row.university_id, std::to_string(row.staff), fmt_percent(row.value_a),
                    std::to_string(row.rank_a), fmt(row.value_b, 3), std::to_string(row.rank_b),
                    std::to_string(row.rank_shift), fmt(row.percentile_shift, 1),
                    std::to_string(row.quartile_shift)});
  }
  csv::write_file(path,
                  {"university_id", "staff", "ts_ratio", "rank_ts", "fss_u", "rank_fss",
                   "rank_shift", "percentile_shift", "quartile_shift"},
                  rows);
}

// Minimal flat scatter plot; circles for regular points, triangles for
// flagged ones, optional dashed median lines.
struct SvgPoint {
  double x = 0.0;
  double y = 0.0;
  bool flagged = false;
};

std::string render_scatter_svg(const std::string& title, const std::string& x_label,
                               const std::string& y_label, const std::vector<SvgPoint>& points,
                               std::optional<double> median_x = std::nullopt,
                               std::optional<double> median_y = std::nullopt) {
  const double width = 720.0, height = 480.0, margin = 56.0;
  double min_x = points.empty() ? 0.0 : points.front().x;
  double max_x = min_x, min_y = points.empty() ? 0.0 : points.front().y, max_y = min_y;
  for (const SvgPoint& p : points) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  if (max_x == min_x) max_x = min_x + 1.0;
  if (max_y == min_y) max_y = min_y + 1.0;
  auto sx = [&](double x) {
    return margin + (x - min_x) / (max_x - min_x) * (width - 2 * margin);
  };
  auto sy = [&](double y) {
    return height - margin - (y - min_y) / (max_y - min_y) * (height - 2 * margin);
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width, 0) + "\" height=\"" +
         fmt(height, 0) + "\" viewBox=\"0 0 " + fmt(width, 0) + " " + fmt(height, 0) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + fmt(width / 2, 0) + "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"15\">" + title + "</text>\n";
  svg += "<line x1=\"" + fmt(margin, 0) + "\" y1=\"" + fmt(height - margin, 0) + "\" x2=\"" +
         fmt(width - margin, 0) + "\" y2=\"" + fmt(height - margin, 0) +
         "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + fmt(margin, 0) + "\" y1=\"" + fmt(margin, 0) + "\" x2=\"" +
         fmt(margin, 0) + "\" y2=\"" + fmt(height - margin, 0) + "\" stroke=\"black\"/>\n";
  svg += "<text x=\"" + fmt(width / 2, 0) + "\" y=\"" + fmt(height - 12, 0) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" + x_label +
         "</text>\n";
  svg += "<text x=\"16\" y=\"" + fmt(height / 2, 0) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
         "transform=\"rotate(-90 16 " + fmt(height / 2, 0) + ")\">" + y_label + "</text>\n";
  for (const double* axis : {&min_x, &max_x}) {
    svg += "<text x=\"" + fmt(sx(*axis), 1) + "\" y=\"" + fmt(height - margin + 16, 0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" +
           fmt(*axis, 1) + "</text>\n";
  }
  for (const double* axis : {&min_y, &max_y}) {
    svg += "<text x=\"" + fmt(margin - 6, 0) + "\" y=\"" + fmt(sy(*axis) + 3, 1) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" +
           fmt(*axis, 1) + "</text>\n";
  }
  if (median_x) {
    svg += "<line x1=\"" + fmt(sx(*median_x), 1) + "\" y1=\"" + fmt(margin, 0) + "\" x2=\"" +
           fmt(sx(*median_x), 1) + "\" y2=\"" + fmt(height - margin, 0) +
           "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  }
  if (median_y) {
    svg += "<line x1=\"" + fmt(margin, 0) + "\" y1=\"" + fmt(sy(*median_y), 1) + "\" x2=\"" +
           fmt(width - margin, 0) + "\" y2=\"" + fmt(sy(*median_y), 1) +
           "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  }
  for (const SvgPoint& p : points) {
    const double x = sx(p.x);
    const double y = sy(p.y);
    if (p.flagged) {
      svg += "<path d=\"M " + fmt(x, 1) + " " + fmt(y - 4.5, 1) + " L " + fmt(x - 4.0, 1) + " " +
             fmt(y + 3.5, 1) + " L " + fmt(x + 4.0, 1) + " " + fmt(y + 3.5, 1) +
             " Z\" fill=\"none\" stroke=\"black\"/>\n";
    } else {
      svg += "<circle cx=\"" + fmt(x, 1) + "\" cy=\"" + fmt(y, 1) +
             "\" r=\"3\" fill=\"black\" fill-opacity=\"0.55\"/>\n";
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace

std::filesystem::path RunConfig::taxonomy() const {
  return taxonomy_path.empty() ? data_dir / "taxonomy.csv" : taxonomy_path;
}
std::filesystem::path RunConfig::roster() const {
  return roster_path.empty() ? data_dir / "roster.csv" : roster_path;
}
std::filesystem::path RunConfig::publications() const {
  return publications_path.empty() ? data_dir / "publications.csv" : publications_path;
}
std::filesystem::path RunConfig::authorships() const {
  return authorships_path.empty() ? data_dir / "authorships.csv" : authorships_path;
}

void RunConfig::validate() const {
  if (!(day_number(window.start) < day_number(window.end))) {
    throw ValidationError("window start must precede window end");
  }
  if (day_number(census_date) < day_number(window.end)) {
    throw ValidationError("census date must not precede the window end");
  }
  if (!(top_percentile > 0.0 && top_percentile < 100.0)) {
    throw ValidationError("top percentile must lie strictly between 0 and 100");
  }
  if (min_staff_uda < 0 || min_staff_sds < 0) {
    throw ValidationError("staff filters must be non-negative");
  }
  if (!(outlier_fence_k > 0.0)) {
    throw ValidationError("outlier fence multiplier must be positive");
  }
  if (shift_flag_threshold < 0.0) {
    throw ValidationError("shift flag threshold must be non-negative");
  }
}

PipelineData run_pipeline(const RunConfig& config) {
  config.validate();
  PipelineData data;
  data.corpus = load_corpus(
      {config.taxonomy(), config.roster(), config.publications(), config.authorships()});

  data.baselines = CitationBaseline::from_corpus(data.corpus.publications);
  if (config.baselines_path) {
    data.baselines = data.baselines.overridden_by(CitationBaseline::from_csv(*config.baselines_path));
  }

  if (config.credit_config_path) {
    data.weights = CreditWeights::from_csv(*config.credit_config_path);
  }
  data.weights.validate();

  data.scores = compute_scores(data.corpus, data.baselines,
                               {config.window, config.top_percentile, data.weights});
  return data;
}

void cmd_validate(const RunConfig& config) {
  config.validate();
  std::filesystem::create_directories(config.output_dir);
  const auto report_path = config.output_dir / "validation.json";

  Corpus corpus;
  try {
    corpus = load_corpus(
        {config.taxonomy(), config.roster(), config.publications(), config.authorships()});
  } catch (const std::exception& e) {
    ordered_json doc{{"counts", nullptr}, {"warnings", ordered_json::array()},
                     {"errors", ordered_json::array({e.what()})}};
    write_json(report_path, doc);
    throw;
  }

  ValidationReport report = validate_corpus(corpus);
  const int last_year = static_cast<int>(config.window.end.year());
  for (const Publication& pub : corpus.publications) {
    if (pub.year > last_year) {
      report.warnings.push_back({"publication_after_window", pub.id,
                                 "publication '" + pub.id + "' is dated " +
                                     std::to_string(pub.year) + ", after the window end"});
    }
  }
  for (const Professor& professor : corpus.roster) {
    try {
      years_active(professor, config.window);
    } catch (const ComputeError&) {
      report.warnings.push_back({"professor_outside_window", professor.id,
                                 "professor '" + professor.id +
                                     "' has no employment inside the window"});
    }
  }
  std::sort(report.warnings.begin(), report.warnings.end(),
            [](const ValidationIssue& a, const ValidationIssue& b) {
              return std::tie(a.code, a.subject) < std::tie(b.code, b.subject);
            });

  ordered_json doc{{"counts",
                    {{"universities", report.university_count},
                     {"professors", report.professor_count},
                     {"publications", report.publication_count},
                     {"populated_sds", report.populated_sds_count}}},
                   {"warnings", issues_json(report.warnings)},
                   {"errors", ordered_json::array()}};
  write_json(report_path, doc);
}

void cmd_score(const RunConfig& config) {
  const PipelineData data = run_pipeline(config);
  std::filesystem::create_directories(config.output_dir);

  std::vector<std::vector<std::string>> rows;
  rows.reserve(data.scores.cards().size());
  for (const ScoreCard& card : data.scores.cards()) {
    rows.push_back({card.professor_id, card.university_id, card.sds_code, fmt(card.fss, 6),
                    std::to_string(card.rank), std::to_string(card.population),
                    fmt(card.percentile, 1), card.is_top ? "true" : "false"});
  }
  csv::write_file(config.output_dir / "scores.csv",
                  {"professor_id", "university_id", "sds_code", "fss", "rank", "population",
                   "percentile", "is_top"},
                  rows);
}

void cmd_rank(const RunConfig& config, Metric metric, const Scope& scope) {
  const PipelineData data = run_pipeline(config);
  std::filesystem::create_directories(config.output_dir);

  const int min_staff =
      scope.level == Scope::Level::sds ? config.min_staff_sds : config.min_staff_uda;
  const auto scores =
      university_scores(scope, data.scores, data.corpus, config.min_staff_uda);
  const RankingList list = build_ranking(metric, scope, scores, min_staff);

  const int population = static_cast<int>(list.rows.size());
  std::vector<std::vector<std::string>> rows;
  for (const RankingRow& row : list.rows) {
    rows.push_back({std::string(metric_name(metric)), scope.label(), row.university_id,
                    std::to_string(row.staff), fmt_metric(metric, row.value),
                    std::to_string(row.rank), std::to_string(population),
                    fmt(row.percentile, 1)});
  }
  csv::write_file(config.output_dir / "rankings.csv",
                  {"metric", "scope", "university_id", "staff", "value", "rank", "population",
                   "percentile"},
                  rows);
}

namespace {

RankComparison compare_at(const Scope& scope, const PipelineData& data, const RunConfig& config) {
  const auto scores = university_scores(scope, data.scores, data.corpus, config.min_staff_uda);
  const int min_staff =
      scope.level == Scope::Level::sds ? config.min_staff_sds : config.min_staff_uda;
  const RankingList by_ts = build_ranking(Metric::ts_ratio, scope, scores, min_staff);
  const RankingList by_fss = build_ranking(Metric::fss_u, scope, scores, min_staff);
  return compare_rankings(by_ts, by_fss);
}

}  // namespace

void cmd_compare(const RunConfig& config) {
  const PipelineData data = run_pipeline(config);
  std::filesystem::create_directories(config.output_dir);

  ordered_json summary{{"scopes", ordered_json::array()},
                       {"warnings", ordered_json::array()}};

  const RankComparison overall = compare_at(Scope::all(), data, config);
  write_comparison_csv(config.output_dir / "comparison.csv", overall);
  summary["scopes"].push_back(aggregates_json(Scope::all(), overall.aggregates));
  for (const std::string& warning : overall.warnings) summary["warnings"].push_back(warning);

  for (const UdaEntry& uda : data.corpus.taxonomy.uda_entries()) {
    const Scope scope = Scope::uda(uda.code);
    try {
      const RankComparison comparison = compare_at(scope, data, config);
      write_comparison_csv(
          config.output_dir / ("comparison_uda_" + sanitize_for_filename(uda.code) + ".csv"),
          comparison);
      summary["scopes"].push_back(aggregates_json(scope, comparison.aggregates));
      for (const std::string& warning : comparison.warnings) {
        summary["warnings"].push_back(warning);
      }
    } catch (const ComputeError& e) {
      summary["warnings"].push_back("scope " + scope.label() + " skipped: " + e.what());
    }
  }
  write_json(config.output_dir / "summary.json", summary);
}

void cmd_report(const RunConfig& config) {
  const PipelineData data = run_pipeline(config);
  std::filesystem::create_directories(config.output_dir);
  const ScoreTable& scores = data.scores;
  const Corpus& corpus = data.corpus;

  // --- discipline-level dataset summary ---
  struct UdaTally {
    std::set<std::string> qualifying;  // universities meeting the staff filter
    std::map<std::string, int> staff_per_university;
    int faculty = 0;
    int top = 0;
  };
  std::map<std::string, UdaTally> tallies;
  for (const ScoreCard& card : scores.cards()) {
    const std::string& uda = corpus.taxonomy.sds_at(card.sds_code).uda_code;
    UdaTally& tally = tallies[uda];
    ++tally.faculty;
    ++tally.staff_per_university[card.university_id];
    if (card.is_top) ++tally.top;
  }
  std::set<std::string> all_qualifying;
  int total_faculty = 0;
  int total_top = 0;
  std::vector<std::vector<std::string>> summary_rows;
  for (auto& [uda_code, tally] : tallies) {
    for (const auto& [university, staff] : tally.staff_per_university) {
      if (staff >= config.min_staff_uda) tally.qualifying.insert(university);
    }
    all_qualifying.insert(tally.qualifying.begin(), tally.qualifying.end());
    total_faculty += tally.faculty;
    total_top += tally.top;
    const UdaEntry* uda = corpus.taxonomy.find_uda(uda_code);
    summary_rows.push_back({uda_code, uda ? uda->name : "",
                            std::to_string(tally.qualifying.size()),
                            std::to_string(tally.faculty), std::to_string(tally.top)});
  }
  summary_rows.push_back({"TOTAL", "All disciplines", std::to_string(all_qualifying.size()),
                          std::to_string(total_faculty), std::to_string(total_top)});
  csv::write_file(config.output_dir / "dataset_summary.csv",
                  {"uda_code", "uda_name", "universities", "faculty", "top_scientists"},
                  summary_rows);

  // --- figure datasets at the whole-system scope ---
  const auto uni_scores =
      university_scores(Scope::all(), scores, corpus, config.min_staff_uda);
  const RankingList by_ts =
      build_ranking(Metric::ts_ratio, Scope::all(), uni_scores, config.min_staff_uda);
  const RankingList by_fss =
      build_ranking(Metric::fss_u, Scope::all(), uni_scores, config.min_staff_uda);

  std::vector<std::pair<std::string, double>> ratio_values;
  for (const RankingRow& row : by_ts.rows) ratio_values.emplace_back(row.university_id, row.value);
  std::vector<std::string> outliers;
  try {
    outliers = flag_outliers(ratio_values, config.outlier_fence_k);
  } catch (const ComputeError&) {
    // fewer than 4 universities: no flags
  }
  auto is_outlier = [&outliers](const std::string& id) {
    return std::binary_search(outliers.begin(), outliers.end(), id);
  };

  std::vector<std::vector<std::string>> fig1_rows;
  std::vector<SvgPoint> fig1_points;
  for (std::size_t i = 0; i < by_ts.rows.size(); ++i) {
    const RankingRow& row = by_ts.rows[i];
    fig1_rows.push_back({std::to_string(i + 1), std::to_string(row.rank), row.university_id,
                         fmt_percent(row.value), is_outlier(row.university_id) ? "true" : "false"});
    fig1_points.push_back(
        {static_cast<double>(i + 1), 100.0 * row.value, is_outlier(row.university_id)});
  }
  csv::write_file(config.output_dir / "figure1.csv",
                  {"position", "rank", "university_id", "ts_ratio", "outlier"}, fig1_rows);

  std::vector<std::vector<std::string>> fig2_rows;
  std::vector<SvgPoint> fig2_points;
  std::vector<std::pair<double, double>> staff_ratio;
  std::vector<double> staff_values;
  for (const RankingRow& row : by_ts.rows) {
    fig2_rows.push_back({row.university_id, std::to_string(row.staff), fmt_percent(row.value),
                         is_outlier(row.university_id) ? "true" : "false"});
    fig2_points.push_back(
        {static_cast<double>(row.staff), 100.0 * row.value, is_outlier(row.university_id)});
    staff_ratio.emplace_back(static_cast<double>(row.staff), row.value);
    staff_values.push_back(static_cast<double>(row.staff));
  }
  csv::write_file(config.output_dir / "figure2.csv",
                  {"university_id", "staff", "ts_ratio", "outlier"}, fig2_rows);

  const RankComparison comparison = compare_rankings(by_ts, by_fss);
  std::map<std::string_view, const RankingRow*> fss_rows;
  for (const RankingRow& row : by_fss.rows) fss_rows.emplace(row.university_id, &row);
  std::map<std::string_view, const RankingRow*> ts_rows;
  for (const RankingRow& row : by_ts.rows) ts_rows.emplace(row.university_id, &row);
  std::vector<std::vector<std::string>> fig3_rows;
  std::vector<SvgPoint> fig3_points;
  std::vector<double> pct_ts;
  std::vector<double> pct_fss;
  std::vector<std::string> shift_flagged;
  for (const ComparisonRow& row : comparison.rows) {
    const bool flagged = row.percentile_shift >= config.shift_flag_threshold;
    const RankingRow* ts_row = ts_rows.at(row.university_id);
    const RankingRow* fss_row = fss_rows.at(row.university_id);
    fig3_rows.push_back({row.university_id, fmt(fss_row->percentile, 1),
                         fmt(ts_row->percentile, 1), flagged ? "true" : "false"});
    fig3_points.push_back({fss_row->percentile, ts_row->percentile, flagged});
    pct_ts.push_back(ts_row->percentile);
    pct_fss.push_back(fss_row->percentile);
    if (flagged) shift_flagged.push_back(row.university_id);
  }
  csv::write_file(config.output_dir / "figure3.csv",
                  {"university_id", "percentile_fss_u", "percentile_ts_ratio", "flagged"},
                  fig3_rows);

  // figure metadata
  const std::vector<double> gaps = consecutive_gaps(by_ts.rows);
  ordered_json top_gaps = ordered_json::array();
  {
    std::vector<std::size_t> order(gaps.size());
    for (std::size_t i = 0; i < gaps.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&gaps](std::size_t a, std::size_t b) { return gaps[a] > gaps[b]; });
    for (std::size_t i = 0; i < std::min<std::size_t>(3, order.size()); ++i) {
      top_gaps.push_back({{"after_position", order[i] + 1},
                          {"gap_percentage_points", 100.0 * gaps[order[i]]}});
    }
  }
  double mean_tail_gap = 0.0;
  if (gaps.size() > 5) {
    double sum = 0.0;
    for (std::size_t i = 5; i < gaps.size(); ++i) sum += gaps[i];
    mean_tail_gap = 100.0 * sum / static_cast<double>(gaps.size() - 5);
  }

  ordered_json figures;
  figures["figure1"] = {{"metric", "ts_ratio"},
                        {"universities", by_ts.rows.size()},
                        {"outliers", outliers},
                        {"top_gaps", top_gaps},
                        {"mean_gap_percentage_points_after_position_5", mean_tail_gap}};
  ordered_json fig2_meta{{"outlier_method", "tukey"},
                         {"fence_k", config.outlier_fence_k},
                         {"outliers", outliers}};
  try {
    fig2_meta["pearson_staff_vs_ts_ratio"] = pearson(staff_ratio);
  } catch (const ComputeError&) {
    fig2_meta["pearson_staff_vs_ts_ratio"] = nullptr;
  }
  std::sort(staff_values.begin(), staff_values.end());
  fig2_meta["median_staff"] = quantile_sorted(staff_values, 0.5);
  fig2_meta["max_staff"] = staff_values.empty() ? 0.0 : staff_values.back();
  figures["figure2"] = fig2_meta;

  std::sort(pct_ts.begin(), pct_ts.end());
  std::sort(pct_fss.begin(), pct_fss.end());
  figures["figure3"] = {{"median_percentile_fss_u", quantile_sorted(pct_fss, 0.5)},
                        {"median_percentile_ts_ratio", quantile_sorted(pct_ts, 0.5)},
                        {"shift_flag_threshold", config.shift_flag_threshold},
                        {"flagged", shift_flagged}};
  write_json(config.output_dir / "figures.json", figures);

  if (config.emit_svg) {
    write_text(config.output_dir / "figure1.svg",
               render_scatter_svg("Top-scientist ratio by ranking position", "position",
                                  "ts ratio (%)", fig1_points));
    write_text(config.output_dir / "figure2.svg",
               render_scatter_svg("Top-scientist ratio by faculty size", "staff",
                                  "ts ratio (%)", fig2_points));
    const double median_fss = quantile_sorted(pct_fss, 0.5);
    const double median_ts = quantile_sorted(pct_ts, 0.5);
    write_text(config.output_dir / "figure3.svg",
               render_scatter_svg("Percentile by productivity vs percentile by ts ratio",
                                  "percentile (fss_u)", "percentile (ts ratio)", fig3_points,
                                  median_fss, median_ts));
  }
}

}  // namespace fssrank
