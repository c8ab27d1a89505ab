// fssrank: batch research-evaluation pipeline.
//
// Subcommands: validate | score | rank | compare | report. Inputs are the
// four corpus CSV files; outputs land under --out. Options can also come
// from a key=value config file (--config); command-line values win.

#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "fssrank/errors.hpp"
#include "fssrank/report.hpp"

namespace {

fssrank::DateWindow parse_window(const std::string& text) {
  const auto sep = text.find("..");
  if (sep == std::string::npos) {
    throw fssrank::ValidationError("invalid window '" + text +
                                   "', expected START..END (ISO dates)");
  }
  return {fssrank::parse_date(text.substr(0, sep)), fssrank::parse_date(text.substr(sep + 2))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"field-normalized research productivity scoring and university rankings"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  app.set_config("--config", "", "key=value configuration file; command line wins");
  app.allow_config_extras(false);

  fssrank::RunConfig config;
  std::string window_text;
  std::string census_text;
  std::string baselines_text;
  std::string credit_text;

  app.add_option("--data", config.data_dir, "directory with the corpus CSV files")
      ->capture_default_str();
  app.add_option("--taxonomy", config.taxonomy_path, "taxonomy.csv override");
  app.add_option("--roster", config.roster_path, "roster.csv override");
  app.add_option("--publications", config.publications_path, "publications.csv override");
  app.add_option("--authorships", config.authorships_path, "authorships.csv override");
  app.add_option("--window", window_text, "observation period, e.g. 2009-01-01..2013-12-31");
  app.add_option("--census-date", census_text, "date citation counts were frozen");
  app.add_option("--top-percentile", config.top_percentile,
                 "top-scientist threshold percentile")
      ->capture_default_str();
  app.add_option("--min-staff-uda", config.min_staff_uda,
                 "staff filter at discipline and overall scope")
      ->capture_default_str();
  app.add_option("--min-staff-sds", config.min_staff_sds, "staff filter at field scope")
      ->capture_default_str();
  app.add_option("--baselines", baselines_text,
                 "external citation baselines CSV; overrides corpus-derived cells");
  app.add_option("--credit-config", credit_text, "positional credit weight overrides CSV");
  app.add_option("--out", config.output_dir, "output directory")->capture_default_str();

  CLI::App* c_validate = app.add_subcommand("validate", "check the corpus and write a report");
  CLI::App* c_score = app.add_subcommand("score", "write per-professor scores.csv");
  CLI::App* c_rank = app.add_subcommand("rank", "write a university ranking list");
  CLI::App* c_compare =
      app.add_subcommand("compare", "compare the rankings by ts ratio and by productivity");
  CLI::App* c_report = app.add_subcommand("report", "write summary tables and figure datasets");

  std::string metric_text = "ts_ratio";
  std::string scope_text = "all";
  c_rank->add_option("--metric", metric_text, "ts_ratio or fss_u")->capture_default_str();
  c_rank->add_option("--scope", scope_text, "all, uda:CODE or sds:CODE")->capture_default_str();
  c_report->add_flag("--svg", config.emit_svg, "also render flat SVG scatter plots");
  c_report
      ->add_option("--shift-threshold", config.shift_flag_threshold,
                   "percentile-shift flag threshold in the percentile scatter data")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (!window_text.empty()) config.window = parse_window(window_text);
    if (!census_text.empty()) config.census_date = fssrank::parse_date(census_text);
    if (!baselines_text.empty()) config.baselines_path = baselines_text;
    if (!credit_text.empty()) config.credit_config_path = credit_text;

    if (c_validate->parsed()) {
      fssrank::cmd_validate(config);
    } else if (c_score->parsed()) {
      fssrank::cmd_score(config);
    } else if (c_rank->parsed()) {
      fssrank::cmd_rank(config, fssrank::parse_metric(metric_text),
                        fssrank::parse_scope(scope_text));
    } else if (c_compare->parsed()) {
      fssrank::cmd_compare(config);
    } else if (c_report->parsed()) {
      fssrank::cmd_report(config);
    }
  } catch (const fssrank::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return static_cast<int>(fssrank::ExitCode::validation);
  } catch (const fssrank::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return static_cast<int>(fssrank::ExitCode::io);
  } catch (const fssrank::ComputeError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return static_cast<int>(fssrank::ExitCode::compute);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return static_cast<int>(fssrank::ExitCode::compute);
  }
  return static_cast<int>(fssrank::ExitCode::ok);
}
