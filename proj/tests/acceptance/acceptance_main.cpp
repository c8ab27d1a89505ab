// Acceptance suite: one pass/fail line per criterion, non-zero exit when
// any fails. Reference datasets live under tests/fixtures/; the bundled
// sample corpus under data/sample/ drives the end-to-end checks.
//
//   acceptance [--fixtures DIR] [--data DIR] [--cli PATH] [--workdir DIR]

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fssrank/corpus.hpp"
#include "fssrank/credit.hpp"
#include "fssrank/csv.hpp"
#include "fssrank/errors.hpp"
#include "fssrank/impact.hpp"
#include "fssrank/ranking.hpp"
#include "fssrank/scoring.hpp"

#ifndef FSSRANK_FIXTURES_DIR
#define FSSRANK_FIXTURES_DIR "tests/fixtures"
#endif
#ifndef FSSRANK_DATA_DIR
#define FSSRANK_DATA_DIR "data/sample"
#endif
#ifndef FSSRANK_CLI_PATH
#define FSSRANK_CLI_PATH "fssrank"
#endif

namespace fs = std::filesystem;
using namespace fssrank;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail = "") {
  std::printf("%s %2d  %s%s%s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++g_failures;
}

bool close(double got, double want, double tol) { return std::fabs(got - want) <= tol; }

double round1(double x) { return std::round(x * 10.0) / 10.0; }

// ---------------------------------------------------------------- fixtures

struct FixtureRow {
  std::string university_id;
  int staff = 0;
  double ts_ratio = 0.0;  // percent, as printed
  int rank_ts = 0;
  double fss_u = 0.0;
  int rank_fss = 0;
  double expected_percentile_shift = 0.0;
  int expected_quartile_shift = 0;
};

struct Fixture {
  std::vector<FixtureRow> rows;
  RankingList by_ts;
  RankingList by_fss;
};

Fixture load_fixture(const fs::path& path) {
  const csv::Table table = csv::read_file(path);
  auto col = [&table](const char* name) { return table.require_column(name); };
  const std::size_t c_uni = col("university_id");
  const std::size_t c_staff = col("staff");
  const std::size_t c_ratio = col("ts_ratio");
  const std::size_t c_rank_ts = col("rank_ts");
  const std::size_t c_fss = col("fss_u");
  const std::size_t c_rank_fss = col("rank_fss");
  const std::size_t c_ps = col("expected_percentile_shift");
  const std::size_t c_qs = col("expected_quartile_shift");

  Fixture fixture;
  for (const auto& row : table.rows) {
    FixtureRow r;
    r.university_id = row[c_uni];
    r.staff = std::atoi(row[c_staff].c_str());
    r.ts_ratio = std::atof(row[c_ratio].c_str());
    r.rank_ts = std::atoi(row[c_rank_ts].c_str());
    r.fss_u = std::atof(row[c_fss].c_str());
    r.rank_fss = std::atoi(row[c_rank_fss].c_str());
    r.expected_percentile_shift = std::atof(row[c_ps].c_str());
    r.expected_quartile_shift = std::atoi(row[c_qs].c_str());
    fixture.rows.push_back(std::move(r));
  }

  const int n = static_cast<int>(fixture.rows.size());
  fixture.by_ts.metric = Metric::ts_ratio;
  fixture.by_fss.metric = Metric::fss_u;
  for (const FixtureRow& r : fixture.rows) {
    fixture.by_ts.rows.push_back(
        {r.university_id, r.ts_ratio, r.staff, r.rank_ts, percentile_rank(r.rank_ts, n)});
    fixture.by_fss.rows.push_back(
        {r.university_id, r.fss_u, r.staff, r.rank_fss, percentile_rank(r.rank_fss, n)});
  }
  std::sort(fixture.by_fss.rows.begin(), fixture.by_fss.rows.end(),
            [](const RankingRow& a, const RankingRow& b) { return a.rank < b.rank; });
  return fixture;
}

// ----------------------------------------------------- criteria 1 through 8

void check_percentile_formula() {
  const struct {
    int rank, population;
    double expected;
  } cases[] = {{3, 50, 95.9}, {6, 43, 88.1},  {36, 53, 32.7},
               {16, 36, 57.1}, {3, 49, 95.8}, {5, 64, 93.7}};
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  for (const auto& c : cases) {
    const double got = round1(percentile_rank(c.rank, c.population));
    if (got != c.expected) {
      pass = false;
      detail = "(" + std::to_string(c.rank) + "," + std::to_string(c.population) + ") -> " +
               std::to_string(got);
    }
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  const double ms = std::chrono::duration<double, std::milli>(elapsed).count();
  if (ms >= 1.0) {
    pass = false;
    detail += " too slow: " + std::to_string(ms) + " ms";
  }
  report(1, "percentile formula reproduces the reference values in under 1 ms", pass, detail);
}

void check_quartile_shifts(const Fixture& uda7) {
  const RankComparison cmp = compare_rankings(uda7.by_ts, uda7.by_fss);
  bool pass = cmp.aggregates.n == static_cast<int>(uda7.rows.size());
  std::string detail;
  for (const FixtureRow& expected : uda7.rows) {
    const auto it =
        std::find_if(cmp.rows.begin(), cmp.rows.end(), [&](const ComparisonRow& row) {
          return row.university_id == expected.university_id;
        });
    if (it == cmp.rows.end() || it->quartile_shift != expected.expected_quartile_shift) {
      pass = false;
      detail = expected.university_id;
      break;
    }
  }
  report(2, "quartile shifts match the discipline-level reference list row for row", pass,
         detail);
}

void check_percentile_shifts(const Fixture& uda7, const Fixture& national) {
  bool pass = true;
  std::string detail;
  const RankComparison cmp7 = compare_rankings(uda7.by_ts, uda7.by_fss);
  for (const FixtureRow& expected : uda7.rows) {
    const auto it = std::find_if(cmp7.rows.begin(), cmp7.rows.end(),
                                 [&](const ComparisonRow& row) {
                                   return row.university_id == expected.university_id;
                                 });
    if (it == cmp7.rows.end() ||
        round1(it->percentile_shift) != expected.expected_percentile_shift) {
      pass = false;
      detail = "uda case " + expected.university_id;
      break;
    }
  }
  const RankComparison cmp_all = compare_rankings(national.by_ts, national.by_fss);
  for (const FixtureRow& expected : national.rows) {
    const auto it = std::find_if(cmp_all.rows.begin(), cmp_all.rows.end(),
                                 [&](const ComparisonRow& row) {
                                   return row.university_id == expected.university_id;
                                 });
    if (it == cmp_all.rows.end() ||
        !close(it->percentile_shift, expected.expected_percentile_shift, 0.15)) {
      pass = false;
      detail = "national case " + expected.university_id;
      break;
    }
  }
  report(3, "percentile shifts exact at discipline level, within 0.15 nationally", pass, detail);
}

void check_spearman(const Fixture& uda7, const Fixture& national) {
  std::vector<std::pair<double, double>> pairs7;
  for (const FixtureRow& r : uda7.rows) pairs7.emplace_back(r.rank_ts, r.rank_fss);
  std::vector<std::pair<double, double>> pairs_all;
  for (const FixtureRow& r : national.rows) pairs_all.emplace_back(r.rank_ts, r.rank_fss);
  const double rho7 = spearman(pairs7);
  const double rho_all = spearman(pairs_all);
  const bool pass = close(rho7, 0.861, 0.02) && close(rho_all, 0.924, 0.02);
  report(4, "tie-corrected spearman hits 0.861 and 0.924 within 0.02", pass,
         "got " + std::to_string(rho7) + " and " + std::to_string(rho_all));
}

void check_pearson(const Fixture& national) {
  std::vector<std::pair<double, double>> points;
  for (const FixtureRow& r : national.rows) {
    points.emplace_back(static_cast<double>(r.staff), r.ts_ratio);
  }
  const double all = pearson(points);

  // drop the top 4 universities by ts ratio and the largest by staff
  std::vector<FixtureRow> rows = national.rows;
  std::sort(rows.begin(), rows.end(),
            [](const FixtureRow& a, const FixtureRow& b) { return a.ts_ratio > b.ts_ratio; });
  std::vector<std::string> dropped;
  for (int i = 0; i < 4; ++i) dropped.push_back(rows[i].university_id);
  dropped.push_back(
      std::max_element(rows.begin(), rows.end(), [](const FixtureRow& a, const FixtureRow& b) {
        return a.staff < b.staff;
      })->university_id);
  std::vector<std::pair<double, double>> filtered;
  for (const FixtureRow& r : national.rows) {
    if (std::find(dropped.begin(), dropped.end(), r.university_id) == dropped.end()) {
      filtered.emplace_back(static_cast<double>(r.staff), r.ts_ratio);
    }
  }
  const double trimmed = pearson(filtered);
  const bool pass = close(all, -0.129, 0.01) && close(trimmed, 0.226, 0.01);
  report(5, "pearson of staff vs ts ratio is -0.129, 0.226 after trimming (within 0.01)", pass,
         "got " + std::to_string(all) + " and " + std::to_string(trimmed));
}

void check_aggregates(const Fixture& uda7, const Fixture& national) {
  struct Expected {
    int n;
    int share_rank;  // percent, rounded
    double avg_shift;
    double max_shift;
    int share_quartile;  // percent, rounded
    int max_quartile;
    double rho;
  };
  const auto check_one = [](const Fixture& fixture, const Expected& expected,
                            std::string& detail) {
    const ComparisonAggregates agg =
        compare_rankings(fixture.by_ts, fixture.by_fss).aggregates;
    bool ok = true;
    auto fail = [&](const std::string& what) {
      ok = false;
      if (detail.empty()) detail = what;
    };
    if (agg.n != expected.n) fail("n");
    if (std::lround(100.0 * agg.share_shifting_rank) != expected.share_rank) fail("share rank");
    if (!close(agg.avg_percentile_shift, expected.avg_shift, 0.15)) fail("avg shift");
    if (!close(agg.max_percentile_shift, expected.max_shift, 0.15)) fail("max shift");
    if (std::lround(100.0 * agg.share_shifting_quartile) != expected.share_quartile) {
      fail("share quartile");
    }
    if (agg.max_quartile_shift != expected.max_quartile) fail("max quartile");
    if (!close(agg.spearman, expected.rho, 0.02)) fail("spearman");
    return ok;
  };
  std::string detail;
  const bool pass_uda = check_one(uda7, {29, 97, 13.2, 35.7, 45, 2, 0.861}, detail);
  const bool pass_all = check_one(national, {64, 86, 7.8, 42.8, 22, 2, 0.924}, detail);
  report(6, "aggregate shift statistics reproduce both reference rows", pass_uda && pass_all,
         detail);
}

void check_outlier_fence(const Fixture& national) {
  std::vector<std::pair<std::string, double>> values;
  for (const FixtureRow& r : national.rows) values.emplace_back(r.university_id, r.ts_ratio);
  const auto flagged = flag_outliers(values, 1.5);
  const std::vector<std::string> expected{"UNIV_6", "UNIV_64", "UNIV_7", "UNIV_8"};
  std::string got;
  for (const auto& id : flagged) got += id + " ";
  report(7, "tukey fence flags exactly the four extreme universities", flagged == expected,
         "got " + got);
}

void check_gap_statistics(const Fixture& national) {
  const std::vector<double> gaps = consecutive_gaps(national.by_ts.rows);
  bool pass = gaps.size() == national.rows.size() - 1;
  std::string detail;
  if (pass) {
    double tail_sum = 0.0;
    for (std::size_t i = 5; i < gaps.size(); ++i) tail_sum += gaps[i];
    const double tail_mean = tail_sum / static_cast<double>(gaps.size() - 5);
    const double first_gap = gaps[0];
    const double fourth_gap = gaps[3];
    pass = close(tail_mean, 0.2, 0.05) && first_gap >= 12.4 - 0.15 &&
           first_gap <= 12.5 + 0.15 && close(fourth_gap, 8.5, 0.15);
    detail = "tail mean " + std::to_string(tail_mean) + ", gaps " + std::to_string(first_gap) +
             " and " + std::to_string(fourth_gap);
  }
  report(8, "ranking-position gap statistics match the reference dataset", pass, detail);
}

// -------------------------------------------------------------- criterion 9

void check_credit_properties() {
  std::mt19937 rng(20160413);
  bool pass = true;
  std::string detail;
  for (int trial = 0; trial < 10000 && pass; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 50);
    const bool positional = rng() % 2 == 0;
    const bool intra = rng() % 2 == 0;
    std::vector<double> weights;
    if (positional) {
      weights = positional_weights(n, intra);
    } else {
      weights.assign(static_cast<std::size_t>(n), equal_fraction(n));
    }
    double sum = 0.0;
    for (double w : weights) {
      if (w < 0.0) {
        pass = false;
        detail = "negative weight";
      }
      sum += w;
    }
    if (std::fabs(sum - 1.0) > 1e-9) {
      pass = false;
      detail = "sum " + std::to_string(sum) + " at n=" + std::to_string(n);
    }
  }
  const std::vector<double> five = positional_weights(5, false);
  const std::vector<double> expected{0.30, 0.15, 0.10, 0.15, 0.30};
  if (five != expected) {
    pass = false;
    detail = "five-author extra-mural vector off";
  }
  report(9, "credit vectors: 10000 random cases sum to 1, flagship vector exact", pass, detail);
}

// ------------------------------------------------------------- criterion 10

struct SyntheticCorpus {
  Corpus corpus;
};

SyntheticCorpus build_synthetic_corpus() {
  FieldTaxonomy taxonomy;
  taxonomy.add_uda({"D1", "Discipline one"});
  taxonomy.add_uda({"D2", "Discipline two"});
  taxonomy.add_sds({"F/EQ", "Equal field", "D1", CreditSchemeKind::equal});
  taxonomy.add_sds({"F/PS", "Positional field", "D1", CreditSchemeKind::positional});
  taxonomy.add_sds({"F/PX", "Second positional field", "D2", CreditSchemeKind::positional});

  std::mt19937 rng(97);
  const char* sds_codes[] = {"F/EQ", "F/PS", "F/PX"};
  std::vector<Professor> roster;
  for (int i = 0; i < 30; ++i) {
    Professor p;
    p.id = "P" + std::to_string(100 + i);
    p.university_id = "U" + std::to_string(1 + static_cast<int>(rng() % 4));
    p.sds_code = sds_codes[i % 3];
    p.start_date = make_date(2000 + static_cast<int>(rng() % 12),
                             1 + static_cast<unsigned>(rng() % 12), 1);
    if (rng() % 8 == 0) p.end_date = make_date(2012, 6, 30);
    roster.push_back(std::move(p));
  }

  const char* categories[] = {"Alpha", "Beta", "Gamma"};
  std::vector<Publication> pubs;
  for (int i = 0; i < 100; ++i) {
    Publication pub;
    pub.id = "W" + std::to_string(1000 + i);
    pub.year = 2009 + static_cast<int>(rng() % 5);
    pub.citations = rng() % 4 == 0 ? 0 : static_cast<std::int64_t>(rng() % 50);
    pub.categories.push_back(categories[rng() % 3]);
    if (rng() % 3 == 0) {
      std::string extra = categories[rng() % 3];
      if (extra != pub.categories[0]) pub.categories.push_back(extra);
    }
    const int n_authors = 1 + static_cast<int>(rng() % 6);
    const int internal = static_cast<int>(rng() % roster.size());
    for (int a = 0; a < n_authors; ++a) {
      AuthorSlot slot;
      slot.position = a + 1;
      if (a == 0 || rng() % 3 == 0) {
        const Professor& p = roster[(internal + a * 7) % roster.size()];
        slot.professor_id = p.id;
        slot.university_id = p.university_id;
      } else if (rng() % 2 == 0) {
        slot.university_id = "EXT" + std::to_string(rng() % 5);
      }
      slot.resolved_university = slot.university_id;
      pub.authors.push_back(std::move(slot));
    }
    pubs.push_back(std::move(pub));
  }
  return {make_corpus(std::move(taxonomy), std::move(roster), std::move(pubs))};
}

// Direct re-implementation of the formulas with plain nested loops. Shares
// nothing with the library path except the corpus data structures.
namespace oracle {

double years(const Professor& p, int y0, int m0, int d0, int y1, int m1, int d1) {
  const auto start = std::chrono::sys_days(make_date(y0, m0, d0));
  const auto stop = std::chrono::sys_days(make_date(y1, m1, d1));
  auto lo = std::chrono::sys_days(p.start_date);
  if (lo < start) lo = start;
  auto hi = stop;
  if (p.end_date && std::chrono::sys_days(*p.end_date) < hi) {
    hi = std::chrono::sys_days(*p.end_date);
  }
  const double days = static_cast<double>((hi - lo).count()) + 1.0;
  return std::round(days / 365.25 * 100.0) / 100.0;
}

double cell_mean(const Corpus& corpus, int year, const std::string& category) {
  double sum = 0.0;
  int count = 0;
  for (const Publication& pub : corpus.publications) {
    if (pub.year != year || pub.citations <= 0) continue;
    for (const std::string& cat : pub.categories) {
      if (cat == category) {
        sum += static_cast<double>(pub.citations);
        ++count;
      }
    }
  }
  return count > 0 ? sum / count : 0.0;
}

double fraction(const Corpus& corpus, const Publication& pub, const Professor& prof) {
  const int n = static_cast<int>(pub.authors.size());
  const bool equal_scheme =
      corpus.taxonomy.find_sds(prof.sds_code)->credit_scheme == CreditSchemeKind::equal;
  if (equal_scheme) return 1.0 / n;

  const std::string& first_uni = pub.authors.front().resolved_university;
  const std::string& last_uni = pub.authors.back().resolved_university;
  const bool intra = !first_uni.empty() && first_uni == last_uni;
  std::vector<double> w(static_cast<std::size_t>(n), 0.0);
  std::vector<int> role(static_cast<std::size_t>(n), 0);
  double pool = intra ? 0.20 : 0.10;
  auto assign = [&](int index, double weight) {
    if (index >= 0 && index < n && role[static_cast<std::size_t>(index)] == 0) {
      w[static_cast<std::size_t>(index)] = weight;
      role[static_cast<std::size_t>(index)] = 1;
    }
  };
  if (intra) {
    assign(0, 0.40);
    assign(n - 1, 0.40);
  } else {
    assign(0, 0.30);
    assign(n - 1, 0.30);
    assign(1, 0.15);
    assign(n - 2, 0.15);
  }
  int middle = 0;
  for (int i = 0; i < n; ++i) middle += role[static_cast<std::size_t>(i)] == 0;
  if (middle > 0) {
    for (int i = 0; i < n; ++i) {
      if (role[static_cast<std::size_t>(i)] == 0) w[static_cast<std::size_t>(i)] = pool / middle;
    }
  } else {
    double total = 0.0;
    for (double x : w) total += x;
    for (double& x : w) x /= total;
  }
  for (int i = 0; i < n; ++i) {
    if (pub.authors[static_cast<std::size_t>(i)].professor_id == prof.id) {
      return w[static_cast<std::size_t>(i)];
    }
  }
  return 0.0;
}

double fss_of(const Corpus& corpus, const Professor& prof) {
  const double t = years(prof, 2009, 1, 1, 2013, 12, 31);
  double sum = 0.0;
  for (const Publication& pub : corpus.publications) {
    if (pub.year < 2009 || pub.year > 2013) continue;
    bool authored = false;
    for (const AuthorSlot& slot : pub.authors) {
      if (slot.professor_id == prof.id) authored = true;
    }
    if (!authored || pub.citations == 0) continue;
    double scaling = 0.0;
    for (const std::string& cat : pub.categories) scaling += cell_mean(corpus, pub.year, cat);
    scaling /= static_cast<double>(pub.categories.size());
    sum += static_cast<double>(pub.citations) / scaling * fraction(corpus, pub, prof);
  }
  return sum / t;
}

}  // namespace oracle

void check_formula_oracle() {
  const auto start = std::chrono::steady_clock::now();
  const SyntheticCorpus synthetic = build_synthetic_corpus();
  const Corpus& corpus = synthetic.corpus;
  const auto baselines = CitationBaseline::from_corpus(corpus.publications);
  const DateWindow window{make_date(2009, 1, 1), make_date(2013, 12, 31)};
  const ScoreTable table = compute_scores(corpus, baselines, {window, 90.0, {}});

  bool pass = true;
  std::string detail;

  // professor-level equivalence
  std::map<std::string, double> oracle_fss;
  for (const Professor& prof : corpus.roster) {
    const double expected = oracle::fss_of(corpus, prof);
    oracle_fss[prof.id] = expected;
    const ScoreCard* card = table.find(prof.id);
    if (card == nullptr) {
      pass = false;
      detail = "missing card " + prof.id;
      break;
    }
    const double scale = std::max(1.0, std::fabs(expected));
    if (std::fabs(card->fss - expected) > 1e-12 * scale) {
      pass = false;
      detail = prof.id + ": " + std::to_string(card->fss) + " vs " + std::to_string(expected);
      break;
    }
  }

  // university-level equivalence at the unfiltered whole-system scope
  if (pass) {
    std::map<std::string, double> sds_mean;
    for (const std::string& sds : table.sds_codes()) {
      double sum = 0.0;
      int count = 0;
      for (const Professor& prof : corpus.roster) {
        if (prof.sds_code == sds && oracle_fss[prof.id] > 0.0) {
          sum += oracle_fss[prof.id];
          ++count;
        }
      }
      if (count == 0) {
        pass = false;
        detail = "synthetic corpus has an unproductive field " + sds;
      } else {
        sds_mean[sds] = sum / count;
      }
    }
    if (pass) {
      for (const std::string& university : corpus.university_ids()) {
        double sum = 0.0;
        int staff = 0;
        for (const Professor& prof : corpus.roster) {
          if (prof.university_id != university) continue;
          sum += oracle_fss[prof.id] / sds_mean[prof.sds_code];
          ++staff;
        }
        const double expected = sum / staff;
        const double got =
            fss_university(university, Scope::all(), table, corpus, /*min_staff_uda=*/0);
        if (std::fabs(got - expected) > 1e-12 * std::max(1.0, std::fabs(expected))) {
          pass = false;
          detail = university + ": " + std::to_string(got) + " vs " + std::to_string(expected);
          break;
        }
      }
    }
  }

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 1.0) {
    pass = false;
    detail += " too slow: " + std::to_string(seconds) + " s";
  }
  report(10, "scores match an independent brute-force evaluation to 1e-12", pass, detail);
}

// ------------------------------------------------- criteria 11 and 12 (CLI)

struct Options {
  fs::path fixtures = FSSRANK_FIXTURES_DIR;
  fs::path data = FSSRANK_DATA_DIR;
  fs::path cli = FSSRANK_CLI_PATH;
  fs::path workdir;
};

int run_cli(const Options& opt, const std::string& args) {
  const std::string command = "\"" + opt.cli.string() + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool trees_identical(const fs::path& a, const fs::path& b, std::string& detail) {
  std::vector<fs::path> names;
  for (const auto& entry : fs::recursive_directory_iterator(a)) {
    if (entry.is_regular_file()) names.push_back(fs::relative(entry.path(), a));
  }
  std::sort(names.begin(), names.end());
  std::size_t b_count = 0;
  for (const auto& entry : fs::recursive_directory_iterator(b)) {
    b_count += entry.is_regular_file();
  }
  if (b_count != names.size()) {
    detail = "file counts differ";
    return false;
  }
  for (const auto& name : names) {
    if (!fs::exists(b / name)) {
      detail = name.string() + " missing";
      return false;
    }
    if (slurp(a / name) != slurp(b / name)) {
      detail = name.string() + " differs";
      return false;
    }
  }
  return true;
}

void check_tie_inflation(const Options& opt) {
  // library level: a three-way tie right at the decile boundary
  std::vector<ScoreCard> cards;
  auto add = [&cards](const std::string& id, double fss) {
    ScoreCard card;
    card.professor_id = id;
    card.university_id = "u1";
    card.sds_code = "S";
    card.fss = fss;
    cards.push_back(card);
  };
  add("P01", 9.0);
  add("P02", 5.0);
  add("P03", 5.0);
  add("P04", 5.0);
  for (int i = 5; i <= 20; ++i) add("P" + std::to_string(i + 10), 4.0 - 0.1 * i);
  const ScoreTable table = rank_scorecards(cards);
  const auto flagged = flag_top_scientists(sds_rank_list("S", table));
  bool pass = flagged.size() == 4 &&
              static_cast<double>(flagged.size()) > 0.10 * static_cast<double>(cards.size());
  std::string detail = "flagged " + std::to_string(flagged.size()) + " of " +
                       std::to_string(cards.size());

  // end to end: the bundled corpus embeds such a tie; the national count in
  // the dataset summary must exceed a strict 10% floor
  const fs::path out = opt.workdir / "tie_report";
  if (run_cli(opt, "report --data \"" + opt.data.string() + "\" --out \"" + out.string() +
                       "\"") != 0) {
    pass = false;
    detail += "; report command failed";
  } else {
    const csv::Table summary = csv::read_file(out / "dataset_summary.csv");
    const std::size_t c_uda = summary.require_column("uda_code");
    const std::size_t c_faculty = summary.require_column("faculty");
    const std::size_t c_top = summary.require_column("top_scientists");
    long faculty = 0;
    long top = -1;
    for (const auto& row : summary.rows) {
      if (row[c_uda] == "TOTAL") {
        faculty = std::atol(row[c_faculty].c_str());
        top = std::atol(row[c_top].c_str());
      }
    }
    if (top <= static_cast<long>(0.10 * static_cast<double>(faculty))) {
      pass = false;
    }
    detail += "; national " + std::to_string(top) + " of " + std::to_string(faculty);
  }
  report(11, "boundary ties inflate the top-scientist set past 10%", pass, detail);
}

void check_determinism(const Options& opt) {
  bool pass = true;
  std::string detail;
  const fs::path out_a = opt.workdir / "run_a";
  const fs::path out_b = opt.workdir / "run_b";

  auto run_all = [&](const fs::path& data, const fs::path& out) {
    const std::string base = "--data \"" + data.string() + "\" --out \"" + out.string() + "\"";
    return run_cli(opt, "validate " + base) == 0 && run_cli(opt, "score " + base) == 0 &&
           run_cli(opt, "rank " + base + " --metric ts_ratio --scope all") == 0 &&
           run_cli(opt, "compare " + base) == 0 &&
           run_cli(opt, "report " + base + " --svg") == 0;
  };
  if (!run_all(opt.data, out_a) || !run_all(opt.data, out_b)) {
    pass = false;
    detail = "pipeline run failed";
  } else if (!trees_identical(out_a, out_b, detail)) {
    pass = false;
  }

  // shuffled publication rows must not change the scores
  if (pass) {
    const fs::path shuffled_dir = opt.workdir / "shuffled_data";
    fs::create_directories(shuffled_dir);
    for (const char* name : {"taxonomy.csv", "roster.csv", "authorships.csv"}) {
      fs::copy_file(opt.data / name, shuffled_dir / name, fs::copy_options::overwrite_existing);
    }
    std::ifstream in(opt.data / "publications.csv");
    std::string header;
    std::getline(in, header);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
      if (!line.empty()) lines.push_back(line);
    }
    std::shuffle(lines.begin(), lines.end(), std::mt19937(1234));
    std::ofstream out(shuffled_dir / "publications.csv", std::ios::binary);
    out << header << "\n";
    for (const auto& line : lines) out << line << "\n";
    out.close();

    const fs::path out_c = opt.workdir / "run_c";
    if (run_cli(opt, "score --data \"" + shuffled_dir.string() + "\" --out \"" +
                         out_c.string() + "\"") != 0) {
      pass = false;
      detail = "scoring the shuffled corpus failed";
    } else if (slurp(out_a / "scores.csv") != slurp(out_c / "scores.csv")) {
      pass = false;
      detail = "scores.csv differs after shuffling publications";
    }
  }
  report(12, "full runs are byte-identical; input order never matters", pass, detail);
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    auto next = [&]() -> std::string { return i + 1 < argc ? argv[++i] : ""; };
    if (arg == "--fixtures") opt.fixtures = next();
    else if (arg == "--data") opt.data = next();
    else if (arg == "--cli") opt.cli = next();
    else if (arg == "--workdir") opt.workdir = next();
    else {
      std::fprintf(stderr, "unknown argument: %s\n", arg.c_str());
      return 2;
    }
  }
  if (opt.workdir.empty()) {
    opt.workdir = fs::temp_directory_path() /
                  ("fssrank_acceptance_" + std::to_string(std::random_device{}()));
  }
  fs::create_directories(opt.workdir);

  int rc = 0;
  try {
    const Fixture uda7 = load_fixture(opt.fixtures / "uda7_comparison.csv");
    const Fixture national = load_fixture(opt.fixtures / "national_comparison.csv");

    check_percentile_formula();
    check_quartile_shifts(uda7);
    check_percentile_shifts(uda7, national);
    check_spearman(uda7, national);
    check_pearson(national);
    check_aggregates(uda7, national);
    check_outlier_fence(national);
    check_gap_statistics(national);
    check_credit_properties();
    check_formula_oracle();
    check_tie_inflation(opt);
    check_determinism(opt);
    rc = g_failures;
    std::printf("%d of 12 criteria passed\n", 12 - g_failures);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance suite aborted: %s\n", e.what());
    rc = 99;
  }
  std::error_code ec;
  fs::remove_all(opt.workdir, ec);
  return rc;
}
