#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fssrank/corpus.hpp"
#include "fssrank/credit.hpp"
#include "fssrank/impact.hpp"

namespace fssrank {

/// Aggregation scope: one SDS, one UDA, or the whole system.
struct Scope {
  enum class Level { sds, uda, all };
  Level level = Level::all;
  std::string code;  // empty at Level::all

  static Scope all() { return {Level::all, {}}; }
  static Scope uda(std::string code) { return {Level::uda, std::move(code)}; }
  static Scope sds(std::string code) { return {Level::sds, std::move(code)}; }

  std::string label() const;
  bool operator==(const Scope&) const = default;
};

Scope parse_scope(std::string_view text);  // "all" | "uda:CODE" | "sds:CODE"

struct ScoreCard {
  std::string professor_id;
  std::string university_id;
  std::string sds_code;
  double fss = 0.0;        // impact per year of employment
  int rank = 0;            // competition rank within the national SDS list
  int population = 0;      // professors in the SDS
  double percentile = 0.0;
  bool is_top = false;
  bool is_productive = false;  // fss > 0
};

struct ScoringParams;

/// National score table: one card per evaluated professor, plus per-SDS
/// ranking order and productive means. Immutable once computed.
class ScoreTable {
 public:
  const std::vector<ScoreCard>& cards() const { return cards_; }
  const ScoreCard* find(std::string_view professor_id) const;

  std::vector<std::string> sds_codes() const;
  /// Card indices of one SDS, ordered by rank then professor id.
  std::span<const std::size_t> sds_members(std::string_view sds_code) const;
  /// Mean fss of the SDS's productive professors; absent when none are.
  std::optional<double> productive_mean(std::string_view sds_code) const;
  /// SDS codes with staff but no productive professor.
  const std::vector<std::string>& degenerate_sds() const { return degenerate_; }
  /// Professors skipped because their employment misses the window.
  const std::vector<std::string>& skipped_professors() const { return skipped_; }

 private:
  friend ScoreTable rank_scorecards(std::vector<ScoreCard>, double);
  friend ScoreTable compute_scores(const Corpus&, const CitationBaseline&, const ScoringParams&);
  std::vector<ScoreCard> cards_;  // sorted by professor id
  std::map<std::string, std::vector<std::size_t>, std::less<>> by_sds_;
  std::map<std::string, double, std::less<>> productive_mean_;
  std::vector<std::string> degenerate_;
  std::vector<std::string> skipped_;
};

/// 100*(N-rank)/(N-1). Defined for populations of at least 2.
double percentile_rank(int rank, int population);

/// Yearly field-normalized productivity of one professor over the window:
/// the sum over authored publications of normalized citations times the
/// author's fractional contribution, divided by years of employment.
/// Publications outside the window's calendar years are ignored.
double fss_professor(const Professor& professor, const Corpus& corpus,
                     const CitationBaseline& baselines, const DateWindow& window,
                     const CreditWeights& weights = {});

/// Ranks cards that already carry fss values: descending by fss with
/// competition ranks (ties share the minimum rank), percentile per card and
/// top flags at `top_percentile`. Single-professor populations are assigned
/// percentile 100. Input order does not matter.
ScoreTable rank_scorecards(std::vector<ScoreCard> cards, double top_percentile = 90.0);

struct ScoringParams {
  DateWindow window;
  double top_percentile = 90.0;
  CreditWeights weights;
};

/// Full scoring stage over a corpus.
ScoreTable compute_scores(const Corpus& corpus, const CitationBaseline& baselines,
                          const ScoringParams& params);

/// National ranking list of one SDS: cards ordered by rank, then professor
/// id. Throws ComputeError for an unknown or empty SDS.
std::vector<ScoreCard> sds_rank_list(std::string_view sds_code, const ScoreTable& table);

/// Professors at or above the threshold percentile with fss > 0; boundary
/// ties are all included. Returns sorted professor ids.
std::vector<std::string> flag_top_scientists(std::span<const ScoreCard> ranked_cards,
                                             double threshold_percentile = 90.0);

/// Mean fss over the SDS's productive professors. Throws ComputeError when
/// the SDS has none.
double mean_productive_fss(std::string_view sds_code, const ScoreTable& table);

struct UniversityScore {
  std::string university_id;
  Scope scope;
  int staff_count = 0;
  int ts_count = 0;
  double ts_ratio = 0.0;  // ts_count / staff_count
  double fss_u = 0.0;
  int rs_count = 0;  // staff entering the average (degenerate SDSs excluded)
};

/// Average of the university's professors' fss, each normalized by the
/// productive mean of their own SDS; unproductive staff contribute 0. Staff
/// in SDSs without any productive professor are left out of the average.
double fss_university(std::string_view university_id, const Scope& scope,
                      const ScoreTable& table, const Corpus& corpus,
                      int min_staff_uda = 10);

/// Share of the university's staff in scope flagged as top scientists.
/// Flags always come from the national per-SDS lists.
double ts_ratio(std::string_view university_id, const Scope& scope, const ScoreTable& table,
                const Corpus& corpus, int min_staff_uda = 10);

/// Per-university aggregation at the given scope, sorted by university id.
/// At the whole-system scope a university's population is the union of its
/// (university, UDA) cells holding at least `min_staff_uda` professors.
std::vector<UniversityScore> university_scores(const Scope& scope, const ScoreTable& table,
                                               const Corpus& corpus, int min_staff_uda = 10);

}  // namespace fssrank
