#include "fssrank/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "fssrank/errors.hpp"

namespace fssrank {

std::string Scope::label() const {
  switch (level) {
    case Level::all: return "ALL";
    case Level::uda: return "UDA:" + code;
    case Level::sds: return "SDS:" + code;
  }
  return {};
}

Scope parse_scope(std::string_view text) {
  if (text == "all" || text == "ALL") return Scope::all();
  if (text.rfind("uda:", 0) == 0) return Scope::uda(std::string(text.substr(4)));
  if (text.rfind("sds:", 0) == 0) return Scope::sds(std::string(text.substr(4)));
  throw ValidationError("invalid scope '" + std::string(text) +
                        "', expected all, uda:CODE or sds:CODE");
}

double percentile_rank(int rank, int population) {
  if (population < 2) {
    throw ComputeError("percentile undefined for a population of " + std::to_string(population));
  }
  if (rank < 1 || rank > population) {
    throw ComputeError("rank " + std::to_string(rank) + " outside population of " +
                       std::to_string(population));
  }
  return 100.0 * static_cast<double>(population - rank) / static_cast<double>(population - 1);
}

double fss_professor(const Professor& professor, const Corpus& corpus,
                     const CitationBaseline& baselines, const DateWindow& window,
                     const CreditWeights& weights) {
  const double t = years_active(professor, window);
  const int first_year = static_cast<int>(window.start.year());
  const int last_year = static_cast<int>(window.end.year());

  // publication-id order fixes the summation order
  double sum = 0.0;
  for (std::size_t index : corpus.publications_of(professor.id)) {
    const Publication& pub = corpus.publications[index];
    if (pub.year < first_year || pub.year > last_year) continue;
    sum += normalized_citations(pub, baselines) *
           author_fraction(pub, professor, corpus.taxonomy, weights);
  }
  return sum / t;
}

const ScoreCard* ScoreTable::find(std::string_view professor_id) const {
  auto it = std::lower_bound(cards_.begin(), cards_.end(), professor_id,
                             [](const ScoreCard& c, std::string_view id) {
                               return c.professor_id < id;
                             });
  if (it == cards_.end() || it->professor_id != professor_id) return nullptr;
  return &*it;
}

std::vector<std::string> ScoreTable::sds_codes() const {
  std::vector<std::string> codes;
  codes.reserve(by_sds_.size());
  for (const auto& [code, members] : by_sds_) codes.push_back(code);
  return codes;
}

std::span<const std::size_t> ScoreTable::sds_members(std::string_view sds_code) const {
  auto it = by_sds_.find(sds_code);
  if (it == by_sds_.end()) return {};
  return it->second;
}

std::optional<double> ScoreTable::productive_mean(std::string_view sds_code) const {
  auto it = productive_mean_.find(sds_code);
  if (it == productive_mean_.end()) return std::nullopt;
  return it->second;
}

ScoreTable rank_scorecards(std::vector<ScoreCard> cards, double top_percentile) {
  ScoreTable table;
  std::sort(cards.begin(), cards.end(), [](const ScoreCard& a, const ScoreCard& b) {
    return a.professor_id < b.professor_id;
  });
  table.cards_ = std::move(cards);

  std::map<std::string, std::vector<std::size_t>, std::less<>> groups;
  for (std::size_t i = 0; i < table.cards_.size(); ++i) {
    groups[table.cards_[i].sds_code].push_back(i);
  }

  for (auto& [sds_code, members] : groups) {
    // descending by fss; id order within ties is presentation only
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      const ScoreCard& ca = table.cards_[a];
      const ScoreCard& cb = table.cards_[b];
      if (ca.fss != cb.fss) return ca.fss > cb.fss;
      return ca.professor_id < cb.professor_id;
    });

    const int population = static_cast<int>(members.size());
    double productive_sum = 0.0;
    int productive_count = 0;
    int rank = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      ScoreCard& card = table.cards_[members[i]];
      if (i == 0 || card.fss != table.cards_[members[i - 1]].fss) {
        rank = static_cast<int>(i) + 1;  // competition ranking
      }
      card.rank = rank;
      card.population = population;
      card.percentile = population >= 2 ? percentile_rank(rank, population) : 100.0;
      card.is_productive = card.fss > 0.0;
      card.is_top = card.is_productive && card.percentile >= top_percentile;
      if (card.is_productive) {
        productive_sum += card.fss;
        ++productive_count;
      }
    }
    if (productive_count > 0) {
      table.productive_mean_[sds_code] = productive_sum / productive_count;
    } else {
      table.degenerate_.push_back(sds_code);
    }
    table.by_sds_[sds_code] = std::move(members);
  }
  return table;
}

ScoreTable compute_scores(const Corpus& corpus, const CitationBaseline& baselines,
                          const ScoringParams& params) {
  std::vector<ScoreCard> cards;
  std::vector<std::string> skipped;
  cards.reserve(corpus.roster.size());
  for (const Professor& professor : corpus.roster) {
    try {
      years_active(professor, params.window);
    } catch (const ComputeError&) {
      skipped.push_back(professor.id);  // employment outside the window
      continue;
    }
    ScoreCard card;
    card.professor_id = professor.id;
    card.university_id = professor.university_id;
    card.sds_code = professor.sds_code;
    // other failures (e.g. missing baseline cells) abort the run
    card.fss = fss_professor(professor, corpus, baselines, params.window, params.weights);
    cards.push_back(std::move(card));
  }
  ScoreTable table = rank_scorecards(std::move(cards), params.top_percentile);
  table.skipped_ = std::move(skipped);
  return table;
}

std::vector<ScoreCard> sds_rank_list(std::string_view sds_code, const ScoreTable& table) {
  const auto members = table.sds_members(sds_code);
  if (members.empty()) {
    throw ComputeError("no professors in SDS '" + std::string(sds_code) + "'");
  }
  std::vector<ScoreCard> out;
  out.reserve(members.size());
  for (std::size_t index : members) out.push_back(table.cards()[index]);
  return out;
}

std::vector<std::string> flag_top_scientists(std::span<const ScoreCard> ranked_cards,
                                             double threshold_percentile) {
  std::vector<std::string> flagged;
  for (const ScoreCard& card : ranked_cards) {
    const double pct =
        card.population >= 2 ? percentile_rank(card.rank, card.population) : 100.0;
    if (pct >= threshold_percentile && card.fss > 0.0) flagged.push_back(card.professor_id);
  }
  std::sort(flagged.begin(), flagged.end());
  return flagged;
}

double mean_productive_fss(std::string_view sds_code, const ScoreTable& table) {
  if (table.sds_members(sds_code).empty()) {
    throw ComputeError("no professors in SDS '" + std::string(sds_code) + "'");
  }
  const auto mean = table.productive_mean(sds_code);
  if (!mean) {
    throw ComputeError("mean productivity undefined: SDS '" + std::string(sds_code) +
                       "' has no productive professor");
  }
  return *mean;
}

namespace {

// Card indices of one university at one scope, ordered by professor id. At
// the whole-system scope only (university, UDA) cells with at least
// min_staff_uda professors contribute.
std::vector<std::size_t> scope_members(std::string_view university_id, const Scope& scope,
                                       const ScoreTable& table, const Corpus& corpus,
                                       int min_staff_uda) {
  const auto& cards = table.cards();
  auto uda_of = [&](const std::string& sds_code) -> const std::string& {
    return corpus.taxonomy.sds_at(sds_code).uda_code;
  };

  std::vector<std::size_t> mine;
  for (std::size_t i = 0; i < cards.size(); ++i) {
    if (cards[i].university_id == university_id) mine.push_back(i);
  }

  std::vector<std::size_t> out;
  switch (scope.level) {
    case Scope::Level::sds:
      for (std::size_t i : mine) {
        if (cards[i].sds_code == scope.code) out.push_back(i);
      }
      break;
    case Scope::Level::uda:
      for (std::size_t i : mine) {
        if (uda_of(cards[i].sds_code) == scope.code) out.push_back(i);
      }
      break;
    case Scope::Level::all: {
      std::map<std::string, std::vector<std::size_t>> cells;
      for (std::size_t i : mine) cells[uda_of(cards[i].sds_code)].push_back(i);
      for (const auto& [uda, indices] : cells) {
        if (static_cast<int>(indices.size()) < min_staff_uda) continue;
        out.insert(out.end(), indices.begin(), indices.end());
      }
      std::sort(out.begin(), out.end());
      break;
    }
  }
  return out;
}

}  // namespace

double fss_university(std::string_view university_id, const Scope& scope,
                      const ScoreTable& table, const Corpus& corpus, int min_staff_uda) {
  const auto members = scope_members(university_id, scope, table, corpus, min_staff_uda);
  if (members.empty()) {
    throw ComputeError("university '" + std::string(university_id) + "' has no staff in scope " +
                       scope.label());
  }
  double sum = 0.0;
  int counted = 0;
  for (std::size_t index : members) {
    const ScoreCard& card = table.cards()[index];
    const auto mean = table.productive_mean(card.sds_code);
    if (!mean) continue;  // degenerate SDS: excluded from the average
    sum += card.fss / *mean;
    ++counted;
  }
  return counted > 0 ? sum / counted : 0.0;
}

double ts_ratio(std::string_view university_id, const Scope& scope, const ScoreTable& table,
                const Corpus& corpus, int min_staff_uda) {
  const auto members = scope_members(university_id, scope, table, corpus, min_staff_uda);
  if (members.empty()) {
    throw ComputeError("university '" + std::string(university_id) + "' has no staff in scope " +
                       scope.label());
  }
  int top = 0;
  for (std::size_t index : members) {
    if (table.cards()[index].is_top) ++top;
  }
  return static_cast<double>(top) / static_cast<double>(members.size());
}

std::vector<UniversityScore> university_scores(const Scope& scope, const ScoreTable& table,
                                               const Corpus& corpus, int min_staff_uda) {
  std::vector<UniversityScore> out;
  for (const std::string& university : corpus.university_ids()) {
    const auto members = scope_members(university, scope, table, corpus, min_staff_uda);
    if (members.empty()) continue;

    UniversityScore score;
    score.university_id = university;
    score.scope = scope;
    score.staff_count = static_cast<int>(members.size());
    double sum = 0.0;
    for (std::size_t index : members) {
      const ScoreCard& card = table.cards()[index];
      if (card.is_top) ++score.ts_count;
      if (const auto mean = table.productive_mean(card.sds_code)) {
        sum += card.fss / *mean;
        ++score.rs_count;
      }
    }
    score.ts_ratio = static_cast<double>(score.ts_count) / score.staff_count;
    score.fss_u = score.rs_count > 0 ? sum / score.rs_count : 0.0;
    out.push_back(std::move(score));
  }
  return out;
}

}  // namespace fssrank
