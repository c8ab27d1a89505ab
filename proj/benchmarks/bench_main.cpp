#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fssrank/corpus.hpp"
#include "fssrank/credit.hpp"
#include "fssrank/impact.hpp"
#include "fssrank/ranking.hpp"
#include "fssrank/scoring.hpp"

namespace {

using namespace fssrank;

Corpus synthetic_corpus(int professors, int publications) {
  FieldTaxonomy taxonomy;
  taxonomy.add_uda({"D1", "One"});
  taxonomy.add_uda({"D2", "Two"});
  taxonomy.add_sds({"F1", "Field 1", "D1", CreditSchemeKind::equal});
  taxonomy.add_sds({"F2", "Field 2", "D1", CreditSchemeKind::positional});
  taxonomy.add_sds({"F3", "Field 3", "D2", CreditSchemeKind::positional});

  std::mt19937 rng(7);
  std::vector<Professor> roster;
  const char* fields[] = {"F1", "F2", "F3"};
  for (int i = 0; i < professors; ++i) {
    Professor p;
    p.id = "P" + std::to_string(100000 + i);
    p.university_id = "U" + std::to_string(rng() % 24);
    p.sds_code = fields[i % 3];
    p.start_date = make_date(1995 + static_cast<int>(rng() % 15), 1, 1);
    roster.push_back(std::move(p));
  }
  const char* categories[] = {"A", "B", "C", "D"};
  std::vector<Publication> pubs;
  for (int i = 0; i < publications; ++i) {
    Publication pub;
    pub.id = "W" + std::to_string(100000 + i);
    pub.year = 2009 + static_cast<int>(rng() % 5);
    pub.citations = rng() % 4 == 0 ? 0 : static_cast<std::int64_t>(rng() % 60);
    pub.categories.push_back(categories[rng() % 4]);
    const int n_authors = 1 + static_cast<int>(rng() % 7);
    for (int a = 0; a < n_authors; ++a) {
      AuthorSlot slot;
      slot.position = a + 1;
      if (a == 0 || rng() % 2 == 0) {
        const Professor& p = roster[rng() % roster.size()];
        slot.professor_id = p.id;
        slot.university_id = p.university_id;
      }
      slot.resolved_university = slot.university_id;
      pub.authors.push_back(std::move(slot));
    }
    pubs.push_back(std::move(pub));
  }
  return make_corpus(std::move(taxonomy), std::move(roster), std::move(pubs));
}

void BM_positional_credit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(positional_weights(n, false));
  }
}
BENCHMARK(BM_positional_credit)->Arg(5)->Arg(25);

void BM_build_baselines(benchmark::State& state) {
  const Corpus corpus = synthetic_corpus(500, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(CitationBaseline::from_corpus(corpus.publications));
  }
}
BENCHMARK(BM_build_baselines)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_score_pipeline(benchmark::State& state) {
  const Corpus corpus =
      synthetic_corpus(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) * 3);
  const auto baselines = CitationBaseline::from_corpus(corpus.publications);
  const ScoringParams params{{make_date(2009, 1, 1), make_date(2013, 12, 31)}, 90.0, {}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_scores(corpus, baselines, params));
  }
}
BENCHMARK(BM_score_pipeline)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_spearman(benchmark::State& state) {
  std::mt19937 rng(13);
  std::vector<std::pair<double, double>> pairs;
  for (int i = 0; i < state.range(0); ++i) {
    pairs.emplace_back(static_cast<double>(rng() % 1000), static_cast<double>(rng() % 1000));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(spearman(pairs));
  }
}
BENCHMARK(BM_spearman)->Arg(64)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
