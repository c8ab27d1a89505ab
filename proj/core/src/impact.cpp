#include "fssrank/impact.hpp"

#include <charconv>

#include "fssrank/csv.hpp"
#include "fssrank/errors.hpp"

namespace fssrank {

CitationBaseline CitationBaseline::from_corpus(std::span<const Publication> publications) {
  // Integer sums per cell keep the mean independent of input order.
  std::map<Key, std::pair<std::int64_t, std::int64_t>> cells;
  for (const Publication& pub : publications) {
    if (pub.citations <= 0) continue;
    for (const std::string& category : pub.categories) {
      auto& [sum, count] = cells[{pub.year, category}];
      sum += pub.citations;
      count += 1;
    }
  }
  CitationBaseline baseline;
  for (const auto& [key, acc] : cells) {
    baseline.entries_[key] = static_cast<double>(acc.first) / static_cast<double>(acc.second);
  }
  return baseline;
}

CitationBaseline CitationBaseline::from_csv(const std::filesystem::path& path) {
  const csv::Table table = csv::read_file(path);
  const std::size_t c_year = table.require_column("year");
  const std::size_t c_cat = table.require_column("category");
  const std::size_t c_mean = table.require_column("mean_cited_citations");

  CitationBaseline baseline;
  for (const auto& row : table.rows) {
    int year = 0;
    {
      const std::string& text = row[c_year];
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), year);
      if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ValidationError(path.string() + ": invalid year '" + text + "'");
      }
    }
    double mean = 0.0;
    {
      const std::string& text = row[c_mean];
      char* end = nullptr;
      mean = std::strtod(text.c_str(), &end);
      if (end != text.c_str() + text.size() || text.empty()) {
        throw ValidationError(path.string() + ": invalid mean '" + text + "'");
      }
    }
    if (!(mean > 0.0)) {
      throw ValidationError(path.string() + ": non-positive mean for (" +
                            std::to_string(year) + ", " + row[c_cat] + ")");
    }
    const Key key{year, row[c_cat]};
    if (!baseline.entries_.emplace(key, mean).second) {
      throw ValidationError(path.string() + ": duplicate cell (" + std::to_string(year) + ", " +
                            row[c_cat] + ")");
    }
  }
  return baseline;
}

CitationBaseline CitationBaseline::overridden_by(const CitationBaseline& external) const {
  CitationBaseline merged = *this;
  for (const auto& [key, value] : external.entries_) {
    merged.entries_[key] = value;
  }
  return merged;
}

std::optional<double> CitationBaseline::mean_for(int year, std::string_view category) const {
  auto it = entries_.find(Key{year, std::string(category)});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

double normalized_citations(const Publication& publication, const CitationBaseline& baselines) {
  if (publication.citations == 0) return 0.0;
  double sum = 0.0;
  for (const std::string& category : publication.categories) {
    const auto mean = baselines.mean_for(publication.year, category);
    if (!mean) {
      throw ComputeError("no citation baseline for (" + std::to_string(publication.year) + ", " +
                         category + ") needed by publication '" + publication.id + "'");
    }
    sum += *mean;
  }
  const double scaling = sum / static_cast<double>(publication.categories.size());
  return static_cast<double>(publication.citations) / scaling;
}

}  // namespace fssrank
