#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "fssrank/corpus.hpp"

namespace fssrank {

/// Mean citations of cited publications per (year, subject category) cell.
/// Cells with no cited publication have no entry; every stored mean is > 0.
class CitationBaseline {
 public:
  using Key = std::pair<int, std::string>;

  /// Cited-only mean per cell; a publication with k categories contributes
  /// its citation count to all k cells. Independent of input order.
  static CitationBaseline from_corpus(std::span<const Publication> publications);

  /// Schema: year,category,mean_cited_citations. Rejects non-positive means
  /// and duplicate cells.
  static CitationBaseline from_csv(const std::filesystem::path& path);

  /// Merge where `external` wins on overlapping cells.
  CitationBaseline overridden_by(const CitationBaseline& external) const;

  std::optional<double> mean_for(int year, std::string_view category) const;
  const std::map<Key, double>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::map<Key, double> entries_;
};

/// Field-normalized impact of one publication: citations divided by the mean
/// of its categories' baseline values. Uncited publications score 0 without
/// touching the baseline. Throws ComputeError when a cited publication's
/// cell is missing (possible only with externally supplied baselines).
double normalized_citations(const Publication& publication, const CitationBaseline& baselines);

}  // namespace fssrank
