#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "fssrank/corpus.hpp"

namespace fssrank {

/// Positional weight table. The intra-mural variant applies when the first
/// and last authors share a university; the extra-mural variant otherwise,
/// including unknown affiliations. The "others" entry is the pooled share
/// split equally among authors without a named role.
struct CreditWeights {
  double intra_first = 0.40;
  double intra_last = 0.40;
  double intra_others = 0.20;

  double extra_first = 0.30;
  double extra_second = 0.15;
  double extra_second_last = 0.15;
  double extra_last = 0.30;
  double extra_others = 0.10;

  /// Each variant must sum to 1 within 1e-9, all weights non-negative.
  void validate() const;

  /// Schema: scheme,role,weight with scheme in {intra, extra} and role in
  /// {first, second, second_last, last, others}. Missing entries keep their
  /// defaults; the merged table is validated.
  static CreditWeights from_csv(const std::filesystem::path& path);
};

/// Equal fractional credit, 1/n per author.
double equal_fraction(int n_authors);

/// True when the first and last byline authors have a known, shared
/// university affiliation.
bool intra_mural(const Publication& publication);

/// Core positional rule for a byline of n authors. Named roles are assigned
/// by priority first > last > second > second-to-last, one role per author;
/// the pooled share is split over the rest. With no pooled authors left the
/// vector is renormalized to sum 1.
std::vector<double> positional_weights(int n_authors, bool intra,
                                       const CreditWeights& weights = {});

/// Positional credit vector for a publication's byline, variant chosen by
/// the intra/extra predicate.
std::vector<double> positional_credit(const Publication& publication,
                                      const CreditWeights& weights = {});

/// Fractional contribution of one professor to one publication, using the
/// credit scheme of the professor's SDS. Throws ComputeError when the
/// professor is not among the authors.
double author_fraction(const Publication& publication, const Professor& professor,
                       const FieldTaxonomy& taxonomy, const CreditWeights& weights = {});

}  // namespace fssrank
