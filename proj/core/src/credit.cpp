#include "fssrank/credit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "fssrank/csv.hpp"
#include "fssrank/errors.hpp"

namespace fssrank {

namespace {

constexpr double kSumTolerance = 1e-9;

void check_variant(std::string_view name, std::initializer_list<double> weights) {
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) {
      throw ValidationError("credit weights: negative weight in the " + std::string(name) +
                            " variant");
    }
    sum += w;
  }
  if (std::fabs(sum - 1.0) > kSumTolerance) {
    throw ValidationError("credit weights: " + std::string(name) +
                          " variant sums to " + std::to_string(sum) + ", expected 1");
  }
}

}  // namespace

void CreditWeights::validate() const {
  check_variant("intra", {intra_first, intra_last, intra_others});
  check_variant("extra",
                {extra_first, extra_second, extra_second_last, extra_last, extra_others});
}

CreditWeights CreditWeights::from_csv(const std::filesystem::path& path) {
  const csv::Table table = csv::read_file(path);
  const std::size_t c_scheme = table.require_column("scheme");
  const std::size_t c_role = table.require_column("role");
  const std::size_t c_weight = table.require_column("weight");

  CreditWeights weights;
  std::map<std::string, double*> slots{
      {"intra/first", &weights.intra_first},
      {"intra/last", &weights.intra_last},
      {"intra/others", &weights.intra_others},
      {"extra/first", &weights.extra_first},
      {"extra/second", &weights.extra_second},
      {"extra/second_last", &weights.extra_second_last},
      {"extra/last", &weights.extra_last},
      {"extra/others", &weights.extra_others},
  };
  std::set<std::string> seen;
  for (const auto& row : table.rows) {
    const std::string key = row[c_scheme] + "/" + row[c_role];
    auto it = slots.find(key);
    if (it == slots.end()) {
      throw ValidationError(path.string() + ": unknown scheme/role '" + key + "'");
    }
    if (!seen.insert(key).second) {
      throw ValidationError(path.string() + ": duplicate entry '" + key + "'");
    }
    const std::string& text = row[c_weight];
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size()) {
      throw ValidationError(path.string() + ": invalid weight '" + text + "'");
    }
    *it->second = value;
  }
  weights.validate();
  return weights;
}

double equal_fraction(int n_authors) {
  if (n_authors < 1) throw ComputeError("equal_fraction: publication has no authors");
  return 1.0 / static_cast<double>(n_authors);
}

bool intra_mural(const Publication& publication) {
  if (publication.authors.empty()) return false;
  const std::string& first = publication.authors.front().resolved_university;
  const std::string& last = publication.authors.back().resolved_university;
  return !first.empty() && first == last;
}

std::vector<double> positional_weights(int n_authors, bool intra, const CreditWeights& weights) {
  if (n_authors < 1) throw ComputeError("positional_weights: publication has no authors");
  const int n = n_authors;
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  std::vector<bool> taken(static_cast<std::size_t>(n), false);

  // role priority: first > last > second > second-to-last
  std::array<std::pair<int, double>, 4> roles{};
  std::size_t n_roles = 0;
  double pool = 0.0;
  if (intra) {
    roles = {{{0, weights.intra_first}, {n - 1, weights.intra_last}, {}, {}}};
    n_roles = 2;
    pool = weights.intra_others;
  } else {
    roles = {{{0, weights.extra_first},
              {n - 1, weights.extra_last},
              {1, weights.extra_second},
              {n - 2, weights.extra_second_last}}};
    n_roles = 4;
    pool = weights.extra_others;
  }
  for (std::size_t r = 0; r < n_roles; ++r) {
    const auto [index, weight] = roles[r];
    if (index < 0 || index >= n || taken[static_cast<std::size_t>(index)]) continue;
    out[static_cast<std::size_t>(index)] = weight;
    taken[static_cast<std::size_t>(index)] = true;
  }
  const auto middle = static_cast<std::size_t>(std::count(taken.begin(), taken.end(), false));
  if (middle > 0) {
    const double share = pool / static_cast<double>(middle);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (!taken[i]) out[i] = share;
    }
  } else {
    const double sum = std::accumulate(out.begin(), out.end(), 0.0);
    for (double& w : out) w /= sum;
  }
  return out;
}

std::vector<double> positional_credit(const Publication& publication,
                                      const CreditWeights& weights) {
  return positional_weights(static_cast<int>(publication.authors.size()),
                            intra_mural(publication), weights);
}

double author_fraction(const Publication& publication, const Professor& professor,
                       const FieldTaxonomy& taxonomy, const CreditWeights& weights) {
  // first matching slot when a byline repeats the professor
  const AuthorSlot* slot = nullptr;
  for (const AuthorSlot& s : publication.authors) {
    if (s.professor_id == professor.id) {
      slot = &s;
      break;
    }
  }
  if (slot == nullptr) {
    throw ComputeError("professor '" + professor.id + "' is not an author of publication '" +
                       publication.id + "'");
  }
  const SdsEntry& sds = taxonomy.sds_at(professor.sds_code);
  if (sds.credit_scheme == CreditSchemeKind::equal) {
    return equal_fraction(static_cast<int>(publication.authors.size()));
  }
  const std::vector<double> vector = positional_credit(publication, weights);
  return vector[static_cast<std::size_t>(slot->position - 1)];
}

}  // namespace fssrank
