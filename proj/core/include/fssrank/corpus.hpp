#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fssrank/dates.hpp"

namespace fssrank {

enum class CreditSchemeKind { equal, positional };

CreditSchemeKind parse_credit_scheme(std::string_view token);
std::string_view credit_scheme_token(CreditSchemeKind kind);

struct SdsEntry {
  std::string code;
  std::string name;
  std::string uda_code;
  CreditSchemeKind credit_scheme = CreditSchemeKind::equal;
};

struct UdaEntry {
  std::string code;
  std::string name;
};

/// Field taxonomy: fine-grained fields (SDS) grouped into disciplines (UDA).
/// Entries are kept sorted by code; codes are unique and every SDS
/// references an existing UDA.
class FieldTaxonomy {
 public:
  void add_uda(UdaEntry entry);
  void add_sds(SdsEntry entry);

  const SdsEntry* find_sds(std::string_view code) const;
  const UdaEntry* find_uda(std::string_view code) const;
  const SdsEntry& sds_at(std::string_view code) const;  // throws ValidationError

  const std::vector<SdsEntry>& sds_entries() const { return sds_; }
  const std::vector<UdaEntry>& uda_entries() const { return uda_; }

 private:
  std::vector<SdsEntry> sds_;
  std::vector<UdaEntry> uda_;
  std::map<std::string, std::size_t, std::less<>> sds_index_;
  std::map<std::string, std::size_t, std::less<>> uda_index_;
};

struct Professor {
  std::string id;
  std::string university_id;
  std::string sds_code;
  CalDate start_date;
  std::optional<CalDate> end_date;  // absent = still employed
};

struct AuthorSlot {
  int position = 0;             // 1-based byline position
  std::string professor_id;     // empty = external author
  std::string university_id;    // affiliation as recorded, empty = unknown
  std::string resolved_university;  // falls back to the roster entry, not serialized

  bool internal() const { return !professor_id.empty(); }
};

struct Publication {
  std::string id;
  int year = 0;
  std::int64_t citations = 0;  // frozen at the census date
  std::vector<std::string> categories;
  std::vector<AuthorSlot> authors;  // ordered by position, 1..n contiguous
};

FieldTaxonomy load_taxonomy(const std::filesystem::path& path);
std::vector<Professor> load_roster(const std::filesystem::path& path,
                                   const FieldTaxonomy& taxonomy);
std::vector<Publication> load_publications(const std::filesystem::path& publications_path,
                                           const std::filesystem::path& authorships_path,
                                           const std::vector<Professor>& roster);

/// Immutable after construction; downstream stages only read it.
struct Corpus {
  FieldTaxonomy taxonomy;
  std::vector<Professor> roster;          // sorted by professor id
  std::vector<Publication> publications;  // sorted by publication id

  const Professor* find_professor(std::string_view id) const;
  const Publication* find_publication(std::string_view id) const;
  /// Indices into publications for every publication the professor authored,
  /// ascending (publication-id order fixes the summation order downstream).
  std::span<const std::size_t> publications_of(std::string_view professor_id) const;
  std::vector<std::string> university_ids() const;  // sorted, distinct

 private:
  friend Corpus make_corpus(FieldTaxonomy, std::vector<Professor>, std::vector<Publication>);
  std::map<std::string, std::size_t, std::less<>> professor_index_;
  std::map<std::string, std::size_t, std::less<>> publication_index_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> authored_;
};

Corpus make_corpus(FieldTaxonomy taxonomy, std::vector<Professor> roster,
                   std::vector<Publication> publications);

struct CorpusPaths {
  std::filesystem::path taxonomy;
  std::filesystem::path roster;
  std::filesystem::path publications;
  std::filesystem::path authorships;
};

Corpus load_corpus(const CorpusPaths& paths);

// Canonical serialization: fixed column order, rows sorted by id. Loading a
// file and re-serializing it is a fixpoint.
void write_taxonomy_csv(const std::filesystem::path& path, const FieldTaxonomy& taxonomy);
void write_roster_csv(const std::filesystem::path& path, std::span<const Professor> roster);
void write_publications_csv(const std::filesystem::path& path,
                            std::span<const Publication> publications);
void write_authorships_csv(const std::filesystem::path& path,
                           std::span<const Publication> publications);
void write_corpus(const std::filesystem::path& dir, const Corpus& corpus);

/// Years worked inside the window: inclusive day count of the intersection
/// of the employment interval with the window, divided by 365.25 and rounded
/// to 2 decimals. Throws ComputeError when the intersection is empty or too
/// short to round above zero.
double years_active(const Professor& professor, const DateWindow& window);

struct ValidationIssue {
  std::string code;
  std::string subject;
  std::string message;
};

struct ValidationReport {
  std::size_t university_count = 0;
  std::size_t professor_count = 0;
  std::size_t publication_count = 0;
  std::size_t populated_sds_count = 0;  // SDSs with at least one professor
  std::vector<ValidationIssue> warnings;  // sorted by (code, subject)
};

/// Non-structural diagnostics; structural defects already throw at load.
ValidationReport validate_corpus(const Corpus& corpus);

}  // namespace fssrank
