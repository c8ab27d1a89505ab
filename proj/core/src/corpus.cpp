#include "fssrank/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <unordered_set>

#include "fssrank/csv.hpp"
#include "fssrank/errors.hpp"

namespace fssrank {

namespace {

std::int64_t parse_int64(const std::string& text, const std::string& what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ValidationError("invalid " + what + ": '" + text + "'");
  }
  return value;
}

}  // namespace

CreditSchemeKind parse_credit_scheme(std::string_view token) {
  if (token == "EQUAL") return CreditSchemeKind::equal;
  if (token == "POSITIONAL") return CreditSchemeKind::positional;
  throw ValidationError("unknown credit_scheme '" + std::string(token) +
                        "', expected EQUAL or POSITIONAL");
}

std::string_view credit_scheme_token(CreditSchemeKind kind) {
  return kind == CreditSchemeKind::equal ? "EQUAL" : "POSITIONAL";
}

void FieldTaxonomy::add_uda(UdaEntry entry) {
  auto it = uda_index_.find(entry.code);
  if (it != uda_index_.end()) {
    if (uda_[it->second].name != entry.name) {
      throw ValidationError("conflicting names for UDA '" + entry.code + "'");
    }
    return;
  }
  // keep sorted by code
  auto pos = std::lower_bound(uda_.begin(), uda_.end(), entry.code,
                              [](const UdaEntry& e, const std::string& c) { return e.code < c; });
  pos = uda_.insert(pos, std::move(entry));
  uda_index_.clear();
  for (std::size_t i = 0; i < uda_.size(); ++i) uda_index_[uda_[i].code] = i;
}

void FieldTaxonomy::add_sds(SdsEntry entry) {
  if (sds_index_.count(entry.code)) {
    throw ValidationError("duplicate sds_code '" + entry.code + "'");
  }
  if (!uda_index_.count(entry.uda_code)) {
    throw ValidationError("sds '" + entry.code + "' references unknown uda_code '" +
                          entry.uda_code + "'");
  }
  auto pos = std::lower_bound(sds_.begin(), sds_.end(), entry.code,
                              [](const SdsEntry& e, const std::string& c) { return e.code < c; });
  pos = sds_.insert(pos, std::move(entry));
  sds_index_.clear();
  for (std::size_t i = 0; i < sds_.size(); ++i) sds_index_[sds_[i].code] = i;
}

const SdsEntry* FieldTaxonomy::find_sds(std::string_view code) const {
  auto it = sds_index_.find(code);
  return it == sds_index_.end() ? nullptr : &sds_[it->second];
}

const UdaEntry* FieldTaxonomy::find_uda(std::string_view code) const {
  auto it = uda_index_.find(code);
  return it == uda_index_.end() ? nullptr : &uda_[it->second];
}

const SdsEntry& FieldTaxonomy::sds_at(std::string_view code) const {
  if (const SdsEntry* entry = find_sds(code)) return *entry;
  throw ValidationError("unknown sds_code '" + std::string(code) + "'");
}

FieldTaxonomy load_taxonomy(const std::filesystem::path& path) {
  const csv::Table table = csv::read_file(path);
  const std::size_t c_sds = table.require_column("sds_code");
  const std::size_t c_sds_name = table.require_column("sds_name");
  const std::size_t c_uda = table.require_column("uda_code");
  const std::size_t c_uda_name = table.require_column("uda_name");
  const std::size_t c_scheme = table.require_column("credit_scheme");

  FieldTaxonomy taxonomy;
  for (const auto& row : table.rows) {
    taxonomy.add_uda({row[c_uda], row[c_uda_name]});
    taxonomy.add_sds({row[c_sds], row[c_sds_name], row[c_uda],
                      parse_credit_scheme(row[c_scheme])});
  }
  return taxonomy;
}

std::vector<Professor> load_roster(const std::filesystem::path& path,
                                   const FieldTaxonomy& taxonomy) {
  const csv::Table table = csv::read_file(path);
  const std::size_t c_id = table.require_column("professor_id");
  const std::size_t c_uni = table.require_column("university_id");
  const std::size_t c_sds = table.require_column("sds_code");
  const std::size_t c_start = table.require_column("start_date");
  const std::size_t c_end = table.require_column("end_date");

  std::vector<Professor> roster;
  std::unordered_set<std::string> seen;
  roster.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    Professor p;
    p.id = row[c_id];
    p.university_id = row[c_uni];
    p.sds_code = row[c_sds];
    if (p.id.empty()) throw ValidationError(path.string() + ": empty professor_id");
    if (p.university_id.empty()) {
      throw ValidationError("professor '" + p.id + "': empty university_id");
    }
    if (!seen.insert(p.id).second) {
      throw ValidationError("duplicate professor_id '" + p.id + "'");
    }
    if (!taxonomy.find_sds(p.sds_code)) {
      throw ValidationError("professor '" + p.id + "': unknown sds_code '" + p.sds_code + "'");
    }
    p.start_date = parse_date(row[c_start]);
    if (!row[c_end].empty()) {
      p.end_date = parse_date(row[c_end]);
      if (*p.end_date < p.start_date) {
        throw ValidationError("professor '" + p.id + "': start_date after end_date");
      }
    }
    roster.push_back(std::move(p));
  }
  std::sort(roster.begin(), roster.end(),
            [](const Professor& a, const Professor& b) { return a.id < b.id; });
  return roster;
}

std::vector<Publication> load_publications(const std::filesystem::path& publications_path,
                                           const std::filesystem::path& authorships_path,
                                           const std::vector<Professor>& roster) {
  const csv::Table pubs = csv::read_file(publications_path);
  const std::size_t c_pub = pubs.require_column("pub_id");
  const std::size_t c_year = pubs.require_column("year");
  const std::size_t c_cit = pubs.require_column("citations");
  const std::size_t c_cat = pubs.require_column("categories");

  std::vector<Publication> out;
  std::map<std::string, std::size_t, std::less<>> index;
  out.reserve(pubs.rows.size());
  for (const auto& row : pubs.rows) {
    Publication p;
    p.id = row[c_pub];
    if (p.id.empty()) throw ValidationError(publications_path.string() + ": empty pub_id");
    if (index.count(p.id)) throw ValidationError("duplicate pub_id '" + p.id + "'");
    p.year = static_cast<int>(parse_int64(row[c_year], "year of '" + p.id + "'"));
    p.citations = parse_int64(row[c_cit], "citations of '" + p.id + "'");
    if (p.citations < 0) {
      throw ValidationError("publication '" + p.id + "': negative citation count");
    }
    p.categories = csv::split_list(row[c_cat]);
    if (p.categories.empty()) {
      throw ValidationError("publication '" + p.id + "': empty category list");
    }
    for (const auto& cat : p.categories) {
      if (cat.empty()) {
        throw ValidationError("publication '" + p.id + "': blank category in list");
      }
    }
    index.emplace(p.id, out.size());
    out.push_back(std::move(p));
  }

  std::map<std::string, const Professor*, std::less<>> professor_of;
  for (const auto& p : roster) professor_of.emplace(p.id, &p);

  const csv::Table auths = csv::read_file(authorships_path);
  const std::size_t a_pub = auths.require_column("pub_id");
  const std::size_t a_pos = auths.require_column("position");
  const std::size_t a_prof = auths.require_column("professor_id");
  const std::size_t a_uni = auths.require_column("university_id");

  for (const auto& row : auths.rows) {
    auto it = index.find(row[a_pub]);
    if (it == index.end()) {
      throw ValidationError("authorship references unknown pub_id '" + row[a_pub] + "'");
    }
    AuthorSlot slot;
    slot.position = static_cast<int>(
        parse_int64(row[a_pos], "author position in '" + row[a_pub] + "'"));
    if (slot.position < 1) {
      throw ValidationError("publication '" + row[a_pub] + "': author position < 1");
    }
    slot.professor_id = row[a_prof];
    slot.university_id = row[a_uni];
    slot.resolved_university = slot.university_id;
    if (slot.internal()) {
      auto prof = professor_of.find(slot.professor_id);
      if (prof == professor_of.end()) {
        throw ValidationError("authorship of '" + row[a_pub] + "' references professor '" +
                              slot.professor_id + "' absent from the roster");
      }
      if (slot.resolved_university.empty()) {
        slot.resolved_university = prof->second->university_id;
      }
    }
    out[it->second].authors.push_back(std::move(slot));
  }

  for (auto& pub : out) {
    std::sort(pub.authors.begin(), pub.authors.end(),
              [](const AuthorSlot& a, const AuthorSlot& b) { return a.position < b.position; });
    for (std::size_t i = 0; i < pub.authors.size(); ++i) {
      const int expected = static_cast<int>(i) + 1;
      const int got = pub.authors[i].position;
      if (got == expected) continue;
      if (i > 0 && got == pub.authors[i - 1].position) {
        throw ValidationError("publication '" + pub.id + "': duplicate author position " +
                              std::to_string(got));
      }
      throw ValidationError("publication '" + pub.id + "': author positions not contiguous (" +
                            std::to_string(expected) + " missing)");
    }
  }

  std::sort(out.begin(), out.end(),
            [](const Publication& a, const Publication& b) { return a.id < b.id; });
  return out;
}

const Professor* Corpus::find_professor(std::string_view id) const {
  auto it = professor_index_.find(id);
  return it == professor_index_.end() ? nullptr : &roster[it->second];
}

const Publication* Corpus::find_publication(std::string_view id) const {
  auto it = publication_index_.find(id);
  return it == publication_index_.end() ? nullptr : &publications[it->second];
}

std::span<const std::size_t> Corpus::publications_of(std::string_view professor_id) const {
  auto it = authored_.find(professor_id);
  if (it == authored_.end()) return {};
  return it->second;
}

std::vector<std::string> Corpus::university_ids() const {
  std::set<std::string> ids;
  for (const auto& p : roster) ids.insert(p.university_id);
  return {ids.begin(), ids.end()};
}

Corpus make_corpus(FieldTaxonomy taxonomy, std::vector<Professor> roster,
                   std::vector<Publication> publications) {
  Corpus corpus;
  corpus.taxonomy = std::move(taxonomy);
  corpus.roster = std::move(roster);
  corpus.publications = std::move(publications);

  std::sort(corpus.roster.begin(), corpus.roster.end(),
            [](const Professor& a, const Professor& b) { return a.id < b.id; });
  std::sort(corpus.publications.begin(), corpus.publications.end(),
            [](const Publication& a, const Publication& b) { return a.id < b.id; });

  for (std::size_t i = 0; i < corpus.roster.size(); ++i) {
    corpus.professor_index_.emplace(corpus.roster[i].id, i);
  }
  for (std::size_t i = 0; i < corpus.publications.size(); ++i) {
    const Publication& pub = corpus.publications[i];
    corpus.publication_index_.emplace(pub.id, i);
    // one entry per professor even when a byline repeats them
    std::set<std::string_view> seen;
    for (const AuthorSlot& slot : pub.authors) {
      if (slot.internal() && seen.insert(slot.professor_id).second) {
        corpus.authored_[slot.professor_id].push_back(i);
      }
    }
  }
  return corpus;
}

Corpus load_corpus(const CorpusPaths& paths) {
  FieldTaxonomy taxonomy = load_taxonomy(paths.taxonomy);
  std::vector<Professor> roster = load_roster(paths.roster, taxonomy);
  std::vector<Publication> publications =
      load_publications(paths.publications, paths.authorships, roster);
  return make_corpus(std::move(taxonomy), std::move(roster), std::move(publications));
}

void write_taxonomy_csv(const std::filesystem::path& path, const FieldTaxonomy& taxonomy) {
  std::vector<std::vector<std::string>> rows;
  for (const SdsEntry& sds : taxonomy.sds_entries()) {
    const UdaEntry* uda = taxonomy.find_uda(sds.uda_code);
    rows.push_back({sds.code, sds.name, sds.uda_code, uda ? uda->name : "",
                    std::string(credit_scheme_token(sds.credit_scheme))});
  }
  csv::write_file(path, {"sds_code", "sds_name", "uda_code", "uda_name", "credit_scheme"}, rows);
}

void write_roster_csv(const std::filesystem::path& path, std::span<const Professor> roster) {
  std::vector<std::vector<std::string>> rows;
  for (const Professor& p : roster) {
    rows.push_back({p.id, p.university_id, p.sds_code, format_date(p.start_date),
                    p.end_date ? format_date(*p.end_date) : ""});
  }
  csv::write_file(path, {"professor_id", "university_id", "sds_code", "start_date", "end_date"},
                  rows);
}

void write_publications_csv(const std::filesystem::path& path,
                            std::span<const Publication> publications) {
  std::vector<std::vector<std::string>> rows;
  for (const Publication& pub : publications) {
    rows.push_back({pub.id, std::to_string(pub.year), std::to_string(pub.citations),
                    csv::join_list(pub.categories)});
  }
  csv::write_file(path, {"pub_id", "year", "citations", "categories"}, rows);
}

void write_authorships_csv(const std::filesystem::path& path,
                           std::span<const Publication> publications) {
  std::vector<std::vector<std::string>> rows;
  for (const Publication& pub : publications) {
    for (const AuthorSlot& slot : pub.authors) {
      rows.push_back({pub.id, std::to_string(slot.position), slot.professor_id,
                      slot.university_id});
    }
  }
  csv::write_file(path, {"pub_id", "position", "professor_id", "university_id"}, rows);
}

void write_corpus(const std::filesystem::path& dir, const Corpus& corpus) {
  std::filesystem::create_directories(dir);
  write_taxonomy_csv(dir / "taxonomy.csv", corpus.taxonomy);
  write_roster_csv(dir / "roster.csv", corpus.roster);
  write_publications_csv(dir / "publications.csv", corpus.publications);
  write_authorships_csv(dir / "authorships.csv", corpus.publications);
}

double years_active(const Professor& professor, const DateWindow& window) {
  const CalDate lo = std::max(professor.start_date, window.start);
  const CalDate employment_end = professor.end_date ? *professor.end_date : window.end;
  const CalDate hi = std::min(employment_end, window.end);
  if (day_number(hi) < day_number(lo)) {
    throw ComputeError("professor '" + professor.id + "' not active in the window");
  }
  const double years = static_cast<double>(days_inclusive(lo, hi)) / 365.25;
  const double rounded = std::round(years * 100.0) / 100.0;
  if (rounded <= 0.0) {
    throw ComputeError("professor '" + professor.id +
                       "': employment inside the window is too short");
  }
  return rounded;
}

ValidationReport validate_corpus(const Corpus& corpus) {
  ValidationReport report;
  report.professor_count = corpus.roster.size();
  report.publication_count = corpus.publications.size();
  report.university_count = corpus.university_ids().size();

  std::set<std::string_view> populated;
  for (const Professor& p : corpus.roster) populated.insert(p.sds_code);
  report.populated_sds_count = populated.size();

  for (const Professor& p : corpus.roster) {
    if (corpus.publications_of(p.id).empty()) {
      report.warnings.push_back({"professor_without_publications", p.id,
                                 "professor '" + p.id + "' has no publications in the corpus"});
    }
  }
  for (const Publication& pub : corpus.publications) {
    if (pub.authors.empty()) {
      report.warnings.push_back({"publication_without_authors", pub.id,
                                 "publication '" + pub.id + "' has no author slots"});
      continue;
    }
    std::set<std::string_view> internal;
    bool duplicate = false;
    for (const AuthorSlot& slot : pub.authors) {
      if (slot.internal() && !internal.insert(slot.professor_id).second) duplicate = true;
    }
    if (internal.empty()) {
      report.warnings.push_back({"publication_without_roster_author", pub.id,
                                 "publication '" + pub.id + "' has no roster author"});
    }
    if (duplicate) {
      report.warnings.push_back({"duplicate_author_in_byline", pub.id,
                                 "publication '" + pub.id +
                                     "' lists the same professor in several positions"});
    }
  }
  std::sort(report.warnings.begin(), report.warnings.end(),
            [](const ValidationIssue& a, const ValidationIssue& b) {
              return std::tie(a.code, a.subject) < std::tie(b.code, b.subject);
            });
  return report;
}

}  // namespace fssrank
