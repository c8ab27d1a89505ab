#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fssrank/corpus.hpp"

namespace testutil {

// Scratch directory removed on destruction.
struct TempDir {
  std::filesystem::path path;

  TempDir() {
    std::random_device rd;
    std::ostringstream name;
    name << "fssrank_test_" << std::hex << rd() << rd();
    path = std::filesystem::temp_directory_path() / name.str();
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path file(const std::string& name, const std::string& content) const {
    const auto p = path / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
  }
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline fssrank::FieldTaxonomy small_taxonomy() {
  fssrank::FieldTaxonomy taxonomy;
  taxonomy.add_uda({"UDA1", "Mathematics and computer sciences"});
  taxonomy.add_uda({"UDA6", "Medicine"});
  taxonomy.add_sds({"MAT/02", "Algebra", "UDA1", fssrank::CreditSchemeKind::equal});
  taxonomy.add_sds({"MED/01", "Medical statistics", "UDA6", fssrank::CreditSchemeKind::positional});
  return taxonomy;
}

struct SlotSpec {
  std::string professor_id;  // empty = external
  std::string university_id;
};

inline fssrank::Publication make_pub(std::string id, int year, std::int64_t citations,
                                     std::vector<std::string> categories,
                                     const std::vector<SlotSpec>& slots) {
  fssrank::Publication pub;
  pub.id = std::move(id);
  pub.year = year;
  pub.citations = citations;
  pub.categories = std::move(categories);
  int position = 0;
  for (const SlotSpec& spec : slots) {
    fssrank::AuthorSlot slot;
    slot.position = ++position;
    slot.professor_id = spec.professor_id;
    slot.university_id = spec.university_id;
    slot.resolved_university = spec.university_id;
    pub.authors.push_back(std::move(slot));
  }
  return pub;
}

inline fssrank::Professor make_prof(std::string id, std::string university, std::string sds,
                                    int start_year = 2000) {
  fssrank::Professor p;
  p.id = std::move(id);
  p.university_id = std::move(university);
  p.sds_code = std::move(sds);
  p.start_date = fssrank::make_date(start_year, 1, 1);
  return p;
}

inline const fssrank::DateWindow kWindow{fssrank::make_date(2009, 1, 1),
                                         fssrank::make_date(2013, 12, 31)};

}  // namespace testutil
