#include "fssrank/csv.hpp"

#include <fstream>
#include <sstream>

#include "fssrank/errors.hpp"

namespace fssrank::csv {

namespace {

[[noreturn]] void malformed(const std::string& origin, std::size_t line, const std::string& what) {
  throw ValidationError(origin + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

std::optional<std::size_t> Table::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Table::require_column(std::string_view name) const {
  if (auto idx = column(name)) return *idx;
  throw ValidationError(origin + ": missing column '" + std::string(name) + "'");
}

Table parse(std::string_view text, std::string origin) {
  Table table;
  table.origin = std::move(origin);

  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool in_record = false;  // false between records; blank lines are skipped
  std::size_t line = 1;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
  };
  auto end_record = [&] {
    end_field();
    if (table.header.empty()) {
      table.header = std::move(record);
    } else {
      if (record.size() != table.header.size()) {
        malformed(table.origin, line,
                  "expected " + std::to_string(table.header.size()) + " fields, got " +
                      std::to_string(record.size()));
      }
      table.rows.push_back(std::move(record));
    }
    record.clear();
    in_record = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty()) malformed(table.origin, line, "quote inside unquoted field");
        quoted = true;
        in_record = true;
        break;
      case ',':
        end_field();
        in_record = true;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;  // swallowed by the \n case
        [[fallthrough]];
      case '\n':
        if (in_record) end_record();
        ++line;
        break;
      default:
        field.push_back(c);
        in_record = true;
    }
  }
  if (quoted) malformed(table.origin, line, "unterminated quoted field");
  if (in_record) end_record();

  if (table.header.empty()) {
    throw ValidationError(table.origin + ": missing header row");
  }
  return table;
}

Table read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

std::string escape(std::string_view field) {
  const bool needs_quotes =
      field.find_first_of(",\"\n\r") != std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string render(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto emit = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out.push_back(',');
      out += escape(fields[i]);
    }
    out.push_back('\n');
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out;
}

void write_file(const std::filesystem::path& path, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write file: " + path.string());
  }
  out << render(header, rows);
  if (!out) {
    throw IoError("write failed: " + path.string());
  }
}

std::vector<std::string> split_list(std::string_view field) {
  std::vector<std::string> items;
  if (field.empty()) return items;
  std::size_t start = 0;
  while (true) {
    const std::size_t sep = field.find('|', start);
    items.emplace_back(field.substr(start, sep - start));
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  return items;
}

std::string join_list(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out.push_back('|');
    out += items[i];
  }
  return out;
}

}  // namespace fssrank::csv
