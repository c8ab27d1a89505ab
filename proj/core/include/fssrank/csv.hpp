#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fssrank::csv {

// In-memory CSV table. Header row is mandatory; all rows are rectangular.
struct Table {
  std::string origin;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::optional<std::size_t> column(std::string_view name) const;
  // Throws ValidationError naming the file when the column is absent.
  std::size_t require_column(std::string_view name) const;
};

Table parse(std::string_view text, std::string origin = "<string>");
Table read_file(const std::filesystem::path& path);

// Quotes a field only when it contains a comma, quote or newline.
std::string escape(std::string_view field);
void write_file(const std::filesystem::path& path, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows);
std::string render(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows);

// In-field list separator is '|'. Empty field -> empty list.
std::vector<std::string> split_list(std::string_view field);
std::string join_list(const std::vector<std::string>& items);

}  // namespace fssrank::csv
