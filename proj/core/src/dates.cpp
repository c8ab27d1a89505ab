#include "fssrank/dates.hpp"

#include <charconv>

#include "fssrank/errors.hpp"

namespace fssrank {

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ValidationError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

CalDate make_date(int year, unsigned month, unsigned day) {
  return CalDate{std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}};
}

CalDate parse_date(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
    throw ValidationError("invalid date '" + std::string(text) + "', expected YYYY-MM-DD");
  }
  const int y = parse_int(text.substr(0, 4), "year");
  const int m = parse_int(text.substr(5, 2), "month");
  const int d = parse_int(text.substr(8, 2), "day");
  const CalDate date = make_date(y, static_cast<unsigned>(m), static_cast<unsigned>(d));
  if (!date.ok()) {
    throw ValidationError("invalid calendar date '" + std::string(text) + "'");
  }
  return date;
}

std::string format_date(const CalDate& date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
  return buf;
}

std::int64_t day_number(const CalDate& date) {
  return std::chrono::sys_days(date).time_since_epoch().count();
}

std::int64_t days_inclusive(const CalDate& a, const CalDate& b) {
  return day_number(b) - day_number(a) + 1;
}

}  // namespace fssrank
