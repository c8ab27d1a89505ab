#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

namespace fssrank {

using CalDate = std::chrono::year_month_day;

CalDate make_date(int year, unsigned month, unsigned day);

/// Parses a strict ISO-8601 calendar date (YYYY-MM-DD). Throws ValidationError.
CalDate parse_date(std::string_view text);

std::string format_date(const CalDate& date);

/// Day count since the civil epoch; usable for interval arithmetic.
std::int64_t day_number(const CalDate& date);

/// Inclusive day count of [a, b]; requires a <= b.
std::int64_t days_inclusive(const CalDate& a, const CalDate& b);

/// Closed observation period [start, end].
struct DateWindow {
  CalDate start;
  CalDate end;
};

}  // namespace fssrank
