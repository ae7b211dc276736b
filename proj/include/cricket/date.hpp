#pragma once

#include <compare>
#include <cstdio>
#include <string>
#include <string_view>

#include "cricket/util.hpp"

namespace cricket {

// Calendar date, ISO-8601 text form. No timezone arithmetic.
struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  auto operator<=>(const Date&) const = default;

  static bool valid(int y, int m, int d) {
    if (y < 1800 || m < 1 || m > 12 || d < 1) return false;
    static constexpr int days[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    int dim = days[m - 1];
    bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
    if (m == 2 && leap) dim = 29;
    return d <= dim;
  }

  std::string to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
    return buf;
  }
};

inline Date parse_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-')
    throw error("invalid ISO-8601 date: '" + std::string(s) + "'");
  Date d;
  d.year = static_cast<int>(parse_int(s.substr(0, 4), "date year"));
  d.month = static_cast<int>(parse_int(s.substr(5, 2), "date month"));
  d.day = static_cast<int>(parse_int(s.substr(8, 2), "date day"));
  if (!Date::valid(d.year, d.month, d.day))
    throw error("date out of range: '" + std::string(s) + "'");
  return d;
}

}  // namespace cricket
