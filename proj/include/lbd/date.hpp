#pragma once

#include <compare>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace lbd {

// Calendar date, ISO-8601 (YYYY-MM-DD) on disk.
struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  auto operator<=>(const Date&) const = default;

  std::string to_string() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
    return buf;
  }

  static std::optional<Date> parse(std::string_view s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    auto digits = [&](int from, int to, int& out) {
      out = 0;
      for (int i = from; i < to; ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
        out = out * 10 + (s[i] - '0');
      }
      return true;
    };
    Date d;
    if (!digits(0, 4, d.year) || !digits(5, 7, d.month) || !digits(8, 10, d.day))
      return std::nullopt;
    static constexpr int kDays[13] = {0, 31, 29, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > kDays[d.month])
      return std::nullopt;
    return d;
  }
};

}  // namespace lbd
