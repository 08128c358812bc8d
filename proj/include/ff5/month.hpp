#pragma once

#include <compare>
#include <cstdio>
#include <string>

#include "ff5/errors.hpp"

namespace ff5 {

/// Calendar month with whole-month arithmetic. Ordered year-major.
struct YearMonth {
  int year = 0;
  int month = 1;  // 1..12

  static YearMonth from_index(int idx) {
    // floor division so pre-1970-style negative indices still round down
    int y = idx >= 0 ? idx / 12 : -((-idx + 11) / 12);
    return YearMonth{y, idx - y * 12 + 1};
  }

  int index() const { return year * 12 + (month - 1); }

  YearMonth plus_months(int n) const { return from_index(index() + n); }

  auto operator<=>(const YearMonth&) const = default;

  std::string str() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
    return buf;
  }
};

/// a - b in whole calendar months.
inline int months_between(YearMonth a, YearMonth b) {
  return a.index() - b.index();
}

inline YearMonth make_month(int year, int month) {
  if (month < 1 || month > 12)
    throw Error("month out of range 1..12: " + std::to_string(month));
  return YearMonth{year, month};
}

}  // namespace ff5
