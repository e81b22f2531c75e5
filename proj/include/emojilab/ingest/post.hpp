// Copyright 2026 The emojilab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "emojilab/error.hpp"

namespace emojilab {

enum class Label { kPositive, kNegative, kUnlabeled };

inline const char* to_string(Label label) {
  switch (label) {
    case Label::kPositive:
      return "pos";
    case Label::kNegative:
      return "neg";
    case Label::kUnlabeled:
      break;
  }
  return "null";
}

/// UTC instant with millisecond resolution.
using Timestamp = std::chrono::sys_time<std::chrono::milliseconds>;

/// One microblog message. `text` is the normalized form of `raw_text` and
/// `emojis` the canonical emoji tokens of `text` in order.
struct Post {
  std::string id;
  std::string raw_text;
  std::string text;
  Label label = Label::kUnlabeled;
  std::string lang;
  std::optional<Timestamp> timestamp;
  std::string corpus;
  std::vector<std::string> emojis;

  bool labeled() const noexcept { return label != Label::kUnlabeled; }

  friend bool operator==(const Post&, const Post&) = default;
};

// RFC 3339 timestamps ------------------------------------------------------

namespace detail {

// Howard Hinnant's days_from_civil / civil_from_days.
constexpr std::int64_t days_from_civil(std::int64_t y, unsigned m,
                                       unsigned d) noexcept {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const auto yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

struct Civil {
  std::int64_t year;
  unsigned month;
  unsigned day;
};

constexpr Civil civil_from_days(std::int64_t z) noexcept {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const auto doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp < 10 ? mp + 3 : mp - 9;
  return {y + (m <= 2), m, d};
}

inline bool read_digits(std::string_view s, std::size_t& pos, std::size_t n,
                        int& out) {
  if (pos + n > s.size()) return false;
  int v = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const char c = s[pos + i];
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  pos += n;
  return true;
}

}  // namespace detail

/// Parses "YYYY-MM-DDTHH:MM:SS[.fff...](Z|+HH:MM|-HH:MM)". Fractional
/// digits beyond milliseconds are truncated. Returns nullopt on bad syntax.
inline std::optional<Timestamp> parse_rfc3339(std::string_view s) {
  std::size_t pos = 0;
  int year, month, day, hour, minute, second;
  auto expect = [&](char c) {
    if (pos < s.size() && (s[pos] == c || (c == 'T' && (s[pos] == 't' ||
                                                         s[pos] == ' ')))) {
      ++pos;
      return true;
    }
    return false;
  };
  if (!detail::read_digits(s, pos, 4, year) || !expect('-') ||
      !detail::read_digits(s, pos, 2, month) || !expect('-') ||
      !detail::read_digits(s, pos, 2, day) || !expect('T') ||
      !detail::read_digits(s, pos, 2, hour) || !expect(':') ||
      !detail::read_digits(s, pos, 2, minute) || !expect(':') ||
      !detail::read_digits(s, pos, 2, second)) {
    return std::nullopt;
  }
  if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 ||
      minute > 59 || second > 60) {
    return std::nullopt;
  }
  int millis = 0;
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    int scale = 100;
    std::size_t digits = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      millis += (s[pos] - '0') * scale;
      scale /= 10;
      ++pos;
      ++digits;
    }
    if (digits == 0) return std::nullopt;
  }
  int offset_minutes = 0;
  if (pos < s.size() && (s[pos] == 'Z' || s[pos] == 'z')) {
    ++pos;
  } else if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    const int sign = s[pos] == '+' ? 1 : -1;
    ++pos;
    int oh, om;
    if (!detail::read_digits(s, pos, 2, oh) || !expect(':') ||
        !detail::read_digits(s, pos, 2, om)) {
      return std::nullopt;
    }
    offset_minutes = sign * (oh * 60 + om);
  } else {
    return std::nullopt;
  }
  if (pos != s.size()) return std::nullopt;
  const std::int64_t days = detail::days_from_civil(
      year, static_cast<unsigned>(month), static_cast<unsigned>(day));
  const std::int64_t secs = days * 86400 + hour * 3600 + minute * 60 +
                            second - offset_minutes * 60;
  return Timestamp{std::chrono::milliseconds{secs * 1000 + millis}};
}

/// UTC form, "Z" suffix, milliseconds only when non-zero.
inline std::string format_rfc3339(Timestamp t) {
  const std::int64_t ms = t.time_since_epoch().count();
  std::int64_t secs = ms >= 0 ? ms / 1000 : (ms - 999) / 1000;
  const auto millis = static_cast<int>(ms - secs * 1000);
  std::int64_t days = secs >= 0 ? secs / 86400 : (secs - 86399) / 86400;
  const auto sod = static_cast<int>(secs - days * 86400);
  const auto c = detail::civil_from_days(days);
  char buf[40];
  if (millis != 0) {
    std::snprintf(buf, sizeof buf, "%04lld-%02u-%02uT%02d:%02d:%02d.%03dZ",
                  static_cast<long long>(c.year), c.month, c.day, sod / 3600,
                  (sod / 60) % 60, sod % 60, millis);
  } else {
    std::snprintf(buf, sizeof buf, "%04lld-%02u-%02uT%02d:%02d:%02dZ",
                  static_cast<long long>(c.year), c.month, c.day, sod / 3600,
                  (sod / 60) % 60, sod % 60);
  }
  return buf;
}

/// Calendar month index (year * 12 + month - 1) of a timestamp.
inline std::int64_t month_key(Timestamp t) {
  const std::int64_t ms = t.time_since_epoch().count();
  const std::int64_t secs = ms >= 0 ? ms / 1000 : (ms - 999) / 1000;
  const std::int64_t days = secs >= 0 ? secs / 86400 : (secs - 86399) / 86400;
  const auto c = detail::civil_from_days(days);
  return c.year * 12 + static_cast<std::int64_t>(c.month) - 1;
}

/// Calendar quarter index (year * 4 + quarter - 1).
inline std::int64_t quarter_key(Timestamp t) {
  const std::int64_t m = month_key(t);
  return (m >= 0 ? m : m - 2) / 3;
}

}  // namespace emojilab
