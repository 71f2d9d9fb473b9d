// Copyright 2026 The autexcl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Tokenizing helpers for the line-oriented file formats. Internal.

#ifndef AUTEXCL_SRC_TEXT_H_
#define AUTEXCL_SRC_TEXT_H_

#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "autexcl/arith.h"
#include "autexcl/errors.h"

namespace autexcl::text {

struct Line {
  int number;
  std::string_view content;  // comment stripped, trimmed
};

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Non-empty lines with '#' comments removed.
inline std::vector<Line> lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    raw = trim(raw);
    if (!raw.empty()) out.push_back({number, raw});
  }
  return out;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// key=value words; a bare word or a repeated key is a parse error.
inline std::map<std::string, std::string, std::less<>> key_values(
    const std::vector<std::string_view>& ws, std::size_t from, int line) {
  std::map<std::string, std::string, std::less<>> kv;
  for (std::size_t i = from; i < ws.size(); ++i) {
    const auto eq = ws[i].find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ParseError(line, "expected key=value, got '" + std::string(ws[i]) +
                                 "'");
    }
    std::string key(ws[i].substr(0, eq));
    if (!kv.emplace(key, std::string(ws[i].substr(eq + 1))).second) {
      throw ParseError(line, "duplicate key '" + key + "'");
    }
  }
  return kv;
}

inline std::int64_t parse_int(std::string_view s, int line,
                              std::string_view what) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(line, "invalid integer for " + std::string(what) + ": '" +
                               std::string(s) + "'");
  }
  return v;
}

inline BigInt parse_big(std::string_view s, int line, std::string_view what) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  BigInt v;
  const std::string str(s);
  const bool digits = !str.empty() &&
      str.find_first_not_of("0123456789", str[0] == '-' ? 1 : 0) ==
          std::string::npos && str != "-";
  if (!digits || v.set_str(str, 10) != 0) {
    throw ParseError(line, "invalid integer for " + std::string(what) + ": '" +
                               str + "'");
  }
  return v;
}

inline const std::string& require(
    const std::map<std::string, std::string, std::less<>>& kv,
    std::string_view key, int line) {
  auto it = kv.find(key);
  if (it == kv.end()) {
    throw ParseError(line, "missing " + std::string(key) + "=");
  }
  return it->second;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace autexcl::text

#endif  // AUTEXCL_SRC_TEXT_H_
