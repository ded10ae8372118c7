// Copyright (c) 2026 The prosomark Authors
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

#include "prosomark/lexicon.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace prosomark {

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (static_cast<unsigned char>(c) < 0x80) {
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  return out;
}

std::string Trim(std::string_view s) {
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> SplitWs(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

std::vector<std::string> Split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      break;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::string Join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

std::string ReadFile(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::vector<std::pair<int, std::string>> ContentLines(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  int line_no = 0;
  for (const std::string& raw : Split(text, '\n')) {
    ++line_no;
    std::string_view line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::string trimmed = Trim(line);
    if (!trimmed.empty()) out.emplace_back(line_no, std::move(trimmed));
  }
  return out;
}

WordList::WordList(std::initializer_list<std::string> words) {
  for (const auto& w : words) Add(w);
}

WordList WordList::Parse(std::string_view text) {
  WordList list;
  for (const auto& [line_no, line] : ContentLines(text)) {
    // Multiword entries are stored underscore-joined, matching
    // Token::normalized.
    list.Add(Join(SplitWs(line), "_"));
  }
  return list;
}

WordList WordList::Load(const std::string& path) {
  return Parse(ReadFile(path));
}

void WordList::Add(std::string_view word) { words_.insert(ToLower(word)); }

bool WordList::Contains(std::string_view word) const {
  return words_.count(ToLower(word)) > 0;
}

TaggedLexicon TaggedLexicon::Parse(std::string_view text) {
  TaggedLexicon lex;
  for (const auto& [line_no, line] : ContentLines(text)) {
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("expected <key><TAB><value>", line_no);
    }
    std::string key = Trim(line.substr(0, tab));
    std::string value = Trim(line.substr(tab + 1));
    if (key.empty() || value.empty()) {
      throw ParseError("empty key or value", line_no);
    }
    lex.Add(Join(SplitWs(key), "_"), value);
  }
  return lex;
}

TaggedLexicon TaggedLexicon::Load(const std::string& path) {
  return Parse(ReadFile(path));
}

void TaggedLexicon::Add(std::string_view key, std::string_view tag) {
  entries_[ToLower(key)] = std::string(tag);
}

std::optional<std::string> TaggedLexicon::Lookup(std::string_view key) const {
  auto it = entries_.find(ToLower(key));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

MultiwordLexicon MultiwordLexicon::Parse(std::string_view text) {
  MultiwordLexicon lex;
  for (const auto& [line_no, line] : ContentLines(text)) lex.Add(line);
  return lex;
}

MultiwordLexicon MultiwordLexicon::Load(const std::string& path) {
  return Parse(ReadFile(path));
}

void MultiwordLexicon::Add(std::string_view entry) {
  std::vector<std::string> words;
  for (const auto& w : SplitWs(ToLower(entry))) {
    for (auto& part : Split(w, '_')) {
      if (!part.empty()) words.push_back(part);
    }
  }
  if (words.size() < 2) return;
  max_length_ = std::max(max_length_, words.size());
  entries_.push_back(std::move(words));
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const auto& a, const auto& b) {
                     return a.size() > b.size();
                   });
}

}  // namespace prosomark
