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

#ifndef PROSOMARK_LEXICON_H_
#define PROSOMARK_LEXICON_H_

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace prosomark {

// Raised for malformed input files. Carries the 1-based line number when
// the problem can be pinned to a line (0 otherwise).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                          what
                                    : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

std::string ToLower(std::string_view s);
std::string Trim(std::string_view s);
std::vector<std::string> SplitWs(std::string_view s);
std::vector<std::string> Split(std::string_view s, char sep);
std::string Join(const std::vector<std::string>& parts, std::string_view sep);
bool StartsWith(std::string_view s, std::string_view prefix);
bool EndsWith(std::string_view s, std::string_view suffix);

// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string ReadFile(const std::string& path);

// Lines with comments ('#' to end of line) and surrounding blanks removed.
// Returned pairs are (1-based line number, content); empty lines skipped.
std::vector<std::pair<int, std::string>> ContentLines(std::string_view text);

// A case-insensitive set of words, one per line in its file form.
class WordList {
 public:
  WordList() = default;
  WordList(std::initializer_list<std::string> words);
  static WordList Parse(std::string_view text);
  static WordList Load(const std::string& path);

  void Add(std::string_view word);
  bool Contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }
  const std::set<std::string>& words() const { return words_; }

 private:
  std::set<std::string> words_;
};

// word<TAB>tag lines. Keys are case-folded.
class TaggedLexicon {
 public:
  static TaggedLexicon Parse(std::string_view text);
  static TaggedLexicon Load(const std::string& path);

  void Add(std::string_view key, std::string_view tag);
  std::optional<std::string> Lookup(std::string_view key) const;
  const std::map<std::string, std::string>& entries() const {
    return entries_;
  }

 private:
  std::map<std::string, std::string> entries_;
};

// Phonetic exceptions: `word<TAB>phonetic`. The phonetic string is kept
// verbatim (it is case-sensitive synthesizer input).
using PhonLexicon = TaggedLexicon;

// Multiword expressions, one per line, words space separated.
class MultiwordLexicon {
 public:
  static MultiwordLexicon Parse(std::string_view text);
  static MultiwordLexicon Load(const std::string& path);

  void Add(std::string_view entry);
  // Entries as lowercased word sequences, longest first.
  const std::vector<std::vector<std::string>>& entries() const {
    return entries_;
  }
  std::size_t max_length() const { return max_length_; }

 private:
  std::vector<std::vector<std::string>> entries_;
  std::size_t max_length_ = 0;
};

}  // namespace prosomark

#endif  // PROSOMARK_LEXICON_H_
