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

#include "prosomark/ingest.h"

#include <algorithm>
#include <array>

#include "prosomark/annotations.h"
#include "prosomark/word_classes.h"

namespace prosomark {
namespace {

constexpr std::array<std::string_view, 4> kOpenQuotes = {"\"", "'", "“",
                                                         "‘"};
constexpr std::array<std::string_view, 2> kOpenBrackets = {"(", "["};
constexpr std::array<std::string_view, 13> kTrailingPunct = {
    ",", ".", ";", ":", "!", "?", "\"", "'", ")", "]", "”", "’",
    "—"};

const std::array<std::string_view, 8> kAbbreviations = {
    "mr.", "mrs.", "dr.", "st.", "ms.", "vs.", "etc.", "e.g."};

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool IsQuote(std::string_view s) {
  return s == "\"" || s == "'" || s == "“" || s == "”" ||
         s == "‘" || s == "’";
}

TokenKind KindOf(std::string_view s) {
  if (s == ",") return TokenKind::kComma;
  if (s == "." || s == "!" || s == "?" || s == ":" || s == "...") {
    return TokenKind::kTerminalPunct;
  }
  if (IsQuote(s)) return TokenKind::kQuoteMark;
  if (s == "—" || s == "–") return TokenKind::kOtherPunct;
  for (unsigned char c : s) {
    if (std::isalnum(c) || c >= 0x80 || c == '_') return TokenKind::kWord;
  }
  return TokenKind::kOtherPunct;
}

// Splits a whitespace-free chunk into leading punctuation, a core and
// trailing punctuation.
std::vector<std::string> SplitChunk(std::string_view chunk) {
  std::vector<std::string> head, tail;
  bool progress = true;
  while (!chunk.empty() && progress) {
    progress = false;
    for (auto p : kOpenQuotes) {
      if (StartsWith(chunk, p) && chunk.size() >= p.size()) {
        head.emplace_back(p);
        chunk.remove_prefix(p.size());
        progress = true;
        break;
      }
    }
    if (progress) continue;
    for (auto p : kOpenBrackets) {
      if (StartsWith(chunk, p)) {
        head.emplace_back(p);
        chunk.remove_prefix(p.size());
        progress = true;
        break;
      }
    }
  }
  const std::string lowered = ToLower(chunk);
  const bool abbreviation =
      std::find(kAbbreviations.begin(), kAbbreviations.end(), lowered) !=
      kAbbreviations.end();
  progress = !abbreviation;
  while (!chunk.empty() && progress) {
    progress = false;
    if (EndsWith(chunk, "...") && chunk.size() >= 3) {
      tail.emplace_back("...");
      chunk.remove_suffix(3);
      progress = true;
      continue;
    }
    for (auto p : kTrailingPunct) {
      if (EndsWith(chunk, p)) {
        // A trailing apostrophe is a closing single quote only when this
        // chunk opened one; otherwise it belongs to the word.
        if ((p == "’" || p == "'") && head.empty()) continue;
        tail.emplace_back(p);
        chunk.remove_suffix(p.size());
        progress = true;
        break;
      }
    }
  }
  std::vector<std::string> out = std::move(head);
  if (!chunk.empty()) out.emplace_back(chunk);
  out.insert(out.end(), tail.rbegin(), tail.rend());
  return out;
}

std::vector<std::string> Parts(const Token& t) {
  return Split(t.normalized, '_');
}

bool SameLine(const std::string& ws) {
  return ws.find('\n') == std::string::npos;
}

std::vector<Token> MergeMultiwords(std::vector<Token> raw,
                                   const MultiwordLexicon& lexicon) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < raw.size()) {
    bool merged = false;
    if (raw[i].is_word()) {
      for (const auto& entry : lexicon.entries()) {
        std::size_t matched = 0;  // entry words consumed
        std::size_t j = i;
        while (j < raw.size() && matched < entry.size()) {
          if (!raw[j].is_word() || (j > i && !SameLine(raw[j].leading_ws)) ||
              (j > i && raw[j].leading_ws.empty())) {
            break;
          }
          auto parts = Parts(raw[j]);
          if (matched + parts.size() > entry.size() ||
              !std::equal(parts.begin(), parts.end(),
                          entry.begin() + matched)) {
            break;
          }
          matched += parts.size();
          ++j;
        }
        if (matched == entry.size() && j - i >= 2) {
          Token t = raw[i];
          for (std::size_t k = i + 1; k < j; ++k) {
            t.surface += raw[k].leading_ws + raw[k].surface;
          }
          t.normalized = Join(entry, "_");
          t.trailing_ws = raw[j - 1].trailing_ws;
          out.push_back(std::move(t));
          i = j;
          merged = true;
          break;
        }
      }
    }
    if (!merged) out.push_back(std::move(raw[i++]));
  }
  return out;
}

bool ParagraphBreak(const std::string& ws) {
  std::size_t first = ws.find('\n');
  return first != std::string::npos &&
         ws.find('\n', first + 1) != std::string::npos;
}

Terminal TerminalOf(std::string_view s) {
  if (s == "?") return Terminal::kQuestion;
  if (s == "!") return Terminal::kExclamation;
  if (s == ":") return Terminal::kColon;
  return Terminal::kPeriod;
}

bool IsOpeningQuote(std::string_view s, bool inside) {
  if (s == "“" || s == "‘") return true;
  if (s == "”" || s == "’") return false;
  return !inside;
}

std::optional<std::size_t> NextWord(const Sentence& s, std::size_t from) {
  for (std::size_t i = from; i < s.tokens.size(); ++i) {
    if (s.tokens[i].is_word()) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> PrevWord(const Sentence& s, std::size_t before) {
  for (std::size_t i = before; i-- > 0;) {
    if (s.tokens[i].is_word()) return i;
  }
  return std::nullopt;
}

// Word count of the comma-delimited segment starting after position `from`.
std::size_t SegmentWords(const Sentence& s, std::size_t from) {
  std::size_t n = 0;
  for (std::size_t i = from; i < s.tokens.size(); ++i) {
    if (s.tokens[i].kind == TokenKind::kComma ||
        s.tokens[i].kind == TokenKind::kTerminalPunct) {
      break;
    }
    if (s.tokens[i].is_word()) ++n;
  }
  return n;
}

bool InList(const Sentence& s, std::size_t index) {
  // Segments split by commas; a list is a run of >=3 short segments whose
  // last one opens with "and"/"or".
  std::vector<std::size_t> commas;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    if (s.tokens[i].kind == TokenKind::kComma) commas.push_back(i);
  }
  auto pos = std::find(commas.begin(), commas.end(), index);
  if (pos == commas.end() || commas.size() < 2) return false;
  for (std::size_t k = 0; k + 1 < commas.size(); ++k) {
    // Candidate run: comma k, comma k+1 with a final and/or segment.
    std::size_t mid = SegmentWords(s, commas[k] + 1);
    auto after = NextWord(s, commas[k + 1] + 1);
    if (!after) continue;
    const std::string& conj = s.tokens[*after].normalized;
    if ((conj == "and" || conj == "or") && mid >= 1 && mid <= 3 &&
        SegmentWords(s, commas[k + 1] + 1) <= 4) {
      if (index == commas[k] || index == commas[k + 1]) return true;
    }
  }
  return false;
}

}  // namespace

const char* ToString(CommaClass c) {
  switch (c) {
    case CommaClass::kAppositive: return "appositive";
    case CommaClass::kList: return "list";
    case CommaClass::kClauseBoundary: return "clause_boundary";
    case CommaClass::kVocative: return "vocative";
    case CommaClass::kParenthetical: return "parenthetical";
    case CommaClass::kOther: return "other";
  }
  return "other";
}

std::size_t Token::word_count() const {
  if (!is_word()) return 0;
  return static_cast<std::size_t>(
             std::count(normalized.begin(), normalized.end(), '_')) +
         1;
}

std::size_t Sentence::word_count() const {
  return static_cast<std::size_t>(std::count_if(
      tokens.begin(), tokens.end(), [](const Token& t) { return t.is_word(); }));
}

CommaLexicon CommaLexicon::Defaults() {
  CommaLexicon lex;
  lex.vocatives = WordList{"baby",  "sir",   "madam", "friend", "friends",
                           "dear",  "darling", "mother", "father", "sister",
                           "brother", "children", "lady", "gentlemen"};
  lex.parentheticals =
      WordList{"therefore", "however", "indeed", "moreover", "furthermore",
               "perhaps",   "of_course", "nevertheless", "besides",
               "consequently", "thus", "meanwhile"};
  lex.adverbials =
      WordList{"now",   "then",      "long_ago", "at_last",  "by_this_means",
               "once",  "once_upon_a_time", "suddenly", "finally", "meanwhile",
               "therefore", "however", "today", "yesterday", "soon"};
  return lex;
}

std::vector<Token> Tokenize(std::string_view text,
                            const MultiwordLexicon& multiwords) {
  std::vector<Token> raw;
  std::string pending_ws;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (IsSpace(text[pos])) {
      pending_ws += text[pos++];
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !IsSpace(text[end])) ++end;
    bool first = true;
    for (std::string& piece : SplitChunk(text.substr(pos, end - pos))) {
      Token t;
      t.kind = KindOf(piece);
      t.normalized = ToLower(piece);
      t.surface = std::move(piece);
      if (first) {
        t.leading_ws = std::move(pending_ws);
        pending_ws.clear();
        first = false;
      }
      raw.push_back(std::move(t));
    }
    pos = end;
  }
  if (!raw.empty()) raw.back().trailing_ws = pending_ws;

  std::vector<Token> tokens = MergeMultiwords(std::move(raw), multiwords);
  std::size_t words = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    tokens[i].index = i;
    if (tokens[i].is_word()) tokens[i].word_index = words++;
  }
  return tokens;
}

std::string Detokenize(const std::vector<Token>& tokens) {
  std::string out;
  for (const Token& t : tokens) out += t.leading_ws + t.surface + t.trailing_ws;
  return out;
}

Document SplitDocument(const std::vector<Token>& tokens, std::string_view raw,
                       TitleMode title_mode) {
  (void)raw;  // whitespace is carried by the tokens themselves
  Document doc;
  if (tokens.empty()) return doc;

  // The first line: tokens up to the first newline.
  std::size_t first_line_end = tokens.size();
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    if (tokens[i].leading_ws.find('\n') != std::string::npos) {
      first_line_end = i;
      break;
    }
  }
  bool title = false;
  if (title_mode == TitleMode::kForce) {
    title = true;
  } else if (title_mode == TitleMode::kAuto &&
             first_line_end < tokens.size()) {
    const Token& last = tokens[first_line_end - 1];
    bool has_word = std::any_of(tokens.begin(),
                                tokens.begin() + first_line_end,
                                [](const Token& t) { return t.is_word(); });
    title = has_word && last.kind != TokenKind::kTerminalPunct &&
            !(last.kind == TokenKind::kQuoteMark);
  }

  std::size_t paragraph = 0;
  std::vector<Sentence> raw_sentences;
  Sentence current;
  bool inside_quote = false;
  bool terminated = false;
  auto flush = [&]() {
    if (!current.tokens.empty()) raw_sentences.push_back(std::move(current));
    current = Sentence{};
    terminated = false;
  };

  std::size_t start = 0;
  if (title) {
    Sentence t;
    t.is_title = true;
    t.paragraph_index = 0;
    t.tokens.assign(tokens.begin(), tokens.begin() + first_line_end);
    for (const Token& tok : t.tokens) {
      if (tok.kind == TokenKind::kTerminalPunct) {
        t.terminal = TerminalOf(tok.surface);
      }
    }
    raw_sentences.push_back(std::move(t));
    start = first_line_end;
    paragraph = 1;
  }

  for (std::size_t i = start; i < tokens.size(); ++i) {
    const Token& tok = tokens[i];
    if (i > start && ParagraphBreak(tok.leading_ws)) {
      flush();
      ++paragraph;
      inside_quote = false;
    }
    if (terminated) {
      bool closing_quote = tok.kind == TokenKind::kQuoteMark &&
                           !IsOpeningQuote(tok.surface, inside_quote);
      bool more_punct = tok.kind == TokenKind::kTerminalPunct ||
                        tok.surface == ")" || tok.surface == "]";
      if (!closing_quote && !more_punct) flush();
    }
    if (current.tokens.empty()) current.paragraph_index = paragraph;
    if (tok.kind == TokenKind::kQuoteMark) {
      inside_quote = IsOpeningQuote(tok.surface, inside_quote);
    }
    current.tokens.push_back(tok);
    if (tok.kind == TokenKind::kTerminalPunct) {
      current.terminal = TerminalOf(tok.surface);
      terminated = true;
    }
  }
  flush();

  // Sentences must contain a word: fold punctuation-only fragments into a
  // neighbour.
  for (auto& s : raw_sentences) {
    if (s.word_count() == 0 && !doc.sentences.empty() &&
        !doc.sentences.back().is_title) {
      auto& prev = doc.sentences.back().tokens;
      prev.insert(prev.end(), s.tokens.begin(), s.tokens.end());
      continue;
    }
    if (!doc.sentences.empty() && doc.sentences.back().word_count() == 0) {
      auto carry = std::move(doc.sentences.back().tokens);
      doc.sentences.pop_back();
      s.tokens.insert(s.tokens.begin(), carry.begin(), carry.end());
    }
    doc.sentences.push_back(std::move(s));
  }
  if (!doc.sentences.empty() && doc.sentences.back().word_count() == 0) {
    doc.sentences.pop_back();
  }
  // Renumber paragraphs densely.
  std::size_t next = 0;
  std::optional<std::size_t> last;
  for (auto& s : doc.sentences) {
    if (!last || s.paragraph_index != *last) {
      last = s.paragraph_index;
      s.paragraph_index = next++;
    } else {
      s.paragraph_index = next - 1;
    }
  }
  doc.paragraph_count = next;
  return doc;
}

CommaClass ClassifyComma(const Sentence& s, std::size_t index,
                         const AnnotationSet* ann, const CommaLexicon& lex) {
  auto next = NextWord(s, index + 1);
  auto prev = PrevWord(s, index);
  if (!next || !prev) return CommaClass::kOther;
  const std::string& nw = s.tokens[*next].normalized;
  const std::string& pw = s.tokens[*prev].normalized;

  // "..., therefore, ..." : both commas around a parenthetical adverb.
  if (lex.parentheticals.Contains(nw)) {
    for (std::size_t i = *next + 1; i < s.tokens.size(); ++i) {
      if (s.tokens[i].kind == TokenKind::kComma) return CommaClass::kParenthetical;
      if (s.tokens[i].is_word()) break;
    }
  }
  if (lex.parentheticals.Contains(pw)) {
    auto before = PrevWord(s, *prev);
    for (std::size_t i = *prev; before && i-- > *before;) {
      if (s.tokens[i].kind == TokenKind::kComma) return CommaClass::kParenthetical;
    }
  }

  // Sentence-initial adverbial set off by a comma.
  std::vector<std::string> lead;
  for (std::size_t i = 0; i < index; ++i) {
    if (s.tokens[i].is_word()) lead.push_back(s.tokens[i].normalized);
  }
  if (!lead.empty() && lead.size() <= 3 &&
      lex.adverbials.Contains(Join(lead, "_"))) {
    return CommaClass::kParenthetical;
  }

  // Address terms at a clause edge.
  auto after_next = NextWord(s, *next + 1);
  if (lex.vocatives.Contains(nw) && !after_next) return CommaClass::kVocative;
  if (lex.vocatives.Contains(pw) && lead.size() == 1) {
    return CommaClass::kVocative;
  }

  if (InList(s, index)) return CommaClass::kList;

  if (ann != nullptr && s.tokens[*next].word_index &&
      IsClauseStart(*ann, *s.tokens[*next].word_index)) {
    return CommaClass::kClauseBoundary;
  }
  if (IsCoordinator(nw) || IsSubordinator(nw) || IsRelativePronoun(nw) ||
      IsComplementizer(nw) || LooksLikeVerb(nw)) {
    return CommaClass::kClauseBoundary;
  }
  if (IsDeterminer(nw) && !IsFunctionWord(pw) && SegmentWords(s, index + 1) <= 6) {
    return CommaClass::kAppositive;
  }
  if (IsPronoun(nw) && after_next &&
      (LooksLikeVerb(s.tokens[*after_next].normalized))) {
    return CommaClass::kClauseBoundary;
  }
  return CommaClass::kOther;
}

std::optional<std::string> PhonException(const Token& word,
                                         const PhonLexicon& lexicon) {
  if (!word.is_word()) return std::nullopt;
  return lexicon.Lookup(word.normalized);
}

void ApplyPhonExceptions(Document& doc, const PhonLexicon& lexicon) {
  for (auto& s : doc.sentences) {
    for (auto& t : s.tokens) t.phon_override = PhonException(t, lexicon);
  }
}

std::vector<Token> AllTokens(const Document& doc) {
  std::vector<Token> out;
  for (const auto& s : doc.sentences) {
    out.insert(out.end(), s.tokens.begin(), s.tokens.end());
  }
  return out;
}

}  // namespace prosomark
