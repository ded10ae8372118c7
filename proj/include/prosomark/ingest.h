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

#ifndef PROSOMARK_INGEST_H_
#define PROSOMARK_INGEST_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prosomark/lexicon.h"

namespace prosomark {

struct AnnotationSet;

enum class TokenKind { kWord, kComma, kTerminalPunct, kQuoteMark, kOtherPunct };

struct Token {
  std::string surface;     // exact source bytes; multiwords keep inner spaces
  std::string normalized;  // lowercased, multiword parts joined by '_'
  std::size_t index = 0;   // position in the document token list
  TokenKind kind = TokenKind::kWord;
  std::string leading_ws;   // whitespace between the previous token and this
  std::string trailing_ws;  // only set on the final token of a text
  std::optional<std::size_t> word_index;  // position among word tokens
  std::optional<std::string> phon_override;

  bool is_word() const { return kind == TokenKind::kWord; }
  // Number of source words merged into this token.
  std::size_t word_count() const;
};

enum class Terminal { kPeriod, kQuestion, kExclamation, kColon, kNone };

struct Sentence {
  std::vector<Token> tokens;
  Terminal terminal = Terminal::kNone;
  bool is_title = false;
  std::size_t paragraph_index = 0;

  std::size_t word_count() const;
};

struct Document {
  std::vector<Sentence> sentences;
  std::size_t paragraph_count = 0;
};

enum class TitleMode { kAuto, kForce, kOff };

enum class CommaClass {
  kAppositive,
  kList,
  kClauseBoundary,
  kVocative,
  kParenthetical,
  kOther
};

const char* ToString(CommaClass c);

// Word lists behind the lexical comma heuristics.
struct CommaLexicon {
  WordList vocatives;       // address terms: baby, sir, friend, ...
  WordList parentheticals;  // therefore, however, indeed, ...
  WordList adverbials;      // sentence-initial adverbials: now, long_ago, ...

  static CommaLexicon Defaults();
};

// Splits text into word and punctuation tokens, merging known multiwords.
// Leading/trailing whitespace is recorded so that Detokenize round-trips.
std::vector<Token> Tokenize(std::string_view text,
                            const MultiwordLexicon& multiwords);

std::string Detokenize(const std::vector<Token>& tokens);

Document SplitDocument(const std::vector<Token>& tokens, std::string_view raw,
                       TitleMode title_mode = TitleMode::kAuto);

// `index` is a position within sentence.tokens and must name a comma.
CommaClass ClassifyComma(const Sentence& sentence, std::size_t index,
                         const AnnotationSet* ann,
                         const CommaLexicon& lexicon = CommaLexicon::Defaults());

std::optional<std::string> PhonException(const Token& word,
                                         const PhonLexicon& lexicon);

// Fills Token::phon_override for every word found in the lexicon.
void ApplyPhonExceptions(Document& doc, const PhonLexicon& lexicon);

// Convenience: all tokens of the document in order.
std::vector<Token> AllTokens(const Document& doc);

}  // namespace prosomark

#endif  // PROSOMARK_INGEST_H_
