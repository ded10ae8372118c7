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

#include <algorithm>
#include <set>

#include "prosomark/annotations.h"
#include "prosomark/word_classes.h"

namespace prosomark {
namespace {

// A coordinator opens a clause only if a verb follows before the next
// punctuation mark.
bool OpensClause(const Sentence& s, std::size_t pos) {
  for (std::size_t i = pos + 1; i < s.tokens.size(); ++i) {
    const Token& t = s.tokens[i];
    if (!t.is_word()) return false;
    if (LooksLikeVerb(t.normalized)) return true;
  }
  return false;
}

Tense GuessTense(const std::vector<std::string>& words) {
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    const std::string& w = words[i];
    if ((w == "has" || w == "have" || w == "had") &&
        (EndsWith(words[i + 1], "ed") ||
         (IrregularVerbLemma(words[i + 1]) && !IsAuxiliary(words[i + 1]) &&
          words[i + 1] != "had"))) {
      return Tense::kPerf;
    }
  }
  for (const std::string& w : words) {
    if (w == "will" || w == "shall") return Tense::kPres;
    if (EndsWith(w, "ed") && w.size() > 3) return Tense::kPast;
    if (w == "was" || w == "were" || w == "had" || w == "did") return Tense::kPast;
    if (auto lemma = IrregularVerbLemma(w)) {
      if (w != "is" && w != "are" && w != "am" && w != "has" && w != "says" &&
          w != "been") {
        return Tense::kPast;
      }
    }
  }
  return Tense::kPres;
}

std::string GuessPred(const std::vector<std::string>& words) {
  for (const std::string& w : words) {
    if (LooksLikeVerb(w) && !IsAuxiliary(w)) return VerbLemma(w);
  }
  for (const std::string& w : words) {
    if (IsAuxiliary(w)) return VerbLemma(w);
  }
  for (const std::string& w : words) {
    if (!IsFunctionWord(w)) return w;
  }
  return words.empty() ? "_" : words.front();
}

bool HeadNounCandidate(const Sentence& s, std::size_t pos,
                       const CommaLexicon& lex) {
  const std::string& w = s.tokens[pos].normalized;
  if (IsFunctionWord(w) || LooksLikeVerb(w) || lex.adverbials.Contains(w) ||
      lex.parentheticals.Contains(w) || w.size() < 3) {
    return false;
  }
  if (!std::all_of(w.begin(), w.end(), [](char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
      })) {
    return false;
  }
  if (pos + 1 >= s.tokens.size()) return true;
  const Token& next = s.tokens[pos + 1];
  return !next.is_word() || IsFunctionWord(next.normalized) ||
         LooksLikeVerb(next.normalized);
}

}  // namespace

AnnotationSet ShallowAnalyze(const Document& doc, const ShallowConfig& config) {
  AnnotationSet ann;
  int clause_no = 0;
  // (word index, clause) for every head-noun occurrence.
  std::vector<std::pair<std::string, int>> occurrences;

  for (const Sentence& s : doc.sentences) {
    if (s.is_title) continue;
    std::vector<std::size_t> starts;  // token positions
    std::optional<std::size_t> last_word;
    bool after_boundary_comma = false;
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      const Token& t = s.tokens[i];
      if (t.kind == TokenKind::kComma) {
        after_boundary_comma =
            ClassifyComma(s, i, nullptr, config.comma_lexicon) ==
            CommaClass::kClauseBoundary;
        continue;
      }
      if (!t.is_word()) continue;
      bool start = !last_word;
      if (!start) {
        const std::string& w = t.normalized;
        start = after_boundary_comma ||
                (IsCoordinator(w) && OpensClause(s, i)) ||
                IsSubordinator(w) || IsRelativePronoun(w);
        // Never leave a one-word clause behind a conjunction.
        if (start && !starts.empty() && starts.back() == *last_word &&
            !after_boundary_comma) {
          start = false;
        }
      }
      if (start) starts.push_back(i);
      after_boundary_comma = false;
      last_word = i;
    }

    for (std::size_t k = 0; k < starts.size(); ++k) {
      const std::size_t begin = starts[k];
      const std::size_t end = k + 1 < starts.size() ? starts[k + 1] : s.tokens.size();
      std::vector<std::string> words;
      std::optional<std::size_t> first_wi, last_wi;
      for (std::size_t i = begin; i < end; ++i) {
        const Token& t = s.tokens[i];
        if (!t.is_word()) continue;
        words.push_back(t.normalized);
        if (!first_wi) first_wi = *t.word_index;
        last_wi = *t.word_index;
      }
      if (words.empty()) continue;

      ClauseFeatures c;
      c.clause_no = ++clause_no;
      const std::string& opener = words.front();
      if (k == 0) {
        c.func_role = {"main", "prop"};
      } else if (IsCoordinator(opener)) {
        c.func_role = {"coord", "prop"};
      } else if (IsRelativePronoun(opener)) {
        c.func_role = {"rel", "prop"};
      } else if (IsSubordinator(opener)) {
        c.func_role = {"sub", "prop"};
      } else {
        c.func_role = {"main", "prop"};
      }
      c.tense = GuessTense(words);
      c.change = (c.tense == Tense::kPast || c.tense == Tense::kPerf)
                     ? Change::kCulminated
                     : Change::kNull;
      c.pred = GuessPred(words);
      for (const std::string& w : words) {
        auto m = config.markers.find(w);
        if (m != config.markers.end()) {
          c.disc_rel = m->second;
          break;
        }
        if (!IsCoordinator(w)) break;  // markers are clause-initial
      }
      c.relevance = ClassifyRelevance(c, config.relevance);
      ann.clause_spans[c.clause_no] = {*first_wi, *last_wi};
      ann.clauses.push_back(c);

      for (std::size_t i = begin; i < end; ++i) {
        if (s.tokens[i].is_word() &&
            HeadNounCandidate(s, i, config.comma_lexicon)) {
          occurrences.emplace_back(s.tokens[i].normalized, c.clause_no);
        }
      }
    }
  }

  std::map<std::string, int> counts;
  for (const auto& [w, c] : occurrences) ++counts[w];
  std::map<std::string, std::string> ids;
  for (const auto& [w, c] : occurrences) {
    if (counts[w] < 2) continue;
    auto it = ids.find(w);
    if (it == ids.end()) {
      it = ids.emplace(w, "id" + std::to_string(ids.size() + 1)).first;
    }
    TopicRecord t;
    t.clause_no = c;
    t.pred = w;
    t.semantic_id = it->second;
    t.morph = {"3", "nil", EndsWith(w, "s") ? "plur" : "sing"};
    t.role = "theme";
    ann.topics.push_back(std::move(t));
  }
  ann.topics = AssignTopicTypes(std::move(ann.topics));
  ann.nodes = DeriveMoves(ann.clauses, ann.topics, SentenceIds(doc, ann));
  return ann;
}

}  // namespace prosomark
