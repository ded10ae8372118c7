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

#include <optional>

#include "prosomark/prosody.h"
#include "prosomark/word_classes.h"

namespace prosomark {
namespace {

constexpr std::size_t kVerbWindow = 4;

bool IsCommVerb(std::string_view w, const WordList& comm_verbs) {
  if (comm_verbs.Contains(w)) return true;
  return comm_verbs.Contains(VerbLemma(w));
}

struct WordAt {
  TokenRef ref;
  const Token* token;
};

// Word tokens of the document in order.
std::vector<WordAt> DocumentWords(const Document& doc) {
  std::vector<WordAt> out;
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const auto& toks = doc.sentences[s].tokens;
    for (std::size_t t = 0; t < toks.size(); ++t) {
      if (toks[t].is_word()) out.push_back({{s, t}, &toks[t]});
    }
  }
  return out;
}

// Subject next to the communication verb at words[v]: an inverted pronoun
// ("said he") or the nearest noun before the verb.
std::string SpeakerAround(const std::vector<WordAt>& words, std::size_t v) {
  if (v + 1 < words.size() && IsPronoun(words[v + 1].token->normalized) &&
      words[v + 1].ref.sentence == words[v].ref.sentence) {
    return words[v + 1].token->normalized;
  }
  for (std::size_t k = v; k-- > 0;) {
    if (words[k].ref.sentence != words[v].ref.sentence) break;
    const std::string& w = words[k].token->normalized;
    if (IsAuxiliary(w) || IsCoordinator(w)) continue;
    if (IsFunctionWord(w) && !IsPronoun(w)) break;
    return w;
  }
  return "anon";
}

std::optional<std::string> SpeakerFor(const AnnotationSet& ann,
                                      const std::vector<WordAt>& words,
                                      TokenRef open, TokenRef close,
                                      const WordList& comm_verbs) {
  auto check = [&](std::size_t i) -> std::optional<std::string> {
    const WordAt& w = words[i];
    bool comm = IsCommVerb(w.token->normalized, comm_verbs);
    if (!comm && w.token->word_index) {
      if (auto c = ClauseAt(ann, *w.token->word_index)) {
        const ClauseFeatures* f = FindClause(ann, *c);
        comm = f && comm_verbs.Contains(f->pred) && IsFormOf(w.token->normalized, f->pred);
      }
    }
    if (comm) return SpeakerAround(words, i);
    return std::nullopt;
  };
  // Words just before the opening quote, nearest first.
  std::size_t first_inside = words.size();
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].ref > open) {
      first_inside = i;
      break;
    }
  }
  for (std::size_t k = 0; k < kVerbWindow && k < first_inside; ++k) {
    if (auto s = check(first_inside - 1 - k)) return s;
  }
  // Words just after the closing quote.
  std::size_t after = words.size();
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].ref > close) {
      after = i;
      break;
    }
  }
  for (std::size_t k = 0; k < kVerbWindow && after + k < words.size(); ++k) {
    if (auto s = check(after + k)) return s;
  }
  return std::nullopt;
}

enum class QuoteDir { kOpen, kClose, kStray };

QuoteDir Direction(const std::vector<Token>& toks, std::size_t t, bool inside) {
  const std::string& q = toks[t].surface;
  if (q == "“" || q == "‘") return QuoteDir::kOpen;
  if (q == "”" || q == "’") return inside ? QuoteDir::kClose : QuoteDir::kStray;
  if (inside) return QuoteDir::kClose;
  // A straight quote glued to the preceding token and not to a following
  // word closes a quote that was never opened.
  const bool glued_left = t > 0 && toks[t].leading_ws.empty();
  const bool glued_right = t + 1 < toks.size() && toks[t + 1].is_word() &&
                           toks[t + 1].leading_ws.empty();
  if (glued_left && !glued_right) return QuoteDir::kStray;
  return QuoteDir::kOpen;
}

}  // namespace

PovTrack TrackPointOfView(const Document& doc, const AnnotationSet& ann,
                          const WordList& comm_verbs) {
  PovTrack track;
  const std::vector<WordAt> words = DocumentWords(doc);
  bool inside = false;
  TokenRef span_start{0, 0};
  TokenRef last{0, 0};
  bool any = false;
  std::size_t open_sentence = 0;

  auto push = [&](bool character, TokenRef from, TokenRef to) {
    PovSpan span;
    span.from = from;
    span.to = to;
    if (character) {
      span.pov.holder = PointOfView::Holder::kCharacter;
      span.pov.quote_depth = 1;
      span.pov.opened_at = open_sentence;
      span.pov.speaker =
          SpeakerFor(ann, words, from, to, comm_verbs).value_or("anon");
    } else {
      span.pov.opened_at = from.sentence;
    }
    track.spans.push_back(span);
  };

  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const Sentence& sent = doc.sentences[s];
    const bool paragraph_end = s + 1 == doc.sentences.size() ||
                               doc.sentences[s + 1].paragraph_index != sent.paragraph_index;
    for (std::size_t t = 0; t < sent.tokens.size(); ++t) {
      const TokenRef here{s, t};
      if (sent.tokens[t].kind == TokenKind::kQuoteMark) {
        switch (Direction(sent.tokens, t, inside)) {
          case QuoteDir::kOpen:
            if (any && here > span_start) push(false, span_start, last);
            span_start = here;
            open_sentence = s;
            inside = true;
            break;
          case QuoteDir::kClose:
            push(true, span_start, here);
            inside = false;
            span_start = {s, t + 1};
            break;
          case QuoteDir::kStray:
            track.diagnostics.push_back("closing quote without an opening quote in sentence " +
                                        std::to_string(s));
            break;
        }
      }
      last = here;
      any = true;
    }
    if (inside && paragraph_end) {
      track.diagnostics.push_back("quote opened in sentence " +
                                  std::to_string(open_sentence) +
                                  " is not closed by the end of its paragraph");
      push(true, span_start, last);
      inside = false;
      span_start = {s + 1, 0};
    }
  }
  if (any && span_start <= last) push(false, span_start, last);
  return track;
}

}  // namespace prosomark
