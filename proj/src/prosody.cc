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

#include "prosomark/prosody.h"

#include <algorithm>

#include "prosomark/word_classes.h"

namespace prosomark {
namespace {

ToneChoice Choose(std::string_view label, std::optional<RowId> row) {
  return {Contour(label), row};
}

bool TableCarries(const MappingTable& table, const ToneContour& c) {
  const Label wanted = c;
  for (const auto& r : table.rows) {
    for (const auto& s : r.steps) {
      if (s.label == wanted) return true;
    }
  }
  return false;
}

// Words of a token sequence split into their multiword parts, with the
// token each part came from.
struct Part {
  std::string word;
  std::size_t token;
  bool token_end;
};

std::vector<Part> PartsFrom(const std::vector<Token>& tokens, std::size_t at) {
  std::vector<Part> out;
  for (std::size_t i = at; i < tokens.size() && tokens[i].is_word(); ++i) {
    auto parts = Split(tokens[i].normalized, '_');
    for (std::size_t k = 0; k < parts.size(); ++k) {
      out.push_back({parts[k], i, k + 1 == parts.size()});
    }
  }
  return out;
}

}  // namespace

BreakIndex AssignBreakIndex(const BreathGroup& /*group*/, const BreakContext& c) {
  if (c.title_final) return BreakIndex::kBI44;
  if (c.pre_exclamative) return BreakIndex::kBI22;
  if (c.before_quantifier) return BreakIndex::kBI23;
  if (c.sentence_final && c.paragraph_final) return BreakIndex::kBI4;
  if (c.at_punct) return BreakIndex::kBI3;
  if (c.head_end) {
    return c.head_followed_by_dependent ? BreakIndex::kBI33 : BreakIndex::kBI32;
  }
  if (c.enjambed) return BreakIndex::kBI2;
  return BreakIndex::kBI1;
}

// ---------------------------------------------------------------------------

const PovSpan* PovTrack::at(TokenRef t) const {
  for (const auto& s : spans) {
    if (s.contains(t)) return &s;
  }
  return nullptr;
}

ToneContour Downstep(const ToneContour& c, const MappingTable& table) {
  ToneContour out;
  out.lead = Tone::kH;
  out.accent = Accent::kHstar;
  out.downstepped = true;
  out.variant = c.variant;
  if (!out.variant || !TableCarries(table, out)) out.variant = 1;
  return out;
}

std::vector<ToneContour> ApplyDownstep(const std::vector<ToneContour>& contours,
                                       const MappingTable& table) {
  std::vector<ToneContour> out = contours;
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = Downstep(out[i], table);
  return out;
}

// ---------------------------------------------------------------------------

std::string_view ToString(Affect a) {
  switch (a) {
    case Affect::kNeutral: return "neutral";
    case Affect::kSad: return "sad";
    case Affect::kExclaim: return "exclaim";
    case Affect::kExhort: return "exhort";
  }
  return "?";
}

std::optional<Affect> ParseAffect(std::string_view s) {
  for (Affect a : {Affect::kNeutral, Affect::kSad, Affect::kExclaim, Affect::kExhort}) {
    if (ToString(a) == s) return a;
  }
  return std::nullopt;
}

ToneChoice SelectTone(TonePosition position, Relevance relevance, Move move,
                      const std::string& func, DiscRel /*disc_rel*/, const PointOfView& pov,
                      Affect affect, const ToneFlags& f) {
  const bool fg = relevance == Relevance::kForeground;
  if (affect == Affect::kSad) return Choose("L*-L%", RowId::kSad);
  if (affect == Affect::kExhort) return Choose("H*+L-", RowId::kExhortative);
  if (affect == Affect::kExclaim && f.split_exclamative) {
    return Choose("H*+L%", RowId::kSplitExclamative);
  }
  switch (position) {
    case TonePosition::kTitle:
      return Choose("H*-L", RowId::kTitle);
    case TonePosition::kSentenceInitial:
      if (move == Move::kUp && fg) {
        return f.paragraph_boundary ? Choose("H*-H-1", RowId::kUpForegroundParagraph)
                                    : Choose("H*-H", RowId::kUpForeground);
      }
      break;
    case TonePosition::kSentenceInternal:
      if (f.subordinate_marker) return Choose("H*-H-3", RowId::kSubordinateMarker);
      if (f.question && pov.character()) return Choose("H*-H-1", RowId::kSpeechElaboration);
      if (f.resultative) return Choose("H-!L*", RowId::kResultativeInfinitival);
      if (f.subject_split) {
        return fg ? Choose("H-H*-2", RowId::kAdjunctForeground)
                  : Choose("H-H*-4", RowId::kAdjunctBackground);
      }
      if (func == "coord" && fg && move == Move::kUp) {
        return Choose("H*-H-2", RowId::kCoordinateForeground);
      }
      break;
    case TonePosition::kGroupFinal:
      if (pov.character() && affect == Affect::kExclaim) {
        return Choose("H*-H-1", RowId::kSpeechElaboration);
      }
      if (f.head_end) return Choose("L-L%", RowId::kHeadEnd);
      if (f.predicative_end) return Choose("H*-L%-1", RowId::kInternalBoundary);
      if (f.subject_split && !fg) return Choose("H*-L%-2", RowId::kAdjunctBackground);
      return Choose("H*-L%", RowId::kGroupEnd);
  }
  return Choose("H*-L", std::nullopt);
}

ToneChoice SelectTone(const BreathGroup& /*group*/, const ClauseFeatures& feats,
                      const DiscourseNode& node, TonePosition position,
                      const PointOfView& pov, Affect affect, const ToneFlags& flags) {
  return SelectTone(position, feats.relevance.value_or(node.relevance), node.move,
                    feats.func_role.func, feats.disc_rel, pov, affect, flags);
}

// ---------------------------------------------------------------------------

std::string_view ToString(FrozenRole r) {
  switch (r) {
    case FrozenRole::kExhortative: return "exhortative";
    case FrozenRole::kGreeting: return "greeting";
    case FrozenRole::kThanks: return "thanks";
    case FrozenRole::kApology: return "apology";
  }
  return "?";
}

std::optional<FrozenRole> ParseFrozenRole(std::string_view s) {
  for (FrozenRole r : {FrozenRole::kExhortative, FrozenRole::kGreeting, FrozenRole::kThanks,
                       FrozenRole::kApology}) {
    if (ToString(r) == s) return r;
  }
  return std::nullopt;
}

std::vector<ToneContour> FrozenEntry::contours() const {
  std::vector<ToneContour> out;
  for (const auto& s : steps) {
    if (const auto* c = std::get_if<ToneContour>(&s.label)) out.push_back(*c);
  }
  return out;
}

std::vector<ParamEvent> FrozenEntry::params() const {
  std::vector<ParamEvent> out;
  for (const auto& s : steps) out.insert(out.end(), s.events.begin(), s.events.end());
  return out;
}

FrozenTable FrozenTable::Parse(std::string_view text, const MappingTable& table) {
  FrozenTable out;
  for (const auto& [line, content] : ContentLines(text)) {
    auto cols = Split(content, '\t');
    if (cols.size() != 2) throw ParseError("expected pattern<TAB>role", line);
    auto role = ParseFrozenRole(Trim(cols[1]));
    if (!role) throw ParseError("unknown frozen role '" + Trim(cols[1]) + "'", line);
    FrozenEntry e;
    e.role = *role;
    for (const auto& w : SplitWs(ToLower(cols[0]))) {
      if (w == "<address>") {
        e.address_tail = true;
      } else if (e.address_tail) {
        throw ParseError("<address> must end the pattern", line);
      } else {
        e.pattern.push_back(w);
      }
    }
    if (e.pattern.empty()) throw ParseError("empty frozen pattern", line);
    auto add_row = [&](RowId id) {
      const auto& steps = table.row(id).steps;
      e.steps.insert(e.steps.end(), steps.begin(), steps.end());
    };
    switch (e.role) {
      case FrozenRole::kExhortative:
        add_row(RowId::kExhortative);
        if (e.address_tail) add_row(RowId::kExhortativeTail);
        break;
      case FrozenRole::kGreeting: add_row(RowId::kUpForeground); break;
      case FrozenRole::kThanks: add_row(RowId::kInternalForeground); break;
      case FrozenRole::kApology: add_row(RowId::kSad); break;
    }
    out.entries.push_back(std::move(e));
  }
  return out;
}

FrozenTable FrozenTable::Load(const std::string& path, const MappingTable& table) {
  return Parse(ReadFile(path), table);
}

std::optional<FrozenMatch> MatchFrozen(const std::vector<Token>& tokens, std::size_t at,
                                       const FrozenTable& table,
                                       const WordList& address_terms) {
  if (at >= tokens.size() || !tokens[at].is_word()) return std::nullopt;
  const std::vector<Part> parts = PartsFrom(tokens, at);
  std::optional<FrozenMatch> best;
  for (const auto& e : table.entries) {
    const auto n = e.pattern.size();
    if (n > parts.size()) continue;
    bool ok = parts[n - 1].token_end;
    for (std::size_t k = 0; ok && k < n; ++k) ok = parts[k].word == e.pattern[k];
    if (!ok) continue;
    FrozenMatch m;
    m.entry = &e;
    for (std::size_t k = 0; k < n; ++k) {
      if (m.words.empty() || m.words.back() != parts[k].token) m.words.push_back(parts[k].token);
    }
    if (e.address_tail) {
      std::size_t i = parts[n - 1].token + 1;
      while (i < tokens.size() && tokens[i].kind == TokenKind::kComma) ++i;
      if (i >= tokens.size() || !tokens[i].is_word() ||
          !address_terms.Contains(tokens[i].normalized)) {
        continue;
      }
      m.tail = i;
      m.words.push_back(i);
    }
    const std::size_t span = m.words.back() - at;
    if (!best || span > best->words.back() - at) best = m;
  }
  return best;
}

// ---------------------------------------------------------------------------

std::vector<SlowdownMark> MarkQuantifierSlowdown(const BreathGroup& group,
                                                 const Sentence& s,
                                                 const WordList& quantifiers,
                                                 const WordList& floating) {
  std::vector<std::size_t> words;
  for (std::size_t p = group.from; p <= group.to && p < s.tokens.size(); ++p) {
    if (s.tokens[p].is_word()) words.push_back(p);
  }
  std::vector<SlowdownMark> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string& w = s.tokens[words[i]].normalized;
    if (quantifiers.Contains(w) && i + 1 < words.size()) {
      out.push_back({words[i], ParamEvent::Slow(110, 3), true, false});
    } else if (floating.Contains(w) && i > 0 && i + 2 == words.size()) {
      const std::string& prev = s.tokens[words[i - 1]].normalized;
      if (IsAuxiliary(prev) || IsPronoun(prev)) {
        out.push_back({words[i], ParamEvent::Slow(130, 5), false, true});
      }
    }
  }
  return out;
}

std::vector<AffectSpan> FindAffectSpans(const Sentence& s, const TaggedLexicon& affect) {
  std::vector<std::size_t> words;
  for (std::size_t p = 0; p < s.tokens.size(); ++p) {
    if (s.tokens[p].is_word()) words.push_back(p);
  }
  auto affect_of = [&](std::size_t i) -> std::optional<Affect> {
    auto tag = affect.Lookup(s.tokens[words[i]].normalized);
    return tag ? ParseAffect(*tag) : std::nullopt;
  };
  std::vector<AffectSpan> out;
  std::size_t i = 0;
  while (i < words.size()) {
    auto a = affect_of(i);
    if (!a || *a == Affect::kNeutral) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (true) {
      if (j + 1 < words.size() && affect_of(j + 1) == a) {
        ++j;
      } else if (j + 2 < words.size() && IsCoordinator(s.tokens[words[j + 1]].normalized) &&
                 affect_of(j + 2) == a) {
        j += 2;
      } else {
        break;
      }
    }
    if (j + 2 == words.size() && words[j + 1] == words[j] + 1) ++j;
    out.push_back({words[i], words[j], *a});
    i = j + 1;
  }
  return out;
}

}  // namespace prosomark
