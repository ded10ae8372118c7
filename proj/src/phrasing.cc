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

#include "prosomark/phrasing.h"

#include <algorithm>
#include <map>
#include <optional>

#include "prosomark/word_classes.h"

namespace prosomark {
namespace {

std::vector<std::size_t> WordPositions(const Sentence& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    if (s.tokens[i].is_word()) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> PrevWordPos(const Sentence& s, std::size_t at) {
  for (std::size_t i = at; i-- > 0;) {
    if (s.tokens[i].is_word()) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> NextWordPos(const Sentence& s, std::size_t at,
                                       std::size_t limit) {
  for (std::size_t i = at + 1; i <= limit && i < s.tokens.size(); ++i) {
    if (s.tokens[i].is_word()) return i;
  }
  return std::nullopt;
}

bool IsWhComplement(std::string_view w) {
  return w == "what" || w == "how" || w == "why" || w == "where";
}

Trigger FuncTrigger(const std::string& func) {
  if (func == "sub" || func == "adj") return Trigger::kSubordinate;
  if (func == "xcomp") return Trigger::kInfinitival;
  if (func == "comp") return Trigger::kComplement;
  if (func == "rel") return Trigger::kRelative;
  return Trigger::kCoordinate;
}

// Split-eligible clause starting at this word, if any.
std::optional<Trigger> ClauseTrigger(const Sentence& s, std::size_t pos,
                                     const AnnotationSet& ann,
                                     const PhrasingConfig& config) {
  const auto& wi = s.tokens[pos].word_index;
  if (!wi) return std::nullopt;
  for (const auto& [no, span] : ann.clause_spans) {
    if (span.from != *wi) continue;
    const ClauseFeatures* c = FindClause(ann, no);
    if (c && config.clause_split_funcs.count(c->func_role.func)) {
      return FuncTrigger(c->func_role.func);
    }
  }
  return std::nullopt;
}

struct Boundary {
  std::size_t k = 0;  // index into the word list; boundary before word k
  Trigger trigger = Trigger::kPunctuation;
  bool forced = false;  // quote marks
};

// Punctuation between word k-1 and word k.
struct Gap {
  bool boundary = false;
  bool forced = false;
  std::optional<CommaClass> comma;
};

Gap InspectGap(const Sentence& s, std::size_t left, std::size_t right,
               const AnnotationSet& ann, const CommaLexicon& lex) {
  Gap g;
  for (std::size_t i = left + 1; i < right; ++i) {
    switch (s.tokens[i].kind) {
      case TokenKind::kQuoteMark:
        g.boundary = g.forced = true;
        break;
      case TokenKind::kComma: {
        CommaClass c = ClassifyComma(s, i, &ann, lex);
        if (!g.comma || *g.comma == CommaClass::kOther) g.comma = c;
        if (c != CommaClass::kOther) g.boundary = true;
        break;
      }
      case TokenKind::kTerminalPunct:
      case TokenKind::kOtherPunct:
        g.boundary = true;
        break;
      case TokenKind::kWord:
        break;
    }
  }
  return g;
}

bool Exempt(const Sentence& s, const std::vector<std::size_t>& words,
            std::size_t first_k, std::size_t last_k, const std::vector<Gap>& gaps,
            const CommaLexicon& lex) {
  auto is = [](const std::optional<CommaClass>& c, CommaClass want) {
    return c && *c == want;
  };
  const Gap* before = first_k > 0 ? &gaps[first_k] : nullptr;
  const Gap* after = last_k + 1 < words.size() ? &gaps[last_k + 1] : nullptr;
  if (first_k == 0 && lex.adverbials.Contains(s.tokens[words[0]].normalized)) {
    return true;
  }
  for (const Gap* g : {before, after}) {
    if (g == nullptr) continue;
    if (is(g->comma, CommaClass::kParenthetical) || is(g->comma, CommaClass::kVocative)) {
      return true;
    }
  }
  if (before && is(before->comma, CommaClass::kAppositive)) return true;
  return false;
}

void ReSplit(const Sentence& s, const AnnotationSet& ann,
             const std::vector<std::size_t>& words, std::size_t lo, std::size_t hi,
             const PhrasingConfig& config, std::vector<Boundary>& out) {
  if (hi - lo + 1 <= config.max_len) return;
  std::map<std::size_t, std::size_t> k_of;
  for (std::size_t k = lo; k <= hi; ++k) k_of[words[k]] = k;

  std::optional<Boundary> best;
  std::size_t best_imbalance = 0;
  for (const TriggerPoint& t : FindTriggers(s, ann, words[lo], words[hi], config)) {
    const std::size_t k = k_of.at(t.at);
    const std::size_t left = k - lo;
    const std::size_t right = hi - k + 1;
    if (left < config.min_len || right < config.min_len) continue;
    const std::size_t imbalance = left > right ? left - right : right - left;
    if (!best || t.trigger < best->trigger ||
        (t.trigger == best->trigger && imbalance < best_imbalance)) {
      best = Boundary{k, t.trigger, false};
      best_imbalance = imbalance;
    }
  }
  if (!best) return;
  out.push_back(*best);
  ReSplit(s, ann, words, lo, best->k - 1, config, out);
  ReSplit(s, ann, words, best->k, hi, config, out);
}

}  // namespace

std::string_view ToString(Trigger t) {
  switch (t) {
    case Trigger::kSentenceStart: return "start";
    case Trigger::kPunctuation: return "punctuation";
    case Trigger::kCoordinate: return "coordinate";
    case Trigger::kSubordinate: return "subordinate";
    case Trigger::kInfinitival: return "infinitival";
    case Trigger::kComplement: return "complement";
    case Trigger::kRelative: return "relative";
    case Trigger::kSubjectVerb: return "subject-verb";
    case Trigger::kAdverbial: return "adverbial";
    case Trigger::kComplementAdjunct: return "complement-adjunct";
  }
  return "?";
}

std::string_view ToString(Junction j) {
  return j == Junction::kEndStopped ? "end_stopped" : "enjambed";
}

bool CanBreakBefore(const Sentence& s, std::size_t at) {
  auto prev = PrevWordPos(s, at);
  if (!prev) return false;
  const std::string& w = s.tokens[*prev].normalized;
  return !IsDeterminer(w) && !IsPreposition(w);
}

std::vector<TriggerPoint> FindTriggers(const Sentence& s, const AnnotationSet& ann,
                                       std::size_t from, std::size_t to,
                                       const PhrasingConfig& config) {
  std::map<std::size_t, Trigger> found;
  auto add = [&](std::size_t at, Trigger t) {
    if (at <= from || at > to || !s.tokens[at].is_word()) return;
    auto it = found.find(at);
    if (it == found.end() || t < it->second) found[at] = t;
  };

  std::size_t words_seen = 0;
  bool verb_seen = false;
  for (std::size_t p = from; p <= to; ++p) {
    if (!s.tokens[p].is_word()) continue;
    const std::string& w = s.tokens[p].normalized;
    auto next = NextWordPos(s, p, to);
    auto prev = PrevWordPos(s, p);

    if (IsCoordinator(w)) add(p, Trigger::kCoordinate);
    if (IsSubordinator(w) && next) add(p, Trigger::kSubordinate);
    if (w == "to" && next && !IsFunctionWord(s.tokens[*next].normalized)) {
      add(p, Trigger::kInfinitival);
    }
    if ((IsComplementizer(w) || IsWhComplement(w)) && next) {
      add(p, Trigger::kComplement);
    }
    if (IsRelativePronoun(w)) {
      if (prev && *prev > from && IsPreposition(s.tokens[*prev].normalized)) {
        add(*prev, Trigger::kRelative);
      } else {
        add(p, Trigger::kRelative);
      }
    }
    if (auto ct = ClauseTrigger(s, p, ann, config)) add(p, *ct);

    const bool verb = LooksLikeVerb(w);
    if (verb && !verb_seen && words_seen >= config.max_subj) {
      add(p, Trigger::kSubjectVerb);
    }
    if (IsPreposition(w) && verb_seen && prev && !IsFunctionWord(s.tokens[*prev].normalized)) {
      add(p, Trigger::kComplementAdjunct);
    }
    verb_seen = verb_seen || verb;
    ++words_seen;
  }

  std::vector<TriggerPoint> out;
  for (const auto& [at, t] : found) {
    if (CanBreakBefore(s, at)) out.push_back({at, t});
  }
  return out;
}

std::vector<BreathGroup> Segment(const Sentence& s, const AnnotationSet& ann,
                                 const PhrasingConfig& config) {
  const std::vector<std::size_t> words = WordPositions(s);
  if (words.empty()) return {};
  const std::size_t n = words.size();

  // gaps[k] describes the punctuation before word k.
  std::vector<Gap> gaps(n);
  for (std::size_t k = 1; k < n; ++k) {
    gaps[k] = InspectGap(s, words[k - 1], words[k], ann, config.comma_lexicon);
  }

  // (1) punctuation, suppressing groups shorter than min_len.
  std::vector<bool> cut(n, false);
  for (std::size_t k = 1; k < n; ++k) cut[k] = gaps[k].boundary;
  for (bool changed = true; changed;) {
    changed = false;
    std::size_t start = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (k < n && !cut[k]) continue;
      const std::size_t len = k - start;
      if (len < config.min_len &&
          !Exempt(s, words, start, k - 1, gaps, config.comma_lexicon)) {
        const bool can_after = k < n && !gaps[k].forced;
        const bool can_before = start > 0 && !gaps[start].forced;
        if (start == 0 && can_after) {
          cut[k] = false;
          changed = true;
        } else if (can_before) {
          cut[start] = false;
          changed = true;
        } else if (can_after) {
          cut[k] = false;
          changed = true;
        }
        if (changed) break;
      }
      start = k;
    }
  }

  std::vector<Boundary> bounds;
  std::vector<std::pair<std::size_t, std::size_t>> punct_groups;
  {
    std::size_t start = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (k < n && !cut[k]) continue;
      punct_groups.emplace_back(start, k - 1);
      if (k < n) bounds.push_back({k, Trigger::kPunctuation, gaps[k].forced});
      start = k;
    }
  }

  // (2) re-split long groups at the strongest internal trigger.
  for (const auto& [lo, hi] : punct_groups) ReSplit(s, ann, words, lo, hi, config, bounds);

  // (3) clause starts, checked against the punctuation groups only.
  for (const auto& [lo, hi] : punct_groups) {
    for (std::size_t k = lo + 1; k <= hi; ++k) {
      auto ct = ClauseTrigger(s, words[k], ann, config);
      if (!ct || !CanBreakBefore(s, words[k])) continue;
      if (k - lo < config.min_len || hi - k + 1 < config.min_len) continue;
      bounds.push_back({k, *ct, false});
    }
  }

  // (4) after a sentence-initial adverbial phrase.
  const Token& first = s.tokens[words[0]];
  if (n > 1 && first.word_count() > 1 &&
      config.comma_lexicon.adverbials.Contains(first.normalized)) {
    bounds.push_back({1, Trigger::kAdverbial, false});
  }

  std::map<std::size_t, Trigger> by_k;
  for (const auto& b : bounds) {
    auto it = by_k.find(b.k);
    if (it == by_k.end() || b.trigger < it->second) by_k[b.k] = b.trigger;
  }

  std::vector<BreathGroup> groups;
  std::size_t start = 0;
  Trigger trig = Trigger::kSentenceStart;
  auto flush = [&](std::size_t end_k) {
    BreathGroup g;
    g.from = words[start];
    g.to = words[end_k];
    g.trigger = trig;
    if (auto wi = s.tokens[g.from].word_index) {
      g.clause_no = ClauseAt(ann, *wi).value_or(0);
    }
    groups.push_back(g);
  };
  for (const auto& [k, t] : by_k) {
    flush(k - 1);
    start = k;
    trig = t;
  }
  flush(n - 1);

  for (std::size_t i = 0; i < groups.size(); ++i) {
    const BreathGroup* next = i + 1 < groups.size() ? &groups[i + 1] : nullptr;
    groups[i].junction = ClassifyJunction(groups[i], next, s, &ann, config.comma_lexicon);
    groups[i].head_index = MarkHeads(groups[i], s, ann).head;
  }
  return groups;
}

Junction ClassifyJunction(const BreathGroup& group, const BreathGroup* next,
                          const Sentence& s, const AnnotationSet* ann,
                          const CommaLexicon& lex) {
  if (next == nullptr) return Junction::kEndStopped;
  for (std::size_t i = group.to + 1; i < next->from; ++i) {
    switch (s.tokens[i].kind) {
      case TokenKind::kComma:
        if (ClassifyComma(s, i, ann, lex) != CommaClass::kOther) {
          return Junction::kEndStopped;
        }
        break;
      case TokenKind::kWord:
        break;
      default:
        return Junction::kEndStopped;
    }
  }
  return Junction::kEnjambed;
}

HeadMark MarkHeads(const BreathGroup& group, const Sentence& s, const AnnotationSet& ann) {
  HeadMark mark;
  std::vector<std::size_t> words;
  for (std::size_t p = group.from; p <= group.to; ++p) {
    if (s.tokens[p].is_word()) words.push_back(p);
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string& w = s.tokens[words[i]].normalized;
    const bool last = i + 1 == words.size();
    // Group-final function words stand alone ("said this", "said he").
    const bool demoted =
        IsCoordinator(w) || IsSubordinator(w) || w == "to" ||
        (!last && (IsDeterminer(w) || IsComplementizer(w) || IsRelativePronoun(w) ||
                   IsAuxiliary(w) || IsPreposition(w) || IsPronoun(w)));
    if (demoted) mark.demoted.push_back(words[i]);
  }
  auto is_demoted = [&](std::size_t p) {
    return std::find(mark.demoted.begin(), mark.demoted.end(), p) != mark.demoted.end();
  };
  for (std::size_t i = words.size(); i-- > 0;) {
    if (!is_demoted(words[i])) {
      mark.head = words[i];
      return mark;
    }
  }
  // Every word is a function word: fall back to the clause predicate, then
  // to the last word.
  mark.head = words.back();
  if (const ClauseFeatures* c = FindClause(ann, group.clause_no)) {
    for (std::size_t p : words) {
      if (IsFormOf(s.tokens[p].normalized, c->pred)) mark.head = p;
    }
  }
  mark.demoted.erase(std::remove(mark.demoted.begin(), mark.demoted.end(), mark.head),
                     mark.demoted.end());
  return mark;
}

std::vector<SentenceGroups> SegmentDocument(const Document& doc, const AnnotationSet& ann,
                                            const PhrasingConfig& config) {
  std::vector<SentenceGroups> out;
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    const Sentence& s = doc.sentences[i];
    SentenceGroups sg{i, {}};
    if (s.is_title) {
      auto words = WordPositions(s);
      if (!words.empty()) {
        BreathGroup g;
        g.from = words.front();
        g.to = words.back();
        g.head_index = MarkHeads(g, s, ann).head;
        sg.groups.push_back(g);
      }
    } else {
      sg.groups = Segment(s, ann, config);
    }
    out.push_back(std::move(sg));
  }
  return out;
}

std::string RenderGroups(const Document& doc, const std::vector<SentenceGroups>& groups) {
  std::vector<std::string> lines;
  bool pending_quote = false;
  auto lone = [&] {
    if (!lines.empty() && lines.back() != "β") lines.push_back("β");
  };
  for (const auto& sg : groups) {
    const Sentence& s = doc.sentences[sg.sentence];
    if (s.is_title || sg.groups.empty()) continue;
    if (pending_quote || (!s.tokens.empty() && s.tokens.front().kind == TokenKind::kQuoteMark)) {
      lone();
    }
    pending_quote = false;
    for (const auto& g : sg.groups) {
      std::vector<std::string> words;
      for (std::size_t p = g.from; p <= g.to; ++p) {
        if (s.tokens[p].is_word()) words.push_back(s.tokens[p].normalized);
      }
      lines.push_back(Join(words, " ") + " β");
    }
    for (std::size_t i = s.tokens.size(); i-- > 0;) {
      if (s.tokens[i].kind == TokenKind::kTerminalPunct) continue;
      pending_quote = s.tokens[i].kind == TokenKind::kQuoteMark;
      break;
    }
  }
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace prosomark
