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

#ifndef PROSOMARK_PROSODY_H_
#define PROSOMARK_PROSODY_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "prosomark/annotations.h"
#include "prosomark/emit.h"
#include "prosomark/ingest.h"
#include "prosomark/lexicon.h"
#include "prosomark/mapping.h"
#include "prosomark/phrasing.h"
#include "prosomark/tobi.h"

namespace prosomark {

// ---------------------------------------------------------------------------
// Break indices.

struct BreakContext {
  bool at_punct = false;
  bool head_end = false;  // group ends on a head that governs what follows
  bool head_followed_by_dependent = false;
  bool sentence_final = false;
  bool paragraph_final = false;
  bool title_final = false;
  bool before_quantifier = false;  // pause after a quantified head
  bool pre_exclamative = false;    // direct speech, before '!' or '?'
  bool enjambed = false;           // run-on boundary marked with a pause
};

// BI1 when no rule applies.
BreakIndex AssignBreakIndex(const BreathGroup& group, const BreakContext& context);

// ---------------------------------------------------------------------------
// Point of view.

struct PointOfView {
  enum class Holder { kNarrator, kCharacter };
  Holder holder = Holder::kNarrator;
  std::string speaker;  // character id; "anon" when unattributed
  std::size_t opened_at = 0;  // sentence index
  std::size_t quote_depth = 0;

  bool character() const { return holder == Holder::kCharacter; }
  bool operator==(const PointOfView&) const = default;
};

struct TokenRef {
  std::size_t sentence = 0;
  std::size_t token = 0;
  auto operator<=>(const TokenRef&) const = default;
};

struct PovSpan {
  PointOfView pov;
  TokenRef from;
  TokenRef to;  // inclusive
  bool contains(TokenRef t) const { return from <= t && t <= to; }
};

struct PovTrack {
  std::vector<PovSpan> spans;  // alternating, covering the whole document
  std::vector<std::string> diagnostics;

  const PovSpan* at(TokenRef t) const;
};

// Quote marks open and close character spans. The speaker is the subject
// next to a communication verb adjacent to the quote; quotes without one
// get the anonymous speaker. An unclosed quote is closed at the end of its
// paragraph with a diagnostic.
PovTrack TrackPointOfView(const Document& doc, const AnnotationSet& ann,
                          const WordList& comm_verbs);

// The downstepped counterpart H-!H*-v. The variant is kept when the table
// carries that contour, otherwise set to 1.
ToneContour Downstep(const ToneContour& c,
                     const MappingTable& table = MappingTable::Default());

// Sentence-initial contours of one character span: the first is kept and
// every later one is downstepped.
std::vector<ToneContour> ApplyDownstep(const std::vector<ToneContour>& contours,
                                       const MappingTable& table = MappingTable::Default());

// ---------------------------------------------------------------------------
// Tone selection.

enum class Affect { kNeutral, kSad, kExclaim, kExhort };
enum class TonePosition { kTitle, kSentenceInitial, kSentenceInternal, kGroupFinal };

std::string_view ToString(Affect a);
std::optional<Affect> ParseAffect(std::string_view s);

// Lexical and structural facts the table needs beyond the clause.
struct ToneFlags {
  bool paragraph_boundary = false;  // sentence opens a paragraph after body text
  bool head_end = false;            // group ends on a verbal head
  bool predicative_end = false;     // group ends on a predicative head
  bool subordinate_marker = false;  // group opens with a subordinator
  bool resultative = false;         // infinitival with disc_rel result
  bool question = false;            // wh word in a direct-speech question
  bool speech_open = false;         // first sentence of a character span
  bool subject_split = false;       // long subject split from its verb
  bool split_exclamative = false;   // '!' detached from its clause
};

struct ToneChoice {
  ToneContour contour;
  std::optional<RowId> row;  // nullopt for the unmarked catch-all
};

// Total decision table; the catch-all is H*-L with no row.
ToneChoice SelectTone(TonePosition position, Relevance relevance, Move move,
                      const std::string& func, DiscRel disc_rel, const PointOfView& pov,
                      Affect affect, const ToneFlags& flags);

ToneChoice SelectTone(const BreathGroup& group, const ClauseFeatures& feats,
                      const DiscourseNode& node, TonePosition position,
                      const PointOfView& pov, Affect affect, const ToneFlags& flags = {});

// ---------------------------------------------------------------------------
// Frozen expressions.

enum class FrozenRole { kExhortative, kGreeting, kThanks, kApology };

std::string_view ToString(FrozenRole r);
std::optional<FrozenRole> ParseFrozenRole(std::string_view s);

struct FrozenEntry {
  std::vector<std::string> pattern;  // lowercased words
  bool address_tail = false;         // pattern ends with <address>
  FrozenRole role = FrozenRole::kExhortative;
  std::vector<MappingStep> steps;    // contours with their parameters

  std::vector<ToneContour> contours() const;
  std::vector<ParamEvent> params() const;
};

struct FrozenTable {
  std::vector<FrozenEntry> entries;

  // `pattern<TAB>role` lines. Throws ParseError for an unknown role.
  static FrozenTable Parse(std::string_view text,
                           const MappingTable& table = MappingTable::Default());
  static FrozenTable Load(const std::string& path,
                          const MappingTable& table = MappingTable::Default());
};

struct FrozenMatch {
  const FrozenEntry* entry = nullptr;
  std::vector<std::size_t> words;  // matched token positions, tail last
  std::optional<std::size_t> tail;

  std::size_t length() const { return words.size(); }
  std::vector<ToneContour> contours() const { return entry->contours(); }
  std::vector<ParamEvent> params() const { return entry->params(); }
};

// Longest entry matching the words starting at token `at`. Commas may
// separate the address term from the pattern; nothing else may intervene.
std::optional<FrozenMatch> MatchFrozen(const std::vector<Token>& tokens, std::size_t at,
                                       const FrozenTable& table,
                                       const WordList& address_terms);

// ---------------------------------------------------------------------------
// Quantifiers and affect.

struct SlowdownMark {
  std::size_t token = 0;  // the word the event precedes
  ParamEvent event;
  bool break_after = false;        // BI23 after the quantified word
  bool replaces_group_end = false; // floating quantifier before the final head
};

std::vector<SlowdownMark> MarkQuantifierSlowdown(const BreathGroup& group,
                                                 const Sentence& sentence,
                                                 const WordList& quantifiers,
                                                 const WordList& floating);

struct AffectSpan {
  std::size_t from = 0;  // token positions, inclusive
  std::size_t to = 0;
  Affect affect = Affect::kSad;
};

// Runs of sad words, joined across coordinators. A sentence-final word
// right after a run joins it.
std::vector<AffectSpan> FindAffectSpans(const Sentence& sentence,
                                        const TaggedLexicon& affect);

// ---------------------------------------------------------------------------
// Planning.

struct ProsodyConfig {
  PhrasingConfig phrasing;
  bool pov_tracking = true;
  bool paragraph_final_bi4 = false;
  WordList comm_verbs;
  WordList quantifiers;
  WordList floating_quantifiers;
  TaggedLexicon affect;
  FrozenTable frozen;
  const MappingTable* table = &MappingTable::Default();
};

struct PlanResult {
  ProsodicScript script;
  std::vector<std::string> diagnostics;
};

PlanResult PlanProsody(const Document& doc, const AnnotationSet& ann,
                       const std::vector<SentenceGroups>& groups,
                       const ProsodyConfig& config);

}  // namespace prosomark

#endif  // PROSOMARK_PROSODY_H_
