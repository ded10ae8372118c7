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

#ifndef PROSOMARK_PHRASING_H_
#define PROSOMARK_PHRASING_H_

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "prosomark/annotations.h"
#include "prosomark/ingest.h"

namespace prosomark {

// Boundary rules in priority order.
enum class Trigger {
  kSentenceStart = 0,
  kPunctuation = 1,
  kCoordinate = 2,
  kSubordinate = 3,
  kInfinitival = 4,
  kComplement = 5,
  kRelative = 6,
  kSubjectVerb = 7,
  kAdverbial = 8,
  kComplementAdjunct = 9,
};

std::string_view ToString(Trigger t);

enum class Junction { kEndStopped, kEnjambed };

std::string_view ToString(Junction j);

struct BreathGroup {
  // First and last word token, as positions in Sentence::tokens.
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t head_index = 0;
  Trigger trigger = Trigger::kSentenceStart;
  int clause_no = 0;  // 0 when no clause covers the group
  Junction junction = Junction::kEndStopped;

  bool operator==(const BreathGroup&) const = default;
};

struct PhrasingConfig {
  std::size_t min_len = 2;
  std::size_t max_len = 12;
  std::size_t max_subj = 4;
  // Clause functions whose span start opens a new group.
  std::set<std::string> clause_split_funcs = {"main", "coord", "sub", "rel", "xcomp"};
  CommaLexicon comma_lexicon = CommaLexicon::Defaults();
};

// A position where a rule would open a group, before word token `at`.
struct TriggerPoint {
  std::size_t at = 0;
  Trigger trigger = Trigger::kPunctuation;
};

// Lexical and clause triggers strictly inside [from, to] (token positions).
std::vector<TriggerPoint> FindTriggers(const Sentence& sentence,
                                       const AnnotationSet& ann, std::size_t from,
                                       std::size_t to, const PhrasingConfig& config);

// Whether a group may end right before word token `at`. Never between a
// determiner or preposition and its following word.
bool CanBreakBefore(const Sentence& sentence, std::size_t at);

std::vector<BreathGroup> Segment(const Sentence& sentence, const AnnotationSet& ann,
                                 const PhrasingConfig& config = PhrasingConfig{});

Junction ClassifyJunction(const BreathGroup& group, const BreathGroup* next,
                          const Sentence& sentence, const AnnotationSet* ann = nullptr,
                          const CommaLexicon& lexicon = CommaLexicon::Defaults());

struct HeadMark {
  std::size_t head = 0;
  std::vector<std::size_t> demoted;  // token positions never accented
};

HeadMark MarkHeads(const BreathGroup& group, const Sentence& sentence,
                   const AnnotationSet& ann);

// Segments every sentence and fills junction and head.
struct SentenceGroups {
  std::size_t sentence = 0;  // index into Document::sentences
  std::vector<BreathGroup> groups;
};

std::vector<SentenceGroups> SegmentDocument(const Document& doc,
                                            const AnnotationSet& ann,
                                            const PhrasingConfig& config = PhrasingConfig{});

// One group per line as "<words> β"; a lone "β" marks a quote boundary at
// a sentence edge. The title is skipped.
std::string RenderGroups(const Document& doc, const std::vector<SentenceGroups>& groups);

}  // namespace prosomark

#endif  // PROSOMARK_PHRASING_H_
