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

#ifndef PROSOMARK_ANNOTATIONS_H_
#define PROSOMARK_ANNOTATIONS_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "prosomark/ingest.h"
#include "prosomark/lexicon.h"

namespace prosomark {

// Raised when records reference clauses that do not exist, or spans that
// fall outside the document.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class View { kExternal, kInternal };
enum class Factivity { kFactive, kNonfactive };
enum class Change { kNull, kGraded, kCulminated };
enum class Relevance { kForeground, kBackground };
enum class Aspect { kActivity, kState, kAccomplishment, kAchievement };
enum class Tense { kPres, kPast, kPerf, kNil };
enum class DiscRel {
  kNarration,
  kCause,
  kResult,
  kSetting,
  kCircumstance,
  kElaboration,
  kExplanation
};
enum class Subjectivity { kObjective, kSubjective };
enum class TopicType { kMain, kSecond, kPoten };
enum class Move { kRoot, kUp, kDown, kLevel };

std::string_view ToString(View v);
std::string_view ToString(Factivity v);
std::string_view ToString(Change v);
std::string_view ToString(Relevance v);
std::string_view ToString(Aspect v);
std::string_view ToString(Tense v);
std::string_view ToString(DiscRel v);
std::string_view ToString(Subjectivity v);
std::string_view ToString(TopicType v);
std::string_view ToString(Move v);

// Enum parsing. Accepts the canonical names plus the abbreviations used in
// abbreviated feature tables ("culmintd", "foregrnd", ...).
template <typename E>
std::optional<E> ParseEnum(std::string_view s);

struct FuncRole {
  std::string func = "main";  // main, coord, xcomp, sub, adj, rel, comp
  std::string role = "prop";

  bool subordinate() const { return func != "main" && func != "coord"; }
  bool operator==(const FuncRole&) const = default;
};

// Inclusive range of document word indices (Token::word_index).
struct WordSpan {
  std::size_t from = 0;
  std::size_t to = 0;
  bool contains(std::size_t w) const { return w >= from && w <= to; }
  bool operator==(const WordSpan&) const = default;
};

struct ClauseFeatures {
  int clause_no = 0;
  FuncRole func_role;
  View view = View::kExternal;
  Factivity factivity = Factivity::kFactive;
  Change change = Change::kNull;
  std::optional<Relevance> relevance;  // unset until classified
  Aspect aspect = Aspect::kActivity;
  std::string pred;
  Tense tense = Tense::kPres;
  DiscRel disc_rel = DiscRel::kNarration;
  Subjectivity subjectivity = Subjectivity::kObjective;

  bool operator==(const ClauseFeatures&) const = default;
};

struct Morph {
  std::string person = "3";
  std::string gender = "nil";
  std::string number = "nil";
  bool operator==(const Morph&) const = default;
};

struct TopicRecord {
  TopicType topic_type = TopicType::kPoten;
  int clause_no = 0;
  std::string pred;
  std::string semantic_id;
  Morph morph;
  std::vector<std::string> inherent;
  std::string role;

  bool operator==(const TopicRecord&) const = default;
};

// Main / secondary / potential topic slots plus mention counts.
struct TopicStack {
  std::optional<std::string> main;
  std::optional<std::string> secondary;
  std::optional<std::string> potential;
  std::map<std::string, int> persistence;

  bool Holds(const std::string& id) const {
    return main == id || secondary == id || potential == id;
  }
  bool operator==(const TopicStack&) const = default;
};

struct Attach {
  std::optional<int> from;  // nullopt renders as "nil"
  int to = 0;
  bool operator==(const Attach&) const = default;
};

struct DiscourseNode {
  std::string sent_id;
  int clause_no = 0;
  Subjectivity subjectivity = Subjectivity::kObjective;
  DiscRel disc_rel = DiscRel::kNarration;
  Tense tense = Tense::kPres;
  std::string pred;
  Relevance relevance = Relevance::kBackground;
  Move move = Move::kLevel;
  Attach attach;

  bool operator==(const DiscourseNode&) const = default;
};

struct AnnotationSet {
  std::vector<ClauseFeatures> clauses;
  std::vector<TopicRecord> topics;
  std::vector<DiscourseNode> nodes;
  std::map<int, WordSpan> clause_spans;

  bool empty() const { return clauses.empty() && topics.empty() && nodes.empty(); }
  bool operator==(const AnnotationSet&) const = default;
};

// Sidecar reading/writing. Throws ParseError (with line) for malformed
// records and IntegrityError for dangling clause references.
AnnotationSet ParseSidecar(std::string_view text);
std::string RenderSidecar(const AnnotationSet& ann);

// Throws IntegrityError when a clause span exceeds the document's words.
void CheckSpans(const AnnotationSet& ann, std::size_t word_count);

const ClauseFeatures* FindClause(const AnnotationSet& ann, int clause_no);
const DiscourseNode* FindNode(const AnnotationSet& ann, int clause_no);
std::optional<int> ClauseAt(const AnnotationSet& ann, std::size_t word_index);
bool IsClauseStart(const AnnotationSet& ann, std::size_t word_index);

// Pairs of (semantic_id, lemma) that map one id to several lemmas. Reported
// as diagnostics; hand-built topic tables often contain such pairs.
std::vector<std::string> TopicIdConflicts(const std::vector<TopicRecord>& topics);

// ---------------------------------------------------------------------------
// Relevance classification.

// Ordered decision table; the first matching rule wins. A rule matches when
// every field it sets equals the clause's value.
struct RelevanceRule {
  std::optional<Change> change;
  std::optional<Tense> tense;
  std::optional<Aspect> aspect;
  std::optional<std::string> pred;
  Relevance result = Relevance::kBackground;
};

class RelevanceRuleset {
 public:
  // change=culminated -> foreground; anything else -> background.
  static RelevanceRuleset Default();
  // Lines of `key=value[,key=value...] -> foreground|background`, or
  // `* -> ...` for a catch-all.
  static RelevanceRuleset Parse(std::string_view text);

  // Rules from `other` take precedence over this table's rules.
  void Prepend(const RelevanceRuleset& other);
  Relevance Classify(const ClauseFeatures& feats) const;
  const std::vector<RelevanceRule>& rules() const { return rules_; }

 private:
  std::vector<RelevanceRule> rules_;
};

Relevance ClassifyRelevance(const ClauseFeatures& feats,
                            const RelevanceRuleset& ruleset);

// ---------------------------------------------------------------------------
// Topic tracking.

// Folds one clause's mentions into the stack. A new id enters the potential
// slot; an id mentioned a second time leaves potential for the secondary
// slot, and becomes main once it has been mentioned more often than the
// current main. Displaced ids move one slot down.
TopicStack UpdateTopicStack(TopicStack stack,
                            const std::vector<TopicRecord>& mentions);

struct TopicState {
  int clause_no = 0;
  TopicStack stack;
};

// Runs UpdateTopicStack clause by clause (mentions grouped by consecutive
// clause_no) and returns the stack after each clause.
std::vector<TopicState> TopicTimeline(const std::vector<TopicRecord>& topics);

// Recomputes topic_type for every record from the timeline.
std::vector<TopicRecord> AssignTopicTypes(std::vector<TopicRecord> topics);

// ---------------------------------------------------------------------------
// Discourse moves.

// One node per clause. The first clause goes up with a nil origin; a
// foreground clause that does not continue the running main topic goes up
// to the discourse root; subordinate or result/circumstance background
// clauses go down; everything else is level with the current anchor.
std::vector<DiscourseNode> DeriveMoves(
    const std::vector<ClauseFeatures>& clauses,
    const std::vector<TopicRecord>& topics,
    const std::map<int, std::string>& sent_ids = {});

// Fills unset relevance values and derives discourse nodes when none were
// supplied.
void ResolveAnnotations(AnnotationSet& ann, const RelevanceRuleset& ruleset,
                        const std::map<int, std::string>& sent_ids = {});

// ---------------------------------------------------------------------------
// Shallow fallback analysis.

struct ShallowConfig {
  RelevanceRuleset relevance = RelevanceRuleset::Default();
  // Clause-initial discourse markers.
  std::map<std::string, DiscRel> markers = {
      {"because", DiscRel::kCause},
      {"so", DiscRel::kResult},
      {"while", DiscRel::kCircumstance},
      {"when", DiscRel::kCircumstance}};
  CommaLexicon comma_lexicon = CommaLexicon::Defaults();
};

AnnotationSet ShallowAnalyze(const Document& doc,
                             const ShallowConfig& config = ShallowConfig{});

// Sentence ids ("s0", "s1", ...) for every clause, from the clause spans.
std::map<int, std::string> SentenceIds(const Document& doc,
                                       const AnnotationSet& ann);

}  // namespace prosomark

#endif  // PROSOMARK_ANNOTATIONS_H_
