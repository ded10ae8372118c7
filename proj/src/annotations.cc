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

#include "prosomark/annotations.h"

#include <algorithm>
#include <set>
#include <utility>

namespace prosomark {
namespace {

template <typename E>
struct EnumNames;

#define PROSOMARK_ENUM_NAMES(E, ...)                                    \
  template <>                                                           \
  struct EnumNames<E> {                                                 \
    static const std::vector<std::pair<E, std::string_view>>& names() { \
      static const std::vector<std::pair<E, std::string_view>> v = {    \
          __VA_ARGS__};                                                 \
      return v;                                                         \
    }                                                                   \
  };

PROSOMARK_ENUM_NAMES(View, {View::kExternal, "external"},
                     {View::kInternal, "internal"})
PROSOMARK_ENUM_NAMES(Factivity, {Factivity::kFactive, "factive"},
                     {Factivity::kNonfactive, "nonfactive"})
PROSOMARK_ENUM_NAMES(Change, {Change::kNull, "null"},
                     {Change::kGraded, "graded"},
                     {Change::kCulminated, "culminated"})
PROSOMARK_ENUM_NAMES(Relevance, {Relevance::kForeground, "foreground"},
                     {Relevance::kBackground, "background"})
PROSOMARK_ENUM_NAMES(Aspect, {Aspect::kActivity, "activity"},
                     {Aspect::kState, "state"},
                     {Aspect::kAccomplishment, "accomplishment"},
                     {Aspect::kAchievement, "achievement"})
PROSOMARK_ENUM_NAMES(Tense, {Tense::kPres, "pres"}, {Tense::kPast, "past"},
                     {Tense::kPerf, "perf"}, {Tense::kNil, "nil"})
PROSOMARK_ENUM_NAMES(DiscRel, {DiscRel::kNarration, "narration"},
                     {DiscRel::kCause, "cause"}, {DiscRel::kResult, "result"},
                     {DiscRel::kSetting, "setting"},
                     {DiscRel::kCircumstance, "circumstance"},
                     {DiscRel::kElaboration, "elaboration"},
                     {DiscRel::kExplanation, "explanation"})
PROSOMARK_ENUM_NAMES(Subjectivity, {Subjectivity::kObjective, "objective"},
                     {Subjectivity::kSubjective, "subjective"})
PROSOMARK_ENUM_NAMES(TopicType, {TopicType::kMain, "main"},
                     {TopicType::kSecond, "second"},
                     {TopicType::kPoten, "poten"})
PROSOMARK_ENUM_NAMES(Move, {Move::kRoot, "root"}, {Move::kUp, "up"},
                     {Move::kDown, "down"}, {Move::kLevel, "level"})

#undef PROSOMARK_ENUM_NAMES

template <typename E>
std::string_view Name(E e) {
  for (const auto& [v, n] : EnumNames<E>::names()) {
    if (v == e) return n;
  }
  return "?";
}

std::string Canonical(std::string_view s) {
  std::string l = ToLower(s);
  if (l == "culmintd") return "culminated";
  if (l == "foregrnd") return "foreground";
  if (l == "backgrnd") return "background";
  if (l == "secondary") return "second";
  if (l == "potential") return "poten";
  return l;
}

template <typename E>
E Require(const std::string& field, std::string_view what, int line) {
  auto v = ParseEnum<E>(field);
  if (!v) {
    throw ParseError("unknown " + std::string(what) + " '" + field + "'",
                     line);
  }
  return *v;
}

int RequireInt(const std::string& field, std::string_view what, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(field, &used);
    if (used != field.size() || v < 0) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad " + std::string(what) + " '" + field + "'", line);
  }
}

std::pair<std::string, std::string> SplitRange(const std::string& field,
                                               int line) {
  std::size_t dash = field.find('-');
  if (dash == std::string::npos) {
    throw ParseError("expected <from>-<to>, got '" + field + "'", line);
  }
  return {field.substr(0, dash), field.substr(dash + 1)};
}

std::vector<std::string> Fields(const std::string& line) {
  // Tab separated; runs of spaces are tolerated for hand-edited files.
  std::vector<std::string> out;
  for (auto& f : Split(line, '\t')) {
    for (auto& w : SplitWs(f)) out.push_back(w);
  }
  return out;
}

}  // namespace

template <typename E>
std::optional<E> ParseEnum(std::string_view s) {
  const std::string c = Canonical(s);
  for (const auto& [v, n] : EnumNames<E>::names()) {
    if (n == c) return v;
  }
  return std::nullopt;
}

template std::optional<View> ParseEnum<View>(std::string_view);
template std::optional<Factivity> ParseEnum<Factivity>(std::string_view);
template std::optional<Change> ParseEnum<Change>(std::string_view);
template std::optional<Relevance> ParseEnum<Relevance>(std::string_view);
template std::optional<Aspect> ParseEnum<Aspect>(std::string_view);
template std::optional<Tense> ParseEnum<Tense>(std::string_view);
template std::optional<DiscRel> ParseEnum<DiscRel>(std::string_view);
template std::optional<Subjectivity> ParseEnum<Subjectivity>(std::string_view);
template std::optional<TopicType> ParseEnum<TopicType>(std::string_view);
template std::optional<Move> ParseEnum<Move>(std::string_view);

std::string_view ToString(View v) { return Name(v); }
std::string_view ToString(Factivity v) { return Name(v); }
std::string_view ToString(Change v) { return Name(v); }
std::string_view ToString(Relevance v) { return Name(v); }
std::string_view ToString(Aspect v) { return Name(v); }
std::string_view ToString(Tense v) { return Name(v); }
std::string_view ToString(DiscRel v) { return Name(v); }
std::string_view ToString(Subjectivity v) { return Name(v); }
std::string_view ToString(TopicType v) { return Name(v); }
std::string_view ToString(Move v) { return Name(v); }

AnnotationSet ParseSidecar(std::string_view text) {
  AnnotationSet ann;
  std::vector<std::pair<int, int>> references;  // (line, clause_no)
  std::set<int> seen;

  for (const auto& [line_no, line] : ContentLines(text)) {
    std::vector<std::string> f = Fields(line);
    const std::string& kind = f[0];
    if (kind == "CLAUSE") {
      if (f.size() != 13) {
        throw ParseError("CLAUSE needs 12 fields, got " +
                             std::to_string(f.size() - 1),
                         line_no);
      }
      ClauseFeatures c;
      c.clause_no = RequireInt(f[1], "clause number", line_no);
      auto fr = Split(f[2], '/');
      if (fr.size() != 2 || fr[0].empty() || fr[1].empty()) {
        throw ParseError("func/role must look like main/prop", line_no);
      }
      c.func_role = {fr[0], fr[1]};
      c.view = Require<View>(f[3], "view", line_no);
      c.factivity = Require<Factivity>(f[4], "factivity", line_no);
      c.change = Require<Change>(f[5], "change", line_no);
      if (f[6] != "_") c.relevance = Require<Relevance>(f[6], "relevance", line_no);
      c.aspect = Require<Aspect>(f[7], "aspect", line_no);
      c.pred = f[8];
      c.tense = Require<Tense>(f[9], "tense", line_no);
      c.disc_rel = Require<DiscRel>(f[10], "discourse relation", line_no);
      c.subjectivity = Require<Subjectivity>(f[11], "subjectivity", line_no);
      auto [from, to] = SplitRange(f[12], line_no);
      WordSpan span{static_cast<std::size_t>(RequireInt(from, "span", line_no)),
                    static_cast<std::size_t>(RequireInt(to, "span", line_no))};
      if (span.from > span.to) throw ParseError("empty token span", line_no);
      if (c.change == Change::kGraded && c.aspect == Aspect::kState) {
        throw IntegrityError("line " + std::to_string(line_no) +
                             ": graded change on a state clause");
      }
      if (!seen.insert(c.clause_no).second) {
        throw IntegrityError("line " + std::to_string(line_no) +
                             ": duplicate clause " +
                             std::to_string(c.clause_no));
      }
      ann.clause_spans[c.clause_no] = span;
      ann.clauses.push_back(std::move(c));
    } else if (kind == "TOPIC") {
      if (f.size() != 8) {
        throw ParseError("TOPIC needs 7 fields, got " +
                             std::to_string(f.size() - 1),
                         line_no);
      }
      TopicRecord t;
      t.topic_type = Require<TopicType>(f[1], "topic type", line_no);
      t.clause_no = RequireInt(f[2], "clause number", line_no);
      t.pred = f[3];
      t.semantic_id = f[4];
      auto m = Split(f[5], ',');
      if (m.size() != 3) throw ParseError("morph must be p,g,n", line_no);
      t.morph = {m[0], m[1], m[2]};
      if (f[6] != "_") t.inherent = Split(f[6], ';');
      t.role = f[7];
      references.emplace_back(line_no, t.clause_no);
      ann.topics.push_back(std::move(t));
    } else if (kind == "DISC") {
      if (f.size() != 5) {
        throw ParseError("DISC needs 4 fields, got " +
                             std::to_string(f.size() - 1),
                         line_no);
      }
      DiscourseNode n;
      n.sent_id = f[1];
      n.clause_no = RequireInt(f[2], "clause number", line_no);
      n.move = Require<Move>(f[3], "move", line_no);
      auto [from, to] = SplitRange(f[4], line_no);
      if (from != "nil") n.attach.from = RequireInt(from, "attach", line_no);
      n.attach.to = RequireInt(to, "attach", line_no);
      references.emplace_back(line_no, n.clause_no);
      ann.nodes.push_back(std::move(n));
    } else {
      throw ParseError("unknown record type '" + kind + "'", line_no);
    }
  }

  for (const auto& [line_no, clause_no] : references) {
    if (!seen.count(clause_no)) {
      throw IntegrityError("line " + std::to_string(line_no) +
                           ": reference to unknown clause " +
                           std::to_string(clause_no));
    }
  }
  // Nodes copy their feature columns from the clause they describe.
  for (auto& n : ann.nodes) {
    const ClauseFeatures* c = FindClause(ann, n.clause_no);
    n.subjectivity = c->subjectivity;
    n.disc_rel = c->disc_rel;
    n.tense = c->tense;
    n.pred = c->pred;
    n.relevance = c->relevance.value_or(Relevance::kBackground);
  }
  return ann;
}

std::string RenderSidecar(const AnnotationSet& ann) {
  std::string out;
  for (const auto& c : ann.clauses) {
    const WordSpan span = ann.clause_spans.count(c.clause_no)
                              ? ann.clause_spans.at(c.clause_no)
                              : WordSpan{};
    std::vector<std::string> f = {
        "CLAUSE",
        std::to_string(c.clause_no),
        c.func_role.func + "/" + c.func_role.role,
        std::string(ToString(c.view)),
        std::string(ToString(c.factivity)),
        std::string(ToString(c.change)),
        c.relevance ? std::string(ToString(*c.relevance)) : "_",
        std::string(ToString(c.aspect)),
        c.pred,
        std::string(ToString(c.tense)),
        std::string(ToString(c.disc_rel)),
        std::string(ToString(c.subjectivity)),
        std::to_string(span.from) + "-" + std::to_string(span.to)};
    out += Join(f, "\t") + "\n";
  }
  for (const auto& t : ann.topics) {
    std::vector<std::string> f = {
        "TOPIC",
        std::string(ToString(t.topic_type)),
        std::to_string(t.clause_no),
        t.pred,
        t.semantic_id,
        t.morph.person + "," + t.morph.gender + "," + t.morph.number,
        t.inherent.empty() ? "_" : Join(t.inherent, ";"),
        t.role};
    out += Join(f, "\t") + "\n";
  }
  for (const auto& n : ann.nodes) {
    std::vector<std::string> f = {
        "DISC", n.sent_id, std::to_string(n.clause_no),
        std::string(ToString(n.move)),
        (n.attach.from ? std::to_string(*n.attach.from) : "nil") + "-" +
            std::to_string(n.attach.to)};
    out += Join(f, "\t") + "\n";
  }
  return out;
}

void CheckSpans(const AnnotationSet& ann, std::size_t word_count) {
  for (const auto& [clause_no, span] : ann.clause_spans) {
    if (span.to >= word_count) {
      throw IntegrityError("clause " + std::to_string(clause_no) +
                           " span ends at word " + std::to_string(span.to) +
                           " but the document has " +
                           std::to_string(word_count) + " words");
    }
  }
}

const ClauseFeatures* FindClause(const AnnotationSet& ann, int clause_no) {
  for (const auto& c : ann.clauses) {
    if (c.clause_no == clause_no) return &c;
  }
  return nullptr;
}

const DiscourseNode* FindNode(const AnnotationSet& ann, int clause_no) {
  for (const auto& n : ann.nodes) {
    if (n.clause_no == clause_no) return &n;
  }
  return nullptr;
}

std::optional<int> ClauseAt(const AnnotationSet& ann, std::size_t word_index) {
  // Innermost (shortest) span wins when spans nest.
  std::optional<int> best;
  std::size_t best_len = 0;
  for (const auto& [clause_no, span] : ann.clause_spans) {
    if (!span.contains(word_index)) continue;
    std::size_t len = span.to - span.from;
    if (!best || len < best_len) {
      best = clause_no;
      best_len = len;
    }
  }
  return best;
}

bool IsClauseStart(const AnnotationSet& ann, std::size_t word_index) {
  for (const auto& [clause_no, span] : ann.clause_spans) {
    if (span.from == word_index) return true;
  }
  return false;
}

std::vector<std::string> TopicIdConflicts(
    const std::vector<TopicRecord>& topics) {
  std::map<std::string, std::string> first;
  std::vector<std::string> out;
  for (const auto& t : topics) {
    auto [it, inserted] = first.emplace(t.semantic_id, t.pred);
    if (!inserted && it->second != t.pred) {
      out.push_back(t.semantic_id + ": " + it->second + " / " + t.pred);
    }
  }
  return out;
}

}  // namespace prosomark
