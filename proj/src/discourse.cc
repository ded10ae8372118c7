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

#include "prosomark/annotations.h"

namespace prosomark {
namespace {

RelevanceRule ParseRule(const std::string& line, int line_no) {
  std::size_t arrow = line.find("->");
  if (arrow == std::string::npos) {
    throw ParseError("relevance rule needs '->'", line_no);
  }
  RelevanceRule rule;
  auto result = ParseEnum<Relevance>(Trim(line.substr(arrow + 2)));
  if (!result) throw ParseError("rule result must be foreground|background", line_no);
  rule.result = *result;
  std::string lhs = Trim(line.substr(0, arrow));
  if (lhs == "*") return rule;
  for (const std::string& cond : Split(lhs, ',')) {
    auto kv = Split(Trim(cond), '=');
    if (kv.size() != 2) throw ParseError("condition must be key=value", line_no);
    const std::string key = Trim(kv[0]);
    const std::string value = Trim(kv[1]);
    if (key == "change") {
      rule.change = ParseEnum<Change>(value);
      if (!rule.change) throw ParseError("unknown change " + value, line_no);
    } else if (key == "tense") {
      rule.tense = ParseEnum<Tense>(value);
      if (!rule.tense) throw ParseError("unknown tense " + value, line_no);
    } else if (key == "aspect") {
      rule.aspect = ParseEnum<Aspect>(value);
      if (!rule.aspect) throw ParseError("unknown aspect " + value, line_no);
    } else if (key == "pred") {
      rule.pred = value;
    } else {
      throw ParseError("unknown rule key " + key, line_no);
    }
  }
  return rule;
}

bool Matches(const RelevanceRule& r, const ClauseFeatures& f) {
  return (!r.change || *r.change == f.change) &&
         (!r.tense || *r.tense == f.tense) &&
         (!r.aspect || *r.aspect == f.aspect) && (!r.pred || *r.pred == f.pred);
}

// Removes `id` and empty entries, keeping order.
std::vector<std::string> Without(
    std::initializer_list<std::optional<std::string>> slots,
    const std::string& id) {
  std::vector<std::string> out;
  for (const auto& s : slots) {
    if (s && *s != id) out.push_back(*s);
  }
  return out;
}

}  // namespace

RelevanceRuleset RelevanceRuleset::Default() {
  RelevanceRuleset set;
  RelevanceRule culminated;
  culminated.change = Change::kCulminated;
  culminated.result = Relevance::kForeground;
  set.rules_.push_back(culminated);
  set.rules_.push_back(RelevanceRule{});  // catch-all background
  return set;
}

RelevanceRuleset RelevanceRuleset::Parse(std::string_view text) {
  RelevanceRuleset set;
  for (const auto& [line_no, line] : ContentLines(text)) {
    set.rules_.push_back(ParseRule(line, line_no));
  }
  return set;
}

void RelevanceRuleset::Prepend(const RelevanceRuleset& other) {
  rules_.insert(rules_.begin(), other.rules_.begin(), other.rules_.end());
}

Relevance RelevanceRuleset::Classify(const ClauseFeatures& feats) const {
  for (const auto& r : rules_) {
    if (Matches(r, feats)) return r.result;
  }
  return Relevance::kBackground;
}

Relevance ClassifyRelevance(const ClauseFeatures& feats,
                            const RelevanceRuleset& ruleset) {
  return ruleset.Classify(feats);
}

TopicStack UpdateTopicStack(TopicStack stack,
                            const std::vector<TopicRecord>& mentions) {
  for (const auto& m : mentions) {
    const std::string& id = m.semantic_id;
    const bool first_ever = stack.persistence.empty();
    const int count = ++stack.persistence[id];
    if (first_ever) {
      stack.main = id;
      continue;
    }
    if (stack.main == id) continue;

    if (count >= 2 &&
        (!stack.main || count > stack.persistence[*stack.main])) {
      auto rest = Without({stack.main, stack.secondary, stack.potential}, id);
      stack.main = id;
      stack.secondary = rest.size() > 0 ? std::optional(rest[0]) : std::nullopt;
      stack.potential = rest.size() > 1 ? std::optional(rest[1]) : std::nullopt;
    } else if (count >= 2) {
      if (stack.secondary == id) continue;
      auto rest = Without({stack.secondary, stack.potential}, id);
      stack.secondary = id;
      stack.potential = rest.empty() ? std::nullopt : std::optional(rest[0]);
    } else if (!stack.Holds(id)) {
      stack.potential = id;
    }
  }
  return stack;
}

std::vector<TopicState> TopicTimeline(const std::vector<TopicRecord>& topics) {
  std::vector<TopicState> out;
  TopicStack stack;
  std::size_t i = 0;
  while (i < topics.size()) {
    std::size_t j = i;
    while (j < topics.size() && topics[j].clause_no == topics[i].clause_no) ++j;
    std::vector<TopicRecord> mentions(topics.begin() + i, topics.begin() + j);
    stack = UpdateTopicStack(std::move(stack), mentions);
    out.push_back({topics[i].clause_no, stack});
    i = j;
  }
  return out;
}

std::vector<TopicRecord> AssignTopicTypes(std::vector<TopicRecord> topics) {
  auto timeline = TopicTimeline(topics);
  std::size_t step = 0;
  std::size_t i = 0;
  while (i < topics.size()) {
    const TopicStack& stack = timeline[step++].stack;
    const int clause = topics[i].clause_no;
    for (; i < topics.size() && topics[i].clause_no == clause; ++i) {
      auto& t = topics[i];
      if (stack.main == t.semantic_id) {
        t.topic_type = TopicType::kMain;
      } else if (stack.secondary == t.semantic_id) {
        t.topic_type = TopicType::kSecond;
      } else {
        t.topic_type = TopicType::kPoten;
      }
    }
  }
  return topics;
}

std::vector<DiscourseNode> DeriveMoves(
    const std::vector<ClauseFeatures>& clauses,
    const std::vector<TopicRecord>& topics,
    const std::map<int, std::string>& sent_ids) {
  std::vector<DiscourseNode> nodes;
  if (clauses.empty()) return nodes;

  std::map<int, TopicStack> stack_after;
  for (const auto& state : TopicTimeline(topics)) {
    stack_after[state.clause_no] = state.stack;
  }

  const int root = clauses.front().clause_no;
  int anchor = root;
  std::optional<std::string> running_main;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const ClauseFeatures& c = clauses[i];
    DiscourseNode n;
    auto sid = sent_ids.find(c.clause_no);
    n.sent_id = sid != sent_ids.end() ? sid->second : "_";
    n.clause_no = c.clause_no;
    n.subjectivity = c.subjectivity;
    n.disc_rel = c.disc_rel;
    n.tense = c.tense;
    n.pred = c.pred;
    n.relevance = c.relevance.value_or(Relevance::kBackground);

    bool continues_main = false;
    for (const auto& t : topics) {
      if (t.clause_no == c.clause_no && running_main &&
          t.semantic_id == *running_main) {
        continues_main = true;
      }
    }
    const bool background = n.relevance == Relevance::kBackground;
    if (i == 0) {
      n.move = Move::kUp;
      n.attach = {std::nullopt, c.clause_no};
    } else if (!background && !continues_main) {
      n.move = Move::kUp;
      n.attach = {root, c.clause_no};
      anchor = c.clause_no;
    } else if (background &&
               (c.func_role.subordinate() || c.disc_rel == DiscRel::kResult ||
                c.disc_rel == DiscRel::kCircumstance)) {
      n.move = Move::kDown;
      n.attach = {anchor, c.clause_no};
    } else {
      n.move = Move::kLevel;
      n.attach = {anchor, c.clause_no};
    }
    auto st = stack_after.find(c.clause_no);
    if (st != stack_after.end() && st->second.main) running_main = st->second.main;
    nodes.push_back(std::move(n));
  }
  return nodes;
}

void ResolveAnnotations(AnnotationSet& ann, const RelevanceRuleset& ruleset,
                        const std::map<int, std::string>& sent_ids) {
  for (auto& c : ann.clauses) {
    if (!c.relevance) c.relevance = ClassifyRelevance(c, ruleset);
  }
  if (ann.nodes.empty()) {
    ann.nodes = DeriveMoves(ann.clauses, ann.topics, sent_ids);
  } else {
    for (auto& n : ann.nodes) {
      if (const ClauseFeatures* c = FindClause(ann, n.clause_no)) {
        n.relevance = *c->relevance;
      }
    }
  }
}

std::map<int, std::string> SentenceIds(const Document& doc,
                                       const AnnotationSet& ann) {
  std::map<int, std::string> out;
  std::size_t body = 0;
  for (const auto& s : doc.sentences) {
    const std::string id = s.is_title ? "title" : "s" + std::to_string(body++);
    for (const auto& t : s.tokens) {
      if (!t.word_index) continue;
      for (const auto& [clause_no, span] : ann.clause_spans) {
        if (span.from == *t.word_index) out[clause_no] = id;
      }
    }
  }
  return out;
}

}  // namespace prosomark
