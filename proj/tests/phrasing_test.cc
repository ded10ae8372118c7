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

#include "doctest.h"
#include "prosomark/phrasing.h"
#include "test_util.h"

namespace prosomark {
namespace {

// Group texts of the first sentence, words joined by spaces.
std::vector<std::string> GroupTexts(const Sentence& s, const std::vector<BreathGroup>& groups) {
  std::vector<std::string> out;
  for (const auto& g : groups) {
    std::vector<std::string> words;
    for (std::size_t i = g.from; i <= g.to; ++i) {
      if (s.tokens[i].is_word()) words.push_back(s.tokens[i].normalized);
    }
    out.push_back(Join(words, " "));
  }
  return out;
}

std::vector<std::string> ShallowGroups(std::string_view text,
                                       const PhrasingConfig& config = PhrasingConfig{}) {
  Document d = testing::Doc(text);
  AnnotationSet ann = ShallowAnalyze(d);
  return GroupTexts(d.sentences[0], Segment(d.sentences[0], ann, config));
}

TEST_CASE("gold sidecar reproduces the fixture decomposition") {
  auto out = testing::RunFable();
  CHECK(out.groups_text == testing::ReadFixture("belling_the_cat.groups"));
}

TEST_CASE("coordinated clauses split at the conjunction") {
  CHECK(ShallowGroups("Some said this, and some said that.") ==
        std::vector<std::string>{"some said this", "and some said that"});
}

TEST_CASE("no break between a determiner and its noun") {
  Document d = testing::Doc("the mice looked at the big cat.");
  const Sentence& s = d.sentences[0];
  CHECK_FALSE(CanBreakBefore(s, 1));  // the | mice
  CHECK_FALSE(CanBreakBefore(s, 5));  // the | big
  CHECK(CanBreakBefore(s, 3));        // looked | at
}

TEST_CASE("an overlong group has no usable trigger inside") {
  PhrasingConfig config;
  config.max_len = 4;
  Document d = testing::Doc(
      "the old grey mouse slowly walked along the narrow wall and looked down at the yard.");
  AnnotationSet ann = ShallowAnalyze(d);
  const Sentence& s = d.sentences[0];
  const auto groups = Segment(s, ann, config);
  CHECK(groups.size() >= 3);
  for (const auto& g : groups) {
    std::vector<std::size_t> words;
    for (std::size_t i = g.from; i <= g.to; ++i) {
      if (s.tokens[i].is_word()) words.push_back(i);
    }
    if (words.size() <= config.max_len) continue;
    for (const TriggerPoint& t : FindTriggers(s, ann, g.from, g.to, config)) {
      const auto k = static_cast<std::size_t>(
          std::find(words.begin(), words.end(), t.at) - words.begin());
      CHECK((k < config.min_len || words.size() - k < config.min_len));
    }
  }
}

TEST_CASE("single-word sentence gives one group") {
  Document d = testing::Doc("Now.");
  auto groups = Segment(d.sentences[0], AnnotationSet{});
  REQUIRE(groups.size() == 1);
  CHECK(groups[0].from == 0);
  CHECK(groups[0].to == 0);
  CHECK(groups[0].head_index == 0);
}

TEST_CASE("junction and head marks on the fable") {
  auto out = testing::RunFable();
  for (const auto& sg : out.groups) {
    const Sentence& s = out.doc.sentences[sg.sentence];
    for (std::size_t k = 0; k < sg.groups.size(); ++k) {
      const BreathGroup& g = sg.groups[k];
      CHECK(g.head_index >= g.from);
      CHECK(g.head_index <= g.to);
      CHECK(s.tokens[g.head_index].is_word());
      bool punct_after = false;
      for (std::size_t i = g.to + 1; i < s.tokens.size() && !s.tokens[i].is_word(); ++i) {
        punct_after |= s.tokens[i].kind != TokenKind::kQuoteMark;
      }
      // A group followed by punctuation is always end-stopped.
      if (punct_after) CHECK(g.junction == Junction::kEndStopped);
    }
    CHECK(sg.groups.back().junction == Junction::kEndStopped);
  }
}

TEST_CASE("enjambed junction inside a clause") {
  auto out = testing::RunFable();
  // "the mice had a general council" runs on into "to consider ...".
  const auto& sg = out.groups[1];
  const Sentence& s = out.doc.sentences[sg.sentence];
  REQUIRE(GroupTexts(s, sg.groups)[1] == "the mice had a general council");
  CHECK(sg.groups[1].junction == Junction::kEnjambed);
  CHECK(sg.groups[0].junction == Junction::kEndStopped);
}

TEST_CASE("non-final function words are not heads") {
  auto out = testing::RunFable();
  const WordList function_words = {"the", "a", "of", "and", "to", "in", "by", "that"};
  for (const auto& sg : out.groups) {
    const Sentence& s = out.doc.sentences[sg.sentence];
    for (const auto& g : sg.groups) {
      bool has_content = false;
      for (std::size_t i = g.from; i <= g.to; ++i) {
        has_content |= s.tokens[i].is_word() && !function_words.Contains(s.tokens[i].normalized);
      }
      // Only a group-final function word may carry the accent.
      if (has_content && g.head_index != g.to) {
        CHECK_FALSE(function_words.Contains(s.tokens[g.head_index].normalized));
      }
    }
  }
}

TEST_CASE("trigger names") {
  CHECK(ToString(Trigger::kCoordinate) == "coordinate");
  CHECK(ToString(Junction::kEnjambed) == "enjambed");
}

TEST_CASE("empty document renders no groups") {
  Document d = testing::Doc("");
  CHECK(SegmentDocument(d, AnnotationSet{}).empty());
  CHECK(RenderGroups(d, {}).empty());
}

}  // namespace
}  // namespace prosomark
