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

#include <random>
#include <set>

#include "doctest.h"
#include "prosomark/config.h"
#include "test_util.h"

namespace prosomark {
namespace {

// Word tokens of every sentence are covered by its groups exactly once and
// in order.
void CheckPartition(const PipelineOutput& out) {
  REQUIRE(out.groups.size() == out.doc.sentences.size());
  for (const auto& sg : out.groups) {
    const Sentence& s = out.doc.sentences[sg.sentence];
    std::vector<std::size_t> words;
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      if (s.tokens[i].is_word()) words.push_back(i);
    }
    std::vector<std::size_t> covered;
    for (const auto& g : sg.groups) {
      CHECK(g.from <= g.to);
      CHECK(s.tokens[g.from].is_word());
      CHECK(s.tokens[g.to].is_word());
      for (std::size_t i = g.from; i <= g.to; ++i) {
        if (s.tokens[i].is_word()) covered.push_back(i);
      }
    }
    CHECK(covered == words);
  }
}

std::vector<PipelineOutput> SyntheticRuns(std::size_t n) {
  std::vector<PipelineOutput> out;
  const Config config = Config::Defaults();
  for (const auto& s : testing::SyntheticSentences(n)) {
    out.push_back(RunPipeline(s, std::nullopt, config));
  }
  return out;
}

TEST_CASE("breath groups partition the words") {
  CheckPartition(testing::RunFable());
  CheckPartition(RunPipeline(testing::ReadFixture("fox_speech.txt"), std::nullopt,
                             Config::Defaults()));
  for (const auto& out : SyntheticRuns(500)) CheckPartition(out);
}

TEST_CASE("silence and reset pairing holds on every output") {
  CHECK(CheckPairing(testing::RunFable().markup).empty());
  CHECK(CheckPairing(RunPipeline(testing::ReadFixture("fox_speech.txt"), std::nullopt,
                                 Config::Defaults())
                         .markup)
            .empty());
  for (const auto& out : SyntheticRuns(500)) {
    CAPTURE(Detokenize(AllTokens(out.doc)));
    CHECK(CheckPairing(out.markup).empty());
    CHECK(ValidateScript(out.doc, out.script).empty());
  }
}

TEST_CASE("raising max_len never adds groups") {
  const auto sentences = testing::SyntheticSentences(200, 7);
  for (const auto& text : sentences) {
    Document d = testing::Doc(text);
    AnnotationSet ann = ShallowAnalyze(d);
    std::size_t prev = SIZE_MAX;
    for (std::size_t max_len = 2; max_len <= 14; ++max_len) {
      PhrasingConfig pc;
      pc.max_len = max_len;
      std::size_t count = 0;
      for (const auto& sg : SegmentDocument(d, ann, pc)) count += sg.groups.size();
      CAPTURE(text);
      CAPTURE(max_len);
      CHECK(count <= prev);
      prev = count;
    }
  }
}

TEST_CASE("topic stack never holds an id twice") {
  std::mt19937 rng(42);
  for (int seq = 0; seq < 1000; ++seq) {
    TopicStack stack;
    const int clauses = std::uniform_int_distribution<int>(1, 30)(rng);
    for (int c = 1; c <= clauses; ++c) {
      std::vector<TopicRecord> mentions;
      const int n = std::uniform_int_distribution<int>(0, 4)(rng);
      for (int k = 0; k < n; ++k) {
        TopicRecord t;
        t.clause_no = c;
        t.semantic_id = "id" + std::to_string(std::uniform_int_distribution<int>(1, 6)(rng));
        mentions.push_back(t);
      }
      stack = UpdateTopicStack(std::move(stack), mentions);
      std::vector<std::string> held;
      for (const auto& slot : {stack.main, stack.secondary, stack.potential}) {
        if (slot) held.push_back(*slot);
      }
      CHECK(std::set<std::string>(held.begin(), held.end()).size() == held.size());
      if (!stack.persistence.empty()) CHECK(stack.main.has_value());
      for (const auto& id : held) CHECK(stack.persistence.count(id) == 1);
    }
  }
}

TEST_CASE("select_tone is total over random inputs") {
  std::mt19937 rng(7);
  auto coin = [&] { return std::uniform_int_distribution<int>(0, 1)(rng) == 1; };
  const std::vector<std::string> funcs = {"main", "coord", "xcomp", "sub", "adj", "rel", "comp"};
  const MappingTable& table = MappingTable::Default();
  for (int i = 0; i < 20000; ++i) {
    ToneFlags f{coin(), coin(), coin(), coin(), coin(), coin(), coin(), coin(), coin()};
    PointOfView pov;
    if (coin()) pov.holder = PointOfView::Holder::kCharacter;
    const auto pos = static_cast<TonePosition>(std::uniform_int_distribution<int>(0, 3)(rng));
    const auto rel = coin() ? Relevance::kForeground : Relevance::kBackground;
    const auto move = static_cast<Move>(std::uniform_int_distribution<int>(0, 3)(rng));
    const auto affect = static_cast<Affect>(std::uniform_int_distribution<int>(0, 3)(rng));
    const auto disc = static_cast<DiscRel>(std::uniform_int_distribution<int>(0, 6)(rng));
    const auto& func = funcs[std::uniform_int_distribution<std::size_t>(0, funcs.size() - 1)(rng)];
    const ToneChoice c = SelectTone(pos, rel, move, func, disc, pov, affect, f);
    CHECK(WellFormed(c.contour));
    if (c.row) CHECK_NOTHROW(ToneToParams(c.contour, table, *c.row));
  }
}

TEST_CASE("output is byte-identical across runs") {
  const auto a = testing::RunFable();
  for (int run = 0; run < 2; ++run) {
    const auto b = testing::RunFable();
    CHECK(a.markup == b.markup);
    CHECK(a.tobi == b.tobi);
    CHECK(a.groups_text == b.groups_text);
  }
  std::string joined;
  for (const auto& s : testing::SyntheticSentences(500)) joined += s + "\n\n";
  const auto x = RunPipeline(joined, std::nullopt, Config::Defaults());
  for (int run = 0; run < 2; ++run) {
    const auto y = RunPipeline(joined, std::nullopt, Config::Defaults());
    CHECK(x.markup == y.markup);
    CHECK(x.tobi == y.tobi);
  }
}

}  // namespace
}  // namespace prosomark
