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

#ifndef PROSOMARK_TESTS_TEST_UTIL_H_
#define PROSOMARK_TESTS_TEST_UTIL_H_

#include <random>
#include <string>
#include <vector>

#include "prosomark/config.h"
#include "prosomark/lexicon.h"

namespace prosomark::testing {

inline std::string Fixture(const std::string& name) {
  return std::string(PROSOMARK_FIXTURE_DIR) + "/" + name;
}

inline std::string ReadFixture(const std::string& name) { return ReadFile(Fixture(name)); }

// Document built with the shipped lexica.
inline Document Doc(std::string_view text, TitleMode mode = TitleMode::kAuto) {
  static const MultiwordLexicon kMultiwords =
      MultiwordLexicon::Load(DefaultDataDir() + "/multiwords.txt");
  return SplitDocument(Tokenize(text, kMultiwords), text, mode);
}

// The fable run with its gold sidecar and fixture config.
inline PipelineOutput RunFable(Config config = LoadConfig(Fixture("belling_the_cat.conf"))) {
  return RunPipeline(ReadFixture("belling_the_cat.txt"), ReadFixture("belling_the_cat.ann"),
                     config);
}

// Random sentences from a small grammar, with commas, quotes, quantifiers,
// frozen expressions and affect words mixed in. Deterministic in `seed`.
inline std::vector<std::string> SyntheticSentences(std::size_t n, unsigned seed = 20261016) {
  static const std::vector<std::string> kSubjects = {
      "the mice", "a young mouse", "the old cat", "nobody", "everybody", "she", "the fox",
      "all the birds", "the poor crow"};
  static const std::vector<std::string> kVerbs = {
      "looked at", "said", "met", "proposed", "saw", "got up and said", "could escape from",
      "would meet", "agreed with"};
  static const std::vector<std::string> kObjects = {
      "the cat", "a small bell", "one another", "the sly and treacherous enemy", "her",
      "a general council", "the neck of the cat", "something"};
  static const std::vector<std::string> kJoins = {", and ", " and ", ", but ", " because ",
                                                  ", which ", " while ", " that "};
  static const std::vector<std::string> kEnds = {".", "!", "?", ".", "."};
  std::mt19937 rng(seed);
  auto pick = [&](const std::vector<std::string>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string s = pick(kSubjects) + " " + pick(kVerbs) + " " + pick(kObjects);
    const int extra = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int k = 0; k < extra; ++k) {
      s += pick(kJoins) + pick(kSubjects) + " " + pick(kVerbs) + " " + pick(kObjects);
    }
    s += pick(kEnds);
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
      case 0: s = "\"" + s + "\""; break;
      case 1: s = "Come on, baby. " + s; break;
      case 2: s = "Long ago, " + s; break;
      default: break;
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace prosomark::testing

#endif  // PROSOMARK_TESTS_TEST_UTIL_H_
