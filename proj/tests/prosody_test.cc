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

#include "doctest.h"
#include "prosomark/prosody.h"
#include "test_util.h"

namespace prosomark {
namespace {

PipelineOutput Run(std::string_view text, bool pov = true) {
  Config config = Config::Defaults();
  config.pov_tracking = pov;
  return RunPipeline(text, std::nullopt, config);
}

std::vector<std::string> TobiLines(const std::string& tobi) {
  std::vector<std::string> out;
  for (auto& l : Split(tobi, '\n')) {
    if (!l.empty()) out.push_back(l);
  }
  return out;
}

bool Contains(const std::string& haystack, std::string_view needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST_CASE("break index rules") {
  BreathGroup g;
  BreakContext c;
  CHECK(AssignBreakIndex(g, c) == BreakIndex::kBI1);
  c.enjambed = true;
  CHECK(AssignBreakIndex(g, c) == BreakIndex::kBI2);
  c.head_end = true;
  CHECK(AssignBreakIndex(g, c) == BreakIndex::kBI32);
  c.head_followed_by_dependent = true;
  CHECK(AssignBreakIndex(g, c) == BreakIndex::kBI33);
  c.at_punct = true;
  CHECK(AssignBreakIndex(g, c) == BreakIndex::kBI3);
  c.sentence_final = true;
  CHECK(AssignBreakIndex(g, c) == BreakIndex::kBI3);
  c.paragraph_final = true;
  CHECK(AssignBreakIndex(g, c) == BreakIndex::kBI4);
  c.before_quantifier = true;
  CHECK(AssignBreakIndex(g, c) == BreakIndex::kBI23);
  c.pre_exclamative = true;
  CHECK(AssignBreakIndex(g, c) == BreakIndex::kBI22);
  c.title_final = true;
  CHECK(AssignBreakIndex(g, c) == BreakIndex::kBI44);
}

TEST_CASE("tone selection examples") {
  const PointOfView narrator;
  PointOfView character;
  character.holder = PointOfView::Holder::kCharacter;
  const auto fg = Relevance::kForeground;
  const auto bg = Relevance::kBackground;
  auto tone = [&](TonePosition pos, Relevance r, Move m, const char* func,
                  const PointOfView& pov, Affect a, ToneFlags f = {}) {
    return ToString(SelectTone(pos, r, m, func, DiscRel::kNarration, pov, a, f).contour);
  };
  CHECK(tone(TonePosition::kTitle, bg, Move::kLevel, "main", narrator, Affect::kNeutral) ==
        "H*-L");
  CHECK(tone(TonePosition::kSentenceInitial, fg, Move::kUp, "main", narrator,
             Affect::kNeutral) == "H*-H");
  ToneFlags para;
  para.paragraph_boundary = true;
  CHECK(tone(TonePosition::kSentenceInitial, fg, Move::kUp, "main", narrator,
             Affect::kNeutral, para) == "H*-H-1");
  CHECK(tone(TonePosition::kSentenceInitial, bg, Move::kUp, "main", narrator,
             Affect::kNeutral, para) == "H*-L");
  CHECK(tone(TonePosition::kGroupFinal, bg, Move::kLevel, "main", narrator,
             Affect::kNeutral) == "H*-L%");
  ToneFlags head;
  head.head_end = true;
  CHECK(tone(TonePosition::kGroupFinal, bg, Move::kLevel, "main", narrator, Affect::kNeutral,
             head) == "L-L%");
  CHECK(tone(TonePosition::kGroupFinal, bg, Move::kLevel, "main", character,
             Affect::kExclaim) == "H*-H-1");
  CHECK(tone(TonePosition::kSentenceInternal, fg, Move::kUp, "coord", narrator,
             Affect::kNeutral) == "H*-H-2");
  ToneFlags sub;
  sub.subordinate_marker = true;
  CHECK(tone(TonePosition::kSentenceInternal, bg, Move::kDown, "sub", narrator,
             Affect::kNeutral, sub) == "H*-H-3");
  ToneFlags split;
  split.subject_split = true;
  CHECK(tone(TonePosition::kSentenceInternal, fg, Move::kLevel, "main", narrator,
             Affect::kNeutral, split) == "H-H*-2");
  CHECK(tone(TonePosition::kSentenceInternal, bg, Move::kLevel, "main", narrator,
             Affect::kNeutral, split) == "H-H*-4");
  CHECK(tone(TonePosition::kGroupFinal, bg, Move::kLevel, "main", narrator, Affect::kSad) ==
        "L*-L%");
  CHECK(tone(TonePosition::kSentenceInitial, fg, Move::kUp, "main", narrator,
             Affect::kExhort) == "H*+L-");
}

TEST_CASE("every tone choice names a row that carries it") {
  const MappingTable& table = MappingTable::Default();
  PointOfView character;
  character.holder = PointOfView::Holder::kCharacter;
  for (auto pos : {TonePosition::kTitle, TonePosition::kSentenceInitial,
                   TonePosition::kSentenceInternal, TonePosition::kGroupFinal}) {
    for (auto rel : {Relevance::kForeground, Relevance::kBackground}) {
      for (auto move : {Move::kRoot, Move::kUp, Move::kDown, Move::kLevel}) {
        for (auto affect : {Affect::kNeutral, Affect::kSad, Affect::kExclaim, Affect::kExhort}) {
          for (int bits = 0; bits < 512; bits += 7) {
            ToneFlags f;
            f.paragraph_boundary = bits & 1;
            f.head_end = bits & 2;
            f.predicative_end = bits & 4;
            f.subordinate_marker = bits & 8;
            f.resultative = bits & 16;
            f.question = bits & 32;
            f.speech_open = bits & 64;
            f.subject_split = bits & 128;
            f.split_exclamative = bits & 256;
            const ToneChoice c = SelectTone(pos, rel, move, "coord", DiscRel::kResult,
                                            character, affect, f);
            CHECK(WellFormed(c.contour));
            if (c.row) {
              bool carried = false;
              for (const Label& l : table.row(*c.row).labels()) {
                carried |= l == Label(c.contour);
              }
              CHECK(carried);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("downstep") {
  CHECK(ToString(Downstep(Contour("H*-H-1"))) == "H-!H*-1");
  CHECK(ToString(Downstep(Contour("H*-H-2"))) == "H-!H*-2");
  CHECK(ToString(Downstep(Contour("H*-H"))) == "H-!H*-1");
  CHECK(ToString(Downstep(Contour("H*-H-3"))) == "H-!H*-1");
  const auto chain = ApplyDownstep({Contour("H*-H-1"), Contour("H*-L"), Contour("H*-H")});
  REQUIRE(chain.size() == 3);
  CHECK(ToString(chain[0]) == "H*-H-1");
  CHECK(ToString(chain[1]) == "H-!H*-1");
  CHECK(ToString(chain[2]) == "H-!H*-1");
  CHECK(ApplyDownstep({}).empty());
}

TEST_CASE("point of view: no quotes means narrator throughout") {
  Document d = testing::Doc("The mice met. They talked.");
  const PovTrack track = TrackPointOfView(d, AnnotationSet{}, WordList{"say"});
  REQUIRE(track.spans.size() == 1);
  CHECK_FALSE(track.spans[0].pov.character());
  CHECK(track.diagnostics.empty());
}

TEST_CASE("point of view: speaker from an adjacent communication verb") {
  Document d = testing::Doc("\"You will all agree\", said he, \"that it is so\".");
  const PovTrack track = TrackPointOfView(d, AnnotationSet{}, WordList{"say"});
  int character_spans = 0;
  for (const auto& s : track.spans) {
    if (s.pov.character()) {
      ++character_spans;
      CHECK(s.pov.speaker == "he");
    }
  }
  CHECK(character_spans == 2);
  const PovSpan* first = track.at({0, 1});
  REQUIRE(first != nullptr);
  CHECK(first->pov.character());
}

TEST_CASE("point of view: unclosed quote is closed at paragraph end") {
  Document d = testing::Doc("\"Run, she said.\n\nThe mice ran.");
  const PovTrack track = TrackPointOfView(d, AnnotationSet{}, WordList{"say"});
  CHECK(track.diagnostics.size() == 1);
  const PovSpan* later = track.at({1, 0});
  REQUIRE(later != nullptr);
  CHECK_FALSE(later->pov.character());
}

const char* const kFoxTail =
    "What a noble bird I see above me BI-22 H*-H-1 ! BI-2";

TEST_CASE("direct speech downstep on the fox fixture") {
  const std::string text = testing::ReadFixture("fox_speech.txt");
  const auto with = TobiLines(Run(text).tobi);
  REQUIRE(with.size() == 4);
  CHECK(StartsWith(with[1], kFoxTail));
  CHECK(EndsWith(with[1], "H-!H*-1"));
  CHECK(EndsWith(with[2], "H-!H*-1"));
  CHECK(Contains(with[2], "[[inpt PHON]]hUW[[inpt TEXT]]"));

  const auto without = TobiLines(Run(text, false).tobi);
  REQUIRE(without.size() == 4);
  CHECK(StartsWith(without[1], kFoxTail));
  for (const auto& l : without) CHECK_FALSE(Contains(l, "!H*"));
}

TEST_CASE("frozen exhortative with an address term") {
  const auto out = Run("Come on, baby.");
  CHECK(out.markup ==
        "[[pbas 57.000; rate 170; volm +0.5]]Come [[pbas 36.000; rate 170; volm +0.5]]on , "
        "[[pbas 24.000; rate 130; volm +0.5]]baby[[pbas 60.000; rate 150; volm +0.5]]"
        "[[slnc 100]],[[rset 0]] .\n");
  CHECK(out.tobi == "H*+L- Come on , !L+H*% baby BI-23 .\n");
}

TEST_CASE("frozen matching prefers the longest entry") {
  const FrozenTable table = FrozenTable::Load(DefaultDataDir() + "/frozen.tsv");
  const WordList address = {"baby", "sir"};
  Document d = testing::Doc("Come on, baby.");
  auto m = MatchFrozen(d.sentences[0].tokens, 0, table, address);
  REQUIRE(m.has_value());
  CHECK(m->length() == 3);
  CHECK(m->tail.has_value());
  CHECK(m->params().size() == 6);

  Document plain = testing::Doc("Come on now.");
  auto m2 = MatchFrozen(plain.sentences[0].tokens, 0, table, address);
  REQUIRE(m2.has_value());
  CHECK(m2->length() == 2);
  CHECK_FALSE(m2->tail.has_value());

  CHECK_FALSE(MatchFrozen(plain.sentences[0].tokens, 1, table, address).has_value());
  CHECK_THROWS_AS(FrozenTable::Parse("come on\tcheerful\n"), ParseError);
}

TEST_CASE("quantifier slowdown") {
  Document d = testing::Doc("the mice looked at one another and nobody spoke.");
  const Sentence& s = d.sentences[0];
  BreathGroup g;
  g.from = 0;
  g.to = s.tokens.size() - 2;
  const auto marks = MarkQuantifierSlowdown(g, s, WordList{"nobody"}, WordList{"all"});
  REQUIRE(marks.size() == 1);
  CHECK(s.tokens[marks[0].token].normalized == "nobody");
  CHECK(marks[0].break_after);
  CHECK(marks[0].event.rate.has_value());
}

TEST_CASE("sad affect spans join across coordinators") {
  const TaggedLexicon affect = TaggedLexicon::Load(DefaultDataDir() + "/affect.tsv");
  Document d = testing::Doc("in the sly and treacherous manner of cats.");
  const auto spans = FindAffectSpans(d.sentences[0], affect);
  REQUIRE(spans.size() == 1);
  CHECK(d.sentences[0].tokens[spans[0].from].normalized == "sly");
  CHECK(d.sentences[0].tokens[spans[0].to].normalized == "treacherous");
  CHECK(FindAffectSpans(testing::Doc("the mice met.").sentences[0], affect).empty());
}

TEST_CASE("affect names") {
  CHECK(ParseAffect("sad") == Affect::kSad);
  CHECK_FALSE(ParseAffect("angry").has_value());
}

}  // namespace
}  // namespace prosomark
