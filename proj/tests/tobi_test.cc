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

#include <tuple>

#include "doctest.h"
#include "prosomark/mapping.h"
#include "prosomark/tobi.h"
#include "table_oracle.h"

namespace prosomark {
namespace {

using testing::Events;
using testing::ExpectedRows;
using testing::TableRow;

std::vector<std::string> LabelStrings(const std::vector<Label>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(ToString(l));
  return out;
}

TEST_CASE("contour parse and render round trip") {
  for (const char* s : {"H*-L", "H*-L%", "H*-H-1", "H*-L%-1", "L-L%", "H-H*-2", "H-!H*-1",
                        "H*-H%", "L*-L%", "H-!L*", "H*+L%", "H*+L-", "!L+H*%"}) {
    CAPTURE(s);
    auto c = ParseContour(s);
    REQUIRE(c.has_value());
    CHECK(WellFormed(*c));
    CHECK(ToString(*c) == s);
  }
}

TEST_CASE("contour fields") {
  const ToneContour c = Contour("H-!H*-2");
  CHECK(c.lead == Tone::kH);
  CHECK(c.accent == Accent::kHstar);
  CHECK(c.downstepped);
  CHECK(c.variant == 2);
  CHECK(Contour("H*+L-").bitonal());
  CHECK_FALSE(Contour("H*-L%").bitonal());
  CHECK(Contour("H*-L%").boundary == Tone::kL);
}

TEST_CASE("malformed contours are rejected") {
  for (const char* s : {"", "Q*", "H*-", "H*-L%-", "H*-L%-x", "!H*+L-"}) {
    CAPTURE(s);
    auto c = ParseContour(s);
    CHECK((!c || !WellFormed(*c)));
  }
  CHECK_THROWS(Contour("nonsense"));
}

TEST_CASE("labels") {
  CHECK(std::holds_alternative<BreakIndex>(ParseLabel("BI-33")));
  CHECK(std::holds_alternative<ToneContour>(ParseLabel("H*-H")));
  CHECK(std::holds_alternative<UnknownLabel>(ParseLabel("Z%")));
  CHECK(ToString(ParseLabel("Z%")) == "X-?");
  CHECK(ParseBreakIndex("BI 3") == BreakIndex::kBI3);
  CHECK(ParseBreakIndex("BI3") == BreakIndex::kBI3);
  CHECK(ParseBreakIndex("BI-44") == BreakIndex::kBI44);
  CHECK_FALSE(ParseBreakIndex("BI-5").has_value());
}

TEST_CASE("event rendering and parsing") {
  const ParamEvent t = ParamEvent::Tuple(38, 130, 3);
  CHECK(Render(t) == "[[pbas 38.000; rate 130; volm +0.3]]");
  CHECK(Render(ParamEvent::Tuple(36, 110, -2)) == "[[pbas 36.000; rate 110; volm -0.2]]");
  CHECK(Render(ParamEvent::Silence(200)) == "[[slnc 200]]");
  CHECK(Render(ParamEvent::Reset()) == "[[rset 0]]");
  CHECK(ParseEvent(Render(t)) == t);
  CHECK(ParseEvent("slnc 100;pbas 48.000; rate 150; volm +0.3")->slnc == 100);
  CHECK_FALSE(ParseEvent("inpt PHON").has_value());
  CHECK_FALSE(ParseEvent("rset 0; slnc 100")->Valid());
  CHECK(ParamEvent::Reset().Valid());
  CHECK_FALSE(ParamEvent{}.Valid());
}

TEST_CASE("scan, strip and split") {
  const std::string m =
      "[[pbas 44.000; rate 140; volm +0.3]]Long ago [[slnc 200]],[[rset 0]] , the "
      "[[slnc 100; pbas 48.000; rate 150; volm +0.3]]mice";
  CHECK(ScanEvents(m).size() == 4);
  CHECK(StripCommands(m) == "Long ago , the mice");
  const auto split = SplitFused(ScanEvents(m));
  REQUIRE(split.size() == 5);
  CHECK(split[3] == ParamEvent::Silence(100));
  CHECK(split[4] == ParamEvent::Tuple(48, 150, 3));
}

TEST_CASE("break index table is a bijection onto (silence, reset)") {
  const MappingTable& table = MappingTable::Default();
  const std::vector<std::tuple<BreakIndex, int, bool>> expected = {
      {BreakIndex::kBI4, 300, true},   {BreakIndex::kBI3, 200, true},
      {BreakIndex::kBI2, 100, false},  {BreakIndex::kBI32, 30, true},
      {BreakIndex::kBI33, 50, true},   {BreakIndex::kBI23, 100, true},
      {BreakIndex::kBI22, 300, false}, {BreakIndex::kBI44, 400, false},
  };
  CHECK(EmittedBreakIndices().size() == expected.size());
  for (const auto& [bi, ms, reset] : expected) {
    CAPTURE(ToString(bi));
    auto row = table.break_row(bi);
    REQUIRE(row.has_value());
    CHECK(row->silence_ms == ms);
    CHECK(row->reset == reset);
    CHECK(table.break_for(ms, reset) == bi);
    std::vector<ParamEvent> events = BreakEvents(bi);
    CHECK(events.front() == ParamEvent::Silence(ms));
    CHECK(events.size() == (reset ? 2u : 1u));
    CHECK(ParamsToTobi(events) == std::vector<Label>{bi});
  }
  CHECK_THROWS_AS(BreakEvents(BreakIndex::kBI1), MappingError);
  CHECK_FALSE(table.break_for(250, true).has_value());
}

TEST_CASE("every table row matches the transcription and inverts") {
  const MappingTable& table = MappingTable::Default();
  const auto expected = ExpectedRows();
  CHECK(table.rows.size() == expected.size());
  for (const TableRow& want : expected) {
    CAPTURE(ToString(want.id));
    const MappingRow& row = table.row(want.id);
    CHECK(LabelStrings(row.labels()) == want.labels);
    CHECK(row.events() == SplitFused(want.events));

    // tone_to_params per contour step, in the row's context.
    std::vector<ParamEvent> from_tones;
    for (const MappingStep& step : row.steps) {
      if (const auto* c = std::get_if<ToneContour>(&step.label)) {
        auto ev = ToneToParams(*c, table, want.id);
        from_tones.insert(from_tones.end(), ev.begin(), ev.end());
      } else if (const auto* bi = std::get_if<BreakIndex>(&step.label)) {
        auto ev = BreakEvents(*bi, table);
        from_tones.insert(from_tones.end(), ev.begin(), ev.end());
      }
    }
    // The resultative row repeats its contour, so only the whole-row lookup
    // can tell its two steps apart.
    if (want.id != RowId::kResultativeInfinitival) {
      CHECK(from_tones == SplitFused(want.events));
    } else {
      CHECK(ToneToParams(Contour("H-!L*"), table, want.id) ==
            Events({"slnc 100", "pbas 40.000; rate 150; volm +0.5"}));
    }
    // The title and internal-foreground rows share the label H*-L.
    if (want.id != RowId::kInternalForeground) {
      CHECK(LabelsToParams(row.labels(), table) == SplitFused(want.events));
    }

    // params_to_tobi inverts the row.
    std::vector<std::string> diags;
    CHECK(LabelStrings(ParamsToTobi(want.events, table, &diags)) == want.labels);
    CHECK(diags.empty());
  }
}

TEST_CASE("title break is a bare long silence") {
  CHECK(ParamsToTobi({ParamEvent::Silence(400)}) == std::vector<Label>{BreakIndex::kBI44});
}

TEST_CASE("unknown tuples label as X-? with a diagnostic") {
  std::vector<std::string> diags;
  auto labels = ParamsToTobi({ParamEvent::Tuple(99, 100, 1)}, MappingTable::Default(), &diags);
  REQUIRE(labels.size() == 1);
  CHECK(ToString(labels[0]) == "X-?");
  CHECK(diags.size() == 1);
}

TEST_CASE("unlabeled events are skipped silently") {
  std::vector<std::string> diags;
  auto labels = ParamsToTobi({ParamEvent::Slow(110, 3), SpeechLeadIn(), ParamEvent::Reset()},
                             MappingTable::Default(), &diags);
  CHECK(labels.empty());
  CHECK(diags.empty());
}

TEST_CASE("contour without a row is a mapping error") {
  CHECK_THROWS_AS(ToneToParams(Contour("L*-H%")), MappingError);
}

}  // namespace
}  // namespace prosomark
