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

#include "prosomark/mapping.h"

#include <algorithm>

namespace prosomark {
namespace {

using E = ParamEvent;

MappingStep Step(std::string_view label, std::vector<ParamEvent> events) {
  return {ParseLabel(label), std::move(events)};
}

std::vector<ParamEvent> SilenceReset(int ms) { return {E::Silence(ms), E::Reset()}; }

MappingTable Build() {
  MappingTable t;
  t.rows = {
      {RowId::kTitle, "title at the start of the text",
       {Step("H*-L", {E::Tuple(38, 160, 5)})}},
      {RowId::kGroupEnd, "end of a breath group inside the sentence",
       {Step("H*-L%", {E::Tuple(38, 130, 3)}), Step("BI-3", SilenceReset(200))}},
      {RowId::kUpForeground, "sentence start with up move and foreground relevance",
       {Step("H*-H", {E::Tuple(44, 140, 3)})}},
      {RowId::kUpForegroundParagraph,
       "sentence start with up move and foreground relevance after a paragraph break",
       {Step("H*-H-1", {E::Tuple(54, 170, 3)})}},
      {RowId::kInternalBoundary, "sentence-internal breath group boundary",
       {Step("H*-L%-1", {E::Tuple(40, 140, 3)})}},
      {RowId::kHeadEnd, "end of a breath group on a syntactic head",
       {Step("L-L%", {E::Tuple(36, 110, 5)}), Step("BI-33", SilenceReset(50))}},
      {RowId::kInternalForeground, "sentence-internal foreground",
       {Step("H*-L", {E::Tuple(40, 150, 5)})}},
      {RowId::kAdjunctForeground, "adjunct clause with foreground relevance",
       {Step("H-H*-2", {E::Tuple(50, 120, 5)})}},
      {RowId::kAdjunctBackground, "adjunct clause with background relevance",
       {Step("H-H*-4", {E::Tuple(40, 120, 5)}), Step("H*-L%-2", {E::Tuple(38, 130, 3)}),
        Step("BI-3", SilenceReset(200))}},
      {RowId::kSpeechExclamative, "direct speech boundary with exclamative",
       {Step("BI-44", {E::Silence(400)}), Step("H*-H%", {E::Tuple(54, 170, 3)})}},
      {RowId::kSad, "sad affect on a word or phrase",
       {Step("L*-L%", {E::Tuple(36, 110, -2), E::Reset()})}},
      {RowId::kSubordinateMarker, "discourse marker opening a subordinate clause",
       {Step("H*-H-3", {E::Tuple(48, 150, 3)}), Step("H-!H*-2", {E::Tuple(44, 140, 3)})}},
      {RowId::kCoordinateForeground, "coordinate clause with foreground relevance",
       {Step("H*-H-2", {E::Tuple(50, 120, 5)}), Step("H-!H*-2", {E::Tuple(44, 140, 3)})}},
      {RowId::kSpeechElaboration, "direct speech with elaboration or explanation",
       {Step("H*-H-1", {E::Tuple(54, 170, 3)}), Step("H-!H*-1", {E::Tuple(50, 160, 5)})}},
      {RowId::kResultativeInfinitival, "declarative with a resultative infinitival",
       {Step("H-!L*", {E::Silence(100), E::Tuple(40, 150, 5)}),
        Step("H-!L*", {E::Silence(100), E::Tuple(38, 150, 5)})}},
      {RowId::kSplitExclamative, "exclamative split from its clause",
       {Step("H*+L%", {E::Tuple(54, 170, 3), E::Tuple(36, 110, -2), E::Reset()})}},
      {RowId::kExhortative, "exhortative frozen expression",
       {Step("H*+L-", {E::Tuple(57, 170, 5), E::Tuple(36, 170, 5)})}},
      {RowId::kExhortativeTail, "address term closing an exhortative",
       {Step("!L+H*%", {E::Tuple(24, 130, 5), E::Tuple(60, 150, 5)}),
        Step("BI-23", SilenceReset(100))}},
  };
  t.bi_rows = {
      {BreakIndex::kBI4, 300, true},   {BreakIndex::kBI3, 200, true},
      {BreakIndex::kBI2, 100, false},  {BreakIndex::kBI32, 30, true},
      {BreakIndex::kBI33, 50, true},   {BreakIndex::kBI23, 100, true},
      {BreakIndex::kBI22, 300, false}, {BreakIndex::kBI44, 400, false},
  };
  t.unlabeled = {E::Slow(110, 3), E::Slow(130, 5), SpeechLeadIn()};
  return t;
}

bool MatchesAt(const std::vector<ParamEvent>& events, std::size_t at,
               const std::vector<ParamEvent>& pattern) {
  if (pattern.empty() || at + pattern.size() > events.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), events.begin() + at);
}

}  // namespace

std::string_view ToString(RowId id) {
  switch (id) {
    case RowId::kTitle: return "title";
    case RowId::kGroupEnd: return "group-end";
    case RowId::kUpForeground: return "up-foreground";
    case RowId::kUpForegroundParagraph: return "up-foreground-paragraph";
    case RowId::kInternalBoundary: return "internal-boundary";
    case RowId::kHeadEnd: return "head-end";
    case RowId::kInternalForeground: return "internal-foreground";
    case RowId::kAdjunctForeground: return "adjunct-foreground";
    case RowId::kAdjunctBackground: return "adjunct-background";
    case RowId::kSpeechExclamative: return "speech-exclamative";
    case RowId::kSad: return "sad";
    case RowId::kSubordinateMarker: return "subordinate-marker";
    case RowId::kCoordinateForeground: return "coordinate-foreground";
    case RowId::kSpeechElaboration: return "speech-elaboration";
    case RowId::kResultativeInfinitival: return "resultative-infinitival";
    case RowId::kSplitExclamative: return "split-exclamative";
    case RowId::kExhortative: return "exhortative";
    case RowId::kExhortativeTail: return "exhortative-tail";
  }
  return "?";
}

std::vector<Label> MappingRow::labels() const {
  std::vector<Label> out;
  for (const auto& s : steps) out.push_back(s.label);
  return out;
}

std::vector<ParamEvent> MappingRow::events() const {
  std::vector<ParamEvent> out;
  for (const auto& s : steps) out.insert(out.end(), s.events.begin(), s.events.end());
  return out;
}

ParamEvent SpeechLeadIn() { return ParamEvent::Tuple(48, 130, 9); }

const MappingTable& MappingTable::Default() {
  static const MappingTable kTable = Build();
  return kTable;
}

const MappingRow& MappingTable::row(RowId id) const {
  for (const auto& r : rows) {
    if (r.id == id) return r;
  }
  throw MappingError("no row " + std::string(ToString(id)));
}

std::optional<BreakRow> MappingTable::break_row(BreakIndex bi) const {
  for (const auto& r : bi_rows) {
    if (r.bi == bi) return r;
  }
  return std::nullopt;
}

std::optional<BreakIndex> MappingTable::break_for(int silence_ms, bool reset) const {
  for (const auto& r : bi_rows) {
    if (r.silence_ms == silence_ms && r.reset == reset) return r.bi;
  }
  return std::nullopt;
}

std::vector<ParamEvent> BreakEvents(BreakIndex bi, const MappingTable& table) {
  auto r = table.break_row(bi);
  if (!r) throw MappingError("break index " + ToString(bi) + " has no realization");
  std::vector<ParamEvent> out = {ParamEvent::Silence(r->silence_ms)};
  if (r->reset) out.push_back(ParamEvent::Reset());
  return out;
}

std::vector<ParamEvent> ToneToParams(const ToneContour& contour,
                                     const MappingTable& table,
                                     std::optional<RowId> context) {
  const Label wanted = contour;
  auto find_in = [&](const MappingRow& r) -> const MappingStep* {
    for (const auto& s : r.steps) {
      if (s.label == wanted) return &s;
    }
    return nullptr;
  };
  if (context) {
    if (const MappingStep* s = find_in(table.row(*context))) return s->events;
  }
  for (const auto& r : table.rows) {
    if (const MappingStep* s = find_in(r)) return s->events;
  }
  throw MappingError("unmapped contour " + ToString(contour));
}

std::vector<ParamEvent> LabelsToParams(const std::vector<Label>& labels,
                                       const MappingTable& table) {
  for (const auto& r : table.rows) {
    if (r.labels() == labels) return r.events();
  }
  std::vector<ParamEvent> out;
  for (const auto& l : labels) {
    std::vector<ParamEvent> part;
    if (const auto* bi = std::get_if<BreakIndex>(&l)) {
      part = BreakEvents(*bi, table);
    } else if (const auto* c = std::get_if<ToneContour>(&l)) {
      part = ToneToParams(*c, table);
    } else {
      throw MappingError("unmapped label X-?");
    }
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Label> ParamsToTobi(const std::vector<ParamEvent>& raw,
                                const MappingTable& table,
                                std::vector<std::string>* diagnostics) {
  const std::vector<ParamEvent> events = SplitFused(raw);
  std::vector<Label> out;
  std::size_t i = 0;
  while (i < events.size()) {
    // Longest candidate wins; ties go to the earlier row.
    std::size_t best_len = 0;
    std::vector<Label> best;
    auto consider = [&](const std::vector<ParamEvent>& pattern,
                        const std::vector<Label>& labels) {
      if (pattern.size() > best_len && MatchesAt(events, i, pattern)) {
        best_len = pattern.size();
        best = labels;
      }
    };
    for (const auto& r : table.rows) consider(SplitFused(r.events()), r.labels());
    for (const auto& r : table.rows) {
      for (const auto& s : r.steps) consider(SplitFused(s.events), {s.label});
    }
    for (const auto& b : table.bi_rows) {
      std::vector<ParamEvent> pattern = {ParamEvent::Silence(b.silence_ms)};
      if (b.reset) pattern.push_back(ParamEvent::Reset());
      consider(pattern, {b.bi});
    }
    const bool unlabeled = std::find(table.unlabeled.begin(), table.unlabeled.end(),
                                     events[i]) != table.unlabeled.end();
    if (best_len == 0 && (events[i].rset || unlabeled)) {
      ++i;  // a bare reset closes an earlier contour and has no label
      continue;
    }
    if (best_len == 0) {
      if (diagnostics) {
        diagnostics->push_back("unmapped parameter event " + Render(events[i]));
      }
      out.push_back(UnknownLabel{});
      ++i;
      continue;
    }
    out.insert(out.end(), best.begin(), best.end());
    i += best_len;
  }
  return out;
}

}  // namespace prosomark
