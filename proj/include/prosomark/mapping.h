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

#ifndef PROSOMARK_MAPPING_H_
#define PROSOMARK_MAPPING_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prosomark/tobi.h"

namespace prosomark {

class MappingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Context rows of the tone/parameter table.
enum class RowId {
  kTitle,
  kGroupEnd,
  kUpForeground,
  kUpForegroundParagraph,
  kInternalBoundary,
  kHeadEnd,
  kInternalForeground,
  kAdjunctForeground,
  kAdjunctBackground,
  kSpeechExclamative,
  kSad,
  kSubordinateMarker,
  kCoordinateForeground,
  kSpeechElaboration,
  kResultativeInfinitival,
  kSplitExclamative,
  kExhortative,
  kExhortativeTail,
};

std::string_view ToString(RowId id);

// One label with the events that realize it.
struct MappingStep {
  Label label;
  std::vector<ParamEvent> events;
};

struct MappingRow {
  RowId id;
  std::string description;
  std::vector<MappingStep> steps;

  std::vector<Label> labels() const;
  std::vector<ParamEvent> events() const;
};

struct BreakRow {
  BreakIndex bi;
  int silence_ms;
  bool reset;
};

// Register raise after a colon that introduces direct speech.
ParamEvent SpeechLeadIn();

struct MappingTable {
  std::vector<MappingRow> rows;
  std::vector<BreakRow> bi_rows;
  // Events with no ToBI counterpart: the two slowdowns and the register
  // raise that leads into direct speech.
  std::vector<ParamEvent> unlabeled;

  // The transcribed inventory.
  static const MappingTable& Default();

  const MappingRow& row(RowId id) const;
  std::optional<BreakRow> break_row(BreakIndex bi) const;
  std::optional<BreakIndex> break_for(int silence_ms, bool reset) const;
};

// Events realizing one break index: the silence, then a reset if required.
// Throws MappingError for BI0/BI1.
std::vector<ParamEvent> BreakEvents(BreakIndex bi,
                                    const MappingTable& table = MappingTable::Default());

// Parameters of a contour. With `context`, the step of that row carrying
// the contour is used; otherwise the first row that contains it. Throws
// MappingError naming the contour when no row carries it.
std::vector<ParamEvent> ToneToParams(const ToneContour& contour,
                                     const MappingTable& table = MappingTable::Default(),
                                     std::optional<RowId> context = std::nullopt);

// Parameters for a label sequence. A sequence equal to a whole row returns
// that row's events; otherwise labels are mapped one by one.
std::vector<ParamEvent> LabelsToParams(const std::vector<Label>& labels,
                                       const MappingTable& table = MappingTable::Default());

// Greedy longest-match labelling over rows, row steps and break rows.
// Fused silence+parameter events are split first. Bare resets and the
// table's unlabeled events are skipped. Unmatched events yield
// UnknownLabel and a diagnostic line in `diagnostics` when given.
std::vector<Label> ParamsToTobi(const std::vector<ParamEvent>& events,
                                const MappingTable& table = MappingTable::Default(),
                                std::vector<std::string>* diagnostics = nullptr);

}  // namespace prosomark

#endif  // PROSOMARK_MAPPING_H_
