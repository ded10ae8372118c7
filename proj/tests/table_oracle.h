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

#ifndef PROSOMARK_TESTS_TABLE_ORACLE_H_
#define PROSOMARK_TESTS_TABLE_ORACLE_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "prosomark/mapping.h"
#include "prosomark/tobi.h"

namespace prosomark::testing {

inline std::vector<ParamEvent> Events(std::initializer_list<const char*> commands) {
  std::vector<ParamEvent> out;
  for (const char* c : commands) {
    auto e = ParseEvent(c);
    if (!e) throw std::invalid_argument(std::string("bad command: ") + c);
    out.push_back(*e);
  }
  return out;
}

struct TableRow {
  RowId id;
  std::vector<std::string> labels;
  std::vector<ParamEvent> events;
};

// Independent transcription of the tone/parameter table, in command form.
inline std::vector<TableRow> ExpectedRows() {
  return {
      {RowId::kTitle, {"H*-L"}, Events({"pbas 38.000; rate 160; volm +0.5"})},
      {RowId::kGroupEnd,
       {"H*-L%", "BI-3"},
       Events({"pbas 38.000; rate 130; volm +0.3", "slnc 200", "rset 0"})},
      {RowId::kUpForeground, {"H*-H"}, Events({"pbas 44.000; rate 140; volm +0.3"})},
      {RowId::kUpForegroundParagraph, {"H*-H-1"}, Events({"pbas 54.000; rate 170; volm +0.3"})},
      {RowId::kInternalBoundary, {"H*-L%-1"}, Events({"pbas 40.000; rate 140; volm +0.3"})},
      {RowId::kHeadEnd,
       {"L-L%", "BI-33"},
       Events({"pbas 36.000; rate 110; volm +0.5", "slnc 50", "rset 0"})},
      {RowId::kInternalForeground, {"H*-L"}, Events({"pbas 40.000; rate 150; volm +0.5"})},
      {RowId::kAdjunctForeground, {"H-H*-2"}, Events({"pbas 50.000; rate 120; volm +0.5"})},
      {RowId::kAdjunctBackground,
       {"H-H*-4", "H*-L%-2", "BI-3"},
       Events({"pbas 40.000; rate 120; volm +0.5", "pbas 38.000; rate 130; volm +0.3",
               "slnc 200", "rset 0"})},
      {RowId::kSpeechExclamative,
       {"BI-44", "H*-H%"},
       Events({"slnc 400", "pbas 54.000; rate 170; volm +0.3"})},
      {RowId::kSad, {"L*-L%"}, Events({"pbas 36.000; rate 110; volm -0.2", "rset 0"})},
      {RowId::kSubordinateMarker,
       {"H*-H-3", "H-!H*-2"},
       Events({"pbas 48.000; rate 150; volm +0.3", "pbas 44.000; rate 140; volm +0.3"})},
      {RowId::kCoordinateForeground,
       {"H*-H-2", "H-!H*-2"},
       Events({"pbas 50.000; rate 120; volm +0.5", "pbas 44.000; rate 140; volm +0.3"})},
      {RowId::kSpeechElaboration,
       {"H*-H-1", "H-!H*-1"},
       Events({"pbas 54.000; rate 170; volm +0.3", "pbas 50.000; rate 160; volm +0.5"})},
      {RowId::kResultativeInfinitival,
       {"H-!L*", "H-!L*"},
       Events({"slnc 100; pbas 40.000; rate 150; volm +0.5",
               "slnc 100; pbas 38.000; rate 150; volm +0.5"})},
      {RowId::kSplitExclamative,
       {"H*+L%"},
       Events({"pbas 54.000; rate 170; volm +0.3", "pbas 36.000; rate 110; volm -0.2",
               "rset 0"})},
      {RowId::kExhortative,
       {"H*+L-"},
       Events({"pbas 57.000; rate 170; volm +0.5", "pbas 36.000; rate 170; volm +0.5"})},
      {RowId::kExhortativeTail,
       {"!L+H*%", "BI-23"},
       Events({"pbas 24.000; rate 130; volm +0.5", "pbas 60.000; rate 150; volm +0.5",
               "slnc 100", "rset 0"})},
  };
}

}  // namespace prosomark::testing

#endif  // PROSOMARK_TESTS_TABLE_ORACLE_H_
