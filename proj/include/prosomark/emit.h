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

#ifndef PROSOMARK_EMIT_H_
#define PROSOMARK_EMIT_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "prosomark/ingest.h"
#include "prosomark/mapping.h"
#include "prosomark/tobi.h"

namespace prosomark {

class ScriptError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// How an item joins its neighbours in the markup text.
enum class Glue {
  kNone,   // separated by a space on both sides
  kLeft,   // written directly after the previous item
  kRight,  // the next item is written directly after this one
};

struct ScriptItem {
  enum class Kind { kToken, kEvent };

  Kind kind = Kind::kToken;
  std::size_t sentence = 0;  // owning sentence (events: the sentence they belong to)
  std::size_t token = 0;     // position in Sentence::tokens; unused for events
  ParamEvent event;
  Glue glue = Glue::kNone;
  std::vector<Label> labels;  // ToBI labels realized by this event

  static ScriptItem Word(std::size_t sentence, std::size_t token);
  static ScriptItem Event(std::size_t sentence, const ParamEvent& e, Glue glue,
                          std::vector<Label> labels = {});
};

// Per breath group summary: the boundary at its end and its contours.
struct GroupRecord {
  std::size_t sentence = 0;
  std::size_t group = 0;
  BreakIndex bi = BreakIndex::kBI1;
  std::vector<ToneContour> contours;
};

struct ProsodicScript {
  std::vector<ScriptItem> items;
  std::vector<GroupRecord> groups;
};

// Structural problems: token order, silence/reset pairing, invalid events.
// Empty when the script is renderable.
std::vector<std::string> ValidateScript(const Document& doc, const ProsodicScript& script,
                                        const MappingTable& table = MappingTable::Default());

// Embedded-command text, one paragraph per block separated by a blank line.
// Throws ScriptError when ValidateScript reports a problem.
std::string RenderMarkup(const Document& doc, const ProsodicScript& script,
                         const MappingTable& table = MappingTable::Default());

// One line per sentence with labels inline. Quote marks are left out; a
// reset that does not close a silence is printed as its command.
std::string RenderTobi(const Document& doc, const ProsodicScript& script);

// Markup for a word token, with the phonetic override when present.
std::string RenderWord(const Token& t);

// Checks the pairing invariant on emitted text: every silence that needs a
// reset is followed by ",[[rset 0]]" and no other silence is. Returns one
// message per violation.
std::vector<std::string> CheckPairing(std::string_view markup,
                                      const MappingTable& table = MappingTable::Default());

}  // namespace prosomark

#endif  // PROSOMARK_EMIT_H_
