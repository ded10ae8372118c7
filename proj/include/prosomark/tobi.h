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

#ifndef PROSOMARK_TOBI_H_
#define PROSOMARK_TOBI_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace prosomark {

// Extended break-index inventory. BI0 and BI1 exist for completeness only.
enum class BreakIndex {
  kBI0,
  kBI1,
  kBI2,
  kBI3,
  kBI4,
  kBI22,
  kBI23,
  kBI32,
  kBI33,
  kBI44
};

// Rendered as "BI-3", "BI-44", ...
std::string ToString(BreakIndex bi);
// Accepts "BI-3", "BI3" and "BI 3".
std::optional<BreakIndex> ParseBreakIndex(std::string_view s);
// The eight indices the pipeline realizes as silences.
const std::vector<BreakIndex>& EmittedBreakIndices();

enum class Tone { kNone, kH, kL };

enum class Accent { kNone, kHstar, kLstar, kHstarPlusL, kDownLPlusHstar };

struct ToneContour {
  Tone lead = Tone::kNone;  // leading tone in "H-H*"
  Accent accent = Accent::kNone;
  bool downstepped = false;  // "!H*", "!L*"
  Tone phrase = Tone::kNone;
  Tone boundary = Tone::kNone;  // rendered with '%'
  std::optional<int> variant;   // trailing intensity index

  bool bitonal() const {
    return accent == Accent::kHstarPlusL || accent == Accent::kDownLPlusHstar;
  }
  // Bitonal accents close with either '-' (phrase edge) or '%'.
  bool operator==(const ToneContour&) const = default;
};

// True when the contour satisfies the structural constraints: downstep
// needs a simple accent, bitonals carry no phrase tone and at most one edge.
bool WellFormed(const ToneContour& c);

std::string ToString(const ToneContour& c);
std::optional<ToneContour> ParseContour(std::string_view s);

// Shorthand used throughout the tables: Contour("H*-L%-1").
ToneContour Contour(std::string_view label);

struct UnknownLabel {
  bool operator==(const UnknownLabel&) const = default;
};

using Label = std::variant<ToneContour, BreakIndex, UnknownLabel>;

std::string ToString(const Label& l);
// BI labels first, then contours; anything else is UnknownLabel ("X-?").
Label ParseLabel(std::string_view s);

// One embedded synthesizer command. Values are stored in fixed point so
// that equality is exact: pbas in thousandths, volm in tenths.
struct ParamEvent {
  std::optional<int> slnc;        // milliseconds
  std::optional<int> pbas_milli;  // 38.000 -> 38000
  std::optional<int> rate;
  std::optional<int> volm_tenths;  // +0.5 -> 5
  bool rset = false;

  static ParamEvent Tuple(int pbas, int rate, int volm_tenths);
  static ParamEvent Slow(int rate, int volm_tenths);
  static ParamEvent Silence(int ms);
  static ParamEvent Reset();

  bool empty() const {
    return !slnc && !pbas_milli && !rate && !volm_tenths && !rset;
  }
  bool silence_only() const {
    return slnc && !pbas_milli && !rate && !volm_tenths && !rset;
  }
  bool has_tuple() const { return pbas_milli || rate || volm_tenths; }
  // At least one field; a reset stands alone.
  bool Valid() const { return !empty() && (!rset || (!slnc && !has_tuple())); }

  bool operator==(const ParamEvent&) const = default;
};

// `[[slnc 100; pbas 48.000; rate 150; volm +0.3]]`, `[[rset 0]]`.
std::string Render(const ParamEvent& e);

// Parses the body or the full bracketed form of one command. Returns
// nullopt for commands that are not parameter events (e.g. `inpt`).
std::optional<ParamEvent> ParseEvent(std::string_view command);

// Every parameter event in a markup text, in order.
std::vector<ParamEvent> ScanEvents(std::string_view markup);

// Removes all `[[...]]` commands and the commas that join a silence to its
// reset, then collapses whitespace to single spaces.
std::string StripCommands(std::string_view markup);

// Splits events carrying both a silence and parameters into the silence
// followed by the remainder.
std::vector<ParamEvent> SplitFused(const std::vector<ParamEvent>& events);

}  // namespace prosomark

#endif  // PROSOMARK_TOBI_H_
