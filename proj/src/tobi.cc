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

#include "prosomark/tobi.h"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "prosomark/lexicon.h"

namespace prosomark {
namespace {

struct BiName {
  BreakIndex bi;
  const char* digits;
};

constexpr BiName kBiNames[] = {
    {BreakIndex::kBI0, "0"},   {BreakIndex::kBI1, "1"},
    {BreakIndex::kBI2, "2"},   {BreakIndex::kBI3, "3"},
    {BreakIndex::kBI4, "4"},   {BreakIndex::kBI22, "22"},
    {BreakIndex::kBI23, "23"}, {BreakIndex::kBI32, "32"},
    {BreakIndex::kBI33, "33"}, {BreakIndex::kBI44, "44"}};

std::string ToneName(Tone t) { return t == Tone::kH ? "H" : "L"; }

std::optional<Tone> ParseTone(std::string_view s) {
  if (s == "H") return Tone::kH;
  if (s == "L") return Tone::kL;
  return std::nullopt;
}

std::string AccentName(Accent a, bool downstepped) {
  std::string bang = downstepped ? "!" : "";
  switch (a) {
    case Accent::kHstar:
      return bang + "H*";
    case Accent::kLstar:
      return bang + "L*";
    case Accent::kHstarPlusL:
      return "H*+L";
    case Accent::kDownLPlusHstar:
      return "!L+H*";
    case Accent::kNone:
      break;
  }
  return "";
}

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::optional<double> ParseNumber(std::string_view s) {
  std::string buf(s);
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size()) return std::nullopt;
  return v;
}

std::string Signed(int tenths) {
  std::string out = tenths < 0 ? "-" : "+";
  int a = std::abs(tenths);
  out += std::to_string(a / 10) + "." + std::to_string(a % 10);
  return out;
}

std::string Milli(int milli) {
  std::string frac = std::to_string(std::abs(milli) % 1000);
  frac.insert(0, 3 - frac.size(), '0');
  return (milli < 0 ? "-" : "") + std::to_string(std::abs(milli) / 1000) + "." +
         frac;
}

}  // namespace

std::string ToString(BreakIndex bi) {
  for (const auto& n : kBiNames) {
    if (n.bi == bi) return std::string("BI-") + n.digits;
  }
  return "BI-?";
}

std::optional<BreakIndex> ParseBreakIndex(std::string_view s) {
  if (!StartsWith(s, "BI")) return std::nullopt;
  s.remove_prefix(2);
  if (!s.empty() && (s.front() == '-' || s.front() == ' ')) s.remove_prefix(1);
  for (const auto& n : kBiNames) {
    if (s == n.digits) return n.bi;
  }
  return std::nullopt;
}

const std::vector<BreakIndex>& EmittedBreakIndices() {
  static const std::vector<BreakIndex> kEmitted = {
      BreakIndex::kBI4,  BreakIndex::kBI3,  BreakIndex::kBI2,
      BreakIndex::kBI32, BreakIndex::kBI33, BreakIndex::kBI23,
      BreakIndex::kBI22, BreakIndex::kBI44};
  return kEmitted;
}

bool WellFormed(const ToneContour& c) {
  if (c.downstepped &&
      c.accent != Accent::kHstar && c.accent != Accent::kLstar) {
    return false;
  }
  if (c.bitonal()) {
    if (c.lead != Tone::kNone) return false;
    // Exactly one edge: phrase ('-') or boundary ('%').
    return (c.phrase == Tone::kNone) != (c.boundary == Tone::kNone) ||
           (c.phrase == Tone::kNone && c.boundary == Tone::kNone);
  }
  if (c.lead != Tone::kNone && c.accent == Accent::kNone) return false;
  return c.accent != Accent::kNone || c.phrase != Tone::kNone ||
         c.boundary != Tone::kNone;
}

std::string ToString(const ToneContour& c) {
  std::string out;
  if (c.bitonal()) {
    // Bitonal edges attach without a separator: "H*+L-", "!L+H*%".
    out = AccentName(c.accent, false);
    if (c.boundary != Tone::kNone) {
      out += "%";
    } else if (c.phrase != Tone::kNone) {
      out += "-";
    }
  } else {
    std::vector<std::string> parts;
    if (c.lead != Tone::kNone) parts.push_back(ToneName(c.lead));
    if (c.accent != Accent::kNone) parts.push_back(AccentName(c.accent, c.downstepped));
    if (c.phrase != Tone::kNone) parts.push_back(ToneName(c.phrase));
    if (c.boundary != Tone::kNone) parts.push_back(ToneName(c.boundary) + "%");
    out = Join(parts, "-");
  }
  if (c.variant) out += "-" + std::to_string(*c.variant);
  return out;
}

std::optional<ToneContour> ParseContour(std::string_view s) {
  ToneContour c;
  std::string text(s);
  // Variant suffix.
  std::size_t dash = text.rfind('-');
  if (dash != std::string::npos && dash + 1 < text.size() &&
      AllDigits(std::string_view(text).substr(dash + 1))) {
    c.variant = std::stoi(text.substr(dash + 1));
    text.resize(dash);
  }
  if (text.find('+') != std::string::npos) {
    if (text.empty()) return std::nullopt;
    char edge = text.back();
    std::string accent = text;
    if (edge == '-' || edge == '%') accent.pop_back();
    if (accent == "H*+L") {
      c.accent = Accent::kHstarPlusL;
    } else if (accent == "!L+H*") {
      c.accent = Accent::kDownLPlusHstar;
    } else {
      return std::nullopt;
    }
    // The edge tone of a bitonal is the accent's trailing tone.
    Tone trailing = c.accent == Accent::kHstarPlusL ? Tone::kL : Tone::kH;
    if (edge == '-') c.phrase = trailing;
    if (edge == '%') c.boundary = trailing;
    return c;
  }

  std::vector<std::string> parts = Split(text, '-');
  std::optional<std::size_t> accent_at;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (EndsWith(parts[i], "*")) {
      if (accent_at) return std::nullopt;
      accent_at = i;
    }
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::string p = parts[i];
    if (accent_at && i == *accent_at) {
      if (StartsWith(p, "!")) {
        c.downstepped = true;
        p.erase(0, 1);
      }
      if (p == "H*") {
        c.accent = Accent::kHstar;
      } else if (p == "L*") {
        c.accent = Accent::kLstar;
      } else {
        return std::nullopt;
      }
    } else if (EndsWith(p, "%")) {
      auto t = ParseTone(std::string_view(p).substr(0, p.size() - 1));
      if (!t || c.boundary != Tone::kNone || i + 1 != parts.size()) return std::nullopt;
      c.boundary = *t;
    } else {
      auto t = ParseTone(p);
      if (!t) return std::nullopt;
      if (accent_at && i < *accent_at) {
        if (c.lead != Tone::kNone) return std::nullopt;
        c.lead = *t;
      } else {
        if (c.phrase != Tone::kNone) return std::nullopt;
        c.phrase = *t;
      }
    }
  }
  if (!WellFormed(c)) return std::nullopt;
  return c;
}

ToneContour Contour(std::string_view label) {
  auto c = ParseContour(label);
  if (!c) throw std::invalid_argument("bad contour label: " + std::string(label));
  return *c;
}

std::string ToString(const Label& l) {
  if (const auto* c = std::get_if<ToneContour>(&l)) return ToString(*c);
  if (const auto* b = std::get_if<BreakIndex>(&l)) return ToString(*b);
  return "X-?";
}

Label ParseLabel(std::string_view s) {
  if (auto bi = ParseBreakIndex(s)) return *bi;
  if (auto c = ParseContour(s)) return *c;
  return UnknownLabel{};
}

ParamEvent ParamEvent::Tuple(int pbas, int rate, int volm_tenths) {
  ParamEvent e;
  e.pbas_milli = pbas * 1000;
  e.rate = rate;
  e.volm_tenths = volm_tenths;
  return e;
}

ParamEvent ParamEvent::Slow(int rate, int volm_tenths) {
  ParamEvent e;
  e.rate = rate;
  e.volm_tenths = volm_tenths;
  return e;
}

ParamEvent ParamEvent::Silence(int ms) {
  ParamEvent e;
  e.slnc = ms;
  return e;
}

ParamEvent ParamEvent::Reset() {
  ParamEvent e;
  e.rset = true;
  return e;
}

std::string Render(const ParamEvent& e) {
  if (e.rset) return "[[rset 0]]";
  std::vector<std::string> fields;
  if (e.slnc) fields.push_back("slnc " + std::to_string(*e.slnc));
  if (e.pbas_milli) fields.push_back("pbas " + Milli(*e.pbas_milli));
  if (e.rate) fields.push_back("rate " + std::to_string(*e.rate));
  if (e.volm_tenths) fields.push_back("volm " + Signed(*e.volm_tenths));
  return "[[" + Join(fields, "; ") + "]]";
}

std::optional<ParamEvent> ParseEvent(std::string_view command) {
  std::string body(Trim(command));
  if (StartsWith(body, "[[") && EndsWith(body, "]]")) {
    body = body.substr(2, body.size() - 4);
  }
  ParamEvent e;
  for (const std::string& raw : Split(body, ';')) {
    std::vector<std::string> kv = SplitWs(raw);
    if (kv.size() != 2) return std::nullopt;
    auto value = ParseNumber(kv[1]);
    if (!value) return std::nullopt;
    const std::string& key = kv[0];
    if (key == "slnc") {
      e.slnc = static_cast<int>(std::lround(*value));
    } else if (key == "pbas") {
      e.pbas_milli = static_cast<int>(std::lround(*value * 1000));
    } else if (key == "rate") {
      e.rate = static_cast<int>(std::lround(*value));
    } else if (key == "volm") {
      e.volm_tenths = static_cast<int>(std::lround(*value * 10));
    } else if (key == "rset") {
      e.rset = true;
    } else {
      return std::nullopt;
    }
  }
  if (e.empty()) return std::nullopt;
  return e;
}

std::vector<ParamEvent> ScanEvents(std::string_view markup) {
  std::vector<ParamEvent> out;
  std::size_t pos = 0;
  while ((pos = markup.find("[[", pos)) != std::string_view::npos) {
    std::size_t end = markup.find("]]", pos + 2);
    if (end == std::string_view::npos) break;
    if (auto e = ParseEvent(markup.substr(pos + 2, end - pos - 2))) {
      out.push_back(*e);
    }
    pos = end + 2;
  }
  return out;
}

std::string StripCommands(std::string_view markup) {
  std::string text;
  std::size_t pos = 0;
  while (pos < markup.size()) {
    if (markup.compare(pos, 2, "[[") == 0) {
      std::size_t end = markup.find("]]", pos + 2);
      if (end == std::string_view::npos) break;
      pos = end + 2;
      // The comma joining a silence to its reset belongs to the command.
      if (markup.compare(pos, 3, ",[[") == 0) ++pos;
      text += ' ';
      continue;
    }
    text += markup[pos++];
  }
  return Join(SplitWs(text), " ");
}

std::vector<ParamEvent> SplitFused(const std::vector<ParamEvent>& events) {
  std::vector<ParamEvent> out;
  for (const auto& e : events) {
    if (e.slnc && e.has_tuple()) {
      out.push_back(ParamEvent::Silence(*e.slnc));
      ParamEvent rest = e;
      rest.slnc.reset();
      out.push_back(rest);
    } else {
      out.push_back(e);
    }
  }
  return out;
}

}  // namespace prosomark
