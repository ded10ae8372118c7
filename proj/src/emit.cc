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

#include "prosomark/emit.h"

#include <optional>

#include "prosomark/lexicon.h"

namespace prosomark {
namespace {

bool SilenceNeedsReset(int ms, bool has_tuple, const MappingTable& table,
                       bool reset_follows) {
  // A fused silence carries its tuple on the same event and cannot take a
  // reset; the pair (ms, reset_follows) must still name a break index.
  if (has_tuple && reset_follows) return false;
  return table.break_for(ms, reset_follows).has_value();
}

std::size_t ParagraphOf(const Document& doc, const ScriptItem& item) {
  return doc.sentences[item.sentence].paragraph_index;
}

std::string ItemText(const Document& doc, const ScriptItem& item) {
  if (item.kind == ScriptItem::Kind::kEvent) return Render(item.event);
  const Token& t = doc.sentences[item.sentence].tokens[item.token];
  return t.is_word() ? RenderWord(t) : t.surface;
}

}  // namespace

ScriptItem ScriptItem::Word(std::size_t sentence, std::size_t token) {
  ScriptItem item;
  item.kind = Kind::kToken;
  item.sentence = sentence;
  item.token = token;
  return item;
}

ScriptItem ScriptItem::Event(std::size_t sentence, const ParamEvent& e, Glue glue,
                             std::vector<Label> labels) {
  ScriptItem item;
  item.kind = Kind::kEvent;
  item.sentence = sentence;
  item.event = e;
  item.glue = glue;
  item.labels = std::move(labels);
  return item;
}

std::string RenderWord(const Token& t) {
  if (t.phon_override) return "[[inpt PHON]]" + *t.phon_override + "[[inpt TEXT]]";
  return t.surface;
}

std::vector<std::string> ValidateScript(const Document& doc, const ProsodicScript& script,
                                        const MappingTable& table) {
  std::vector<std::string> problems;
  std::size_t expected_sentence = 0;
  std::size_t expected_token = 0;
  auto advance = [&] {
    while (expected_sentence < doc.sentences.size() &&
           expected_token >= doc.sentences[expected_sentence].tokens.size()) {
      ++expected_sentence;
      expected_token = 0;
    }
  };
  advance();
  const auto& items = script.items;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const ScriptItem& it = items[i];
    if (it.sentence >= doc.sentences.size()) {
      problems.push_back("item " + std::to_string(i) + " names a missing sentence");
      continue;
    }
    if (it.kind == ScriptItem::Kind::kToken) {
      if (it.sentence != expected_sentence || it.token != expected_token) {
        problems.push_back("token out of order at item " + std::to_string(i));
      }
      expected_sentence = it.sentence;
      expected_token = it.token + 1;
      advance();
      continue;
    }
    const ParamEvent& e = it.event;
    if (!e.Valid()) {
      problems.push_back("invalid event at item " + std::to_string(i));
      continue;
    }
    if (e.slnc) {
      const bool reset_follows = i + 1 < items.size() &&
                                 items[i + 1].kind == ScriptItem::Kind::kEvent &&
                                 items[i + 1].event.rset;
      if (!SilenceNeedsReset(*e.slnc, e.has_tuple(), table, reset_follows)) {
        problems.push_back("silence " + std::to_string(*e.slnc) +
                           (reset_follows ? " followed by" : " without") +
                           " reset at item " + std::to_string(i));
      }
    }
  }
  if (expected_sentence < doc.sentences.size()) {
    problems.push_back("script ends before the document");
  }
  return problems;
}

std::string RenderMarkup(const Document& doc, const ProsodicScript& script,
                         const MappingTable& table) {
  auto problems = ValidateScript(doc, script, table);
  if (!problems.empty()) throw ScriptError(problems.front());
  std::string out;
  const auto& items = script.items;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) {
      const ScriptItem& a = items[i - 1];
      const ScriptItem& b = items[i];
      const bool compound = a.kind == ScriptItem::Kind::kEvent && a.event.silence_only() &&
                            b.kind == ScriptItem::Kind::kEvent && b.event.rset;
      if (compound) {
        out += ",";
      } else if (a.glue == Glue::kRight || b.glue == Glue::kLeft) {
        // glued
      } else if (ParagraphOf(doc, a) != ParagraphOf(doc, b)) {
        out += "\n\n";
      } else {
        out += " ";
      }
    }
    out += ItemText(doc, items[i]);
  }
  if (!out.empty()) out += "\n";
  return out;
}

std::string RenderTobi(const Document& doc, const ProsodicScript& script) {
  std::vector<std::string> lines;
  std::vector<std::string> current;
  std::optional<std::size_t> line_sentence;
  bool prev_silence = false;
  for (const ScriptItem& it : script.items) {
    if (it.kind == ScriptItem::Kind::kToken) {
      const Token& t = doc.sentences[it.sentence].tokens[it.token];
      prev_silence = false;
      if (t.kind == TokenKind::kQuoteMark) continue;
      // A line starts at the first word of its sentence; labels before that
      // word close the previous line.
      if (t.is_word() && line_sentence != it.sentence) {
        if (line_sentence && !current.empty()) {
          lines.push_back(Join(current, " "));
          current.clear();
        }
        line_sentence = it.sentence;
      }
      current.push_back(t.is_word() ? RenderWord(t) : t.surface);
      continue;
    }
    if (it.labels.empty()) {
      if (it.event.rset && !prev_silence) current.push_back(Render(it.event));
    } else {
      for (const Label& l : it.labels) current.push_back(ToString(l));
    }
    prev_silence = it.event.silence_only();
  }
  if (!current.empty()) lines.push_back(Join(current, " "));
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

std::vector<std::string> CheckPairing(std::string_view markup, const MappingTable& table) {
  std::vector<std::string> problems;
  std::size_t pos = 0;
  while ((pos = markup.find("[[", pos)) != std::string_view::npos) {
    std::size_t end = markup.find("]]", pos + 2);
    if (end == std::string_view::npos) break;
    auto e = ParseEvent(markup.substr(pos + 2, end - pos - 2));
    pos = end + 2;
    if (!e || !e->slnc) continue;
    const bool reset_follows = markup.compare(pos, 11, ",[[rset 0]]") == 0 ||
                               markup.compare(pos, 10, "[[rset 0]]") == 0;
    if (!SilenceNeedsReset(*e->slnc, e->has_tuple(), table, reset_follows)) {
      problems.push_back("silence " + std::to_string(*e->slnc) + " at offset " +
                         std::to_string(pos) +
                         (reset_follows ? " followed by" : " without") + " reset");
    }
  }
  return problems;
}

}  // namespace prosomark
