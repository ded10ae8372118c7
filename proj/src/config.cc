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

#include "prosomark/config.h"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "prosomark/lexicon.h"

namespace prosomark {
namespace {

namespace fs = std::filesystem;

std::string Resolve(const std::string& value, const std::string& base_dir) {
  if (value.empty() || base_dir.empty() || fs::path(value).is_absolute()) return value;
  return (fs::path(base_dir) / value).string();
}

std::size_t ParseCount(const std::string& key, const std::string& value) {
  if (value.empty() || !std::all_of(value.begin(), value.end(),
                                    [](char c) { return c >= '0' && c <= '9'; })) {
    throw ConfigError(key + " must be a natural number, got '" + value + "'");
  }
  return static_cast<std::size_t>(std::stoul(value));
}

bool ParseSwitch(const std::string& key, const std::string& value) {
  const std::string v = ToLower(value);
  if (v == "on" || v == "true" || v == "yes" || v == "1") return true;
  if (v == "off" || v == "false" || v == "no" || v == "0") return false;
  throw ConfigError(key + " must be on or off, got '" + value + "'");
}

// Whitespace-separated words, with each `[[...]]` command as one token.
std::vector<std::string> MarkupTokens(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\n' || text[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t j = i;
    if (text.substr(i, 2) == "[[") {
      const std::size_t close = text.find("]]", i);
      j = close == std::string_view::npos ? text.size() : close + 2;
    } else {
      while (j < text.size() && text[j] != ' ' && text[j] != '\n' && text[j] != '\t' &&
             text.substr(j, 2) != "[[") {
        ++j;
      }
    }
    out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::string_view ToString(EmitMode m) {
  switch (m) {
    case EmitMode::kMarkup: return "markup";
    case EmitMode::kTobi: return "tobi";
    case EmitMode::kBoth: return "both";
    case EmitMode::kGroups: return "groups";
  }
  return "?";
}

std::optional<EmitMode> ParseEmitMode(std::string_view s) {
  for (EmitMode m : {EmitMode::kMarkup, EmitMode::kTobi, EmitMode::kBoth, EmitMode::kGroups}) {
    if (ToString(m) == s) return m;
  }
  return std::nullopt;
}

std::string_view ToString(TitleMode m) {
  switch (m) {
    case TitleMode::kAuto: return "auto";
    case TitleMode::kForce: return "force";
    case TitleMode::kOff: return "off";
  }
  return "?";
}

std::optional<TitleMode> ParseTitleMode(std::string_view s) {
  for (TitleMode m : {TitleMode::kAuto, TitleMode::kForce, TitleMode::kOff}) {
    if (ToString(m) == s) return m;
  }
  return std::nullopt;
}

std::string DefaultDataDir() {
#ifdef PROSOMARK_DATA_DIR
  return PROSOMARK_DATA_DIR;
#else
  return "data";
#endif
}

Config Config::Defaults(const std::string& data_dir) {
  Config c;
  auto at = [&](const char* name) { return (fs::path(data_dir) / name).string(); };
  c.relevance_rules = at("relevance.rules");
  c.multiwords = at("multiwords.txt");
  c.phonetic = at("phon.tsv");
  c.frozen = at("frozen.tsv");
  c.affect = at("affect.tsv");
  c.quantifiers = at("quantifiers.txt");
  c.floating_quantifiers = at("floating_quantifiers.txt");
  c.comm_verbs = at("comm_verbs.txt");
  return c;
}

void Config::Set(const std::string& key, const std::string& value,
                 const std::string& base_dir) {
  if (key == "min_len") {
    min_len = ParseCount(key, value);
  } else if (key == "max_len") {
    max_len = ParseCount(key, value);
  } else if (key == "max_subj") {
    max_subj = ParseCount(key, value);
  } else if (key == "relevance_rules") {
    relevance_rules = Resolve(value, base_dir);
  } else if (key == "multiwords") {
    multiwords = Resolve(value, base_dir);
  } else if (key == "phonetic") {
    phonetic = Resolve(value, base_dir);
  } else if (key == "frozen") {
    frozen = Resolve(value, base_dir);
  } else if (key == "affect") {
    affect = Resolve(value, base_dir);
  } else if (key == "quantifiers") {
    quantifiers = Resolve(value, base_dir);
  } else if (key == "floating_quantifiers") {
    floating_quantifiers = Resolve(value, base_dir);
  } else if (key == "comm_verbs") {
    comm_verbs = Resolve(value, base_dir);
  } else if (key == "title_mode") {
    auto m = ParseTitleMode(value);
    if (!m) throw ConfigError("title_mode must be auto, force or off");
    title_mode = *m;
  } else if (key == "emit_mode") {
    auto m = ParseEmitMode(value);
    if (!m) throw ConfigError("emit_mode must be markup, tobi, both or groups");
    emit_mode = *m;
  } else if (key == "pov_tracking") {
    pov_tracking = ParseSwitch(key, value);
  } else if (key == "paragraph_final_bi4") {
    paragraph_final_bi4 = ParseSwitch(key, value);
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

void Config::Apply(std::string_view text, const std::string& base_dir) {
  for (const auto& [line, content] : ContentLines(text)) {
    const auto eq = content.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line) + ": expected key = value");
    }
    try {
      Set(Trim(content.substr(0, eq)), Trim(content.substr(eq + 1)), base_dir);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line) + ": " + e.what());
    }
  }
}

void Config::Validate() const {
  if (min_len == 0) throw ConfigError("min_len must be at least 1");
  if (min_len > max_len) throw ConfigError("min_len exceeds max_len");
  for (const std::string* p : {&relevance_rules, &multiwords, &phonetic, &frozen, &affect,
                               &quantifiers, &floating_quantifiers, &comm_verbs}) {
    if (p->empty()) continue;
    std::ifstream in(*p);
    if (!in) throw ConfigError("cannot read lexicon file " + *p);
  }
}

Config LoadConfig(const std::string& path, Config base) {
  base.Apply(ReadFile(path), fs::path(path).parent_path().string());
  return base;
}

PhrasingConfig MakePhrasingConfig(const Config& config) {
  PhrasingConfig p;
  p.min_len = config.min_len;
  p.max_len = config.max_len;
  p.max_subj = config.max_subj;
  return p;
}

ProsodyConfig MakeProsodyConfig(const Config& config) {
  ProsodyConfig p;
  p.phrasing = MakePhrasingConfig(config);
  p.pov_tracking = config.pov_tracking;
  p.paragraph_final_bi4 = config.paragraph_final_bi4;
  if (!config.comm_verbs.empty()) p.comm_verbs = WordList::Load(config.comm_verbs);
  if (!config.quantifiers.empty()) p.quantifiers = WordList::Load(config.quantifiers);
  if (!config.floating_quantifiers.empty()) {
    p.floating_quantifiers = WordList::Load(config.floating_quantifiers);
  }
  if (!config.affect.empty()) p.affect = TaggedLexicon::Load(config.affect);
  if (!config.frozen.empty()) p.frozen = FrozenTable::Load(config.frozen);
  return p;
}

PipelineOutput RunPipeline(std::string_view text, const std::optional<std::string>& sidecar,
                           const Config& config) {
  PipelineOutput out;
  const MultiwordLexicon multiwords = config.multiwords.empty()
                                          ? MultiwordLexicon{}
                                          : MultiwordLexicon::Load(config.multiwords);
  out.doc = SplitDocument(Tokenize(text, multiwords), text, config.title_mode);
  if (!config.phonetic.empty()) ApplyPhonExceptions(out.doc, PhonLexicon::Load(config.phonetic));

  RelevanceRuleset rules = config.relevance_rules.empty()
                               ? RelevanceRuleset::Default()
                               : RelevanceRuleset::Parse(ReadFile(config.relevance_rules));
  if (sidecar) {
    out.ann = ParseSidecar(*sidecar);
    std::size_t words = 0;
    for (const auto& s : out.doc.sentences) {
      for (const auto& t : s.tokens) {
        if (t.word_index) words = std::max(words, *t.word_index + 1);
      }
    }
    CheckSpans(out.ann, words);
  } else {
    ShallowConfig shallow;
    shallow.relevance = rules;
    out.ann = ShallowAnalyze(out.doc, shallow);
  }
  ResolveAnnotations(out.ann, rules, SentenceIds(out.doc, out.ann));
  for (const auto& c : TopicIdConflicts(out.ann.topics)) {
    out.diagnostics.push_back("warning: " + c);
  }

  const ProsodyConfig prosody = MakeProsodyConfig(config);
  out.groups = SegmentDocument(out.doc, out.ann, prosody.phrasing);
  PlanResult plan = PlanProsody(out.doc, out.ann, out.groups, prosody);
  for (auto& d : plan.diagnostics) out.diagnostics.push_back("warning: " + d);
  out.script = std::move(plan.script);

  out.markup = RenderMarkup(out.doc, out.script, *prosody.table);
  out.tobi = RenderTobi(out.doc, out.script);
  out.groups_text = RenderGroups(out.doc, out.groups);
  std::vector<ParamEvent> events;
  for (const auto& it : out.script.items) {
    if (it.kind == ScriptItem::Kind::kEvent) events.push_back(it.event);
  }
  std::vector<std::string> unmapped;
  ParamsToTobi(events, *prosody.table, &unmapped);
  for (auto& d : unmapped) out.diagnostics.push_back("warning: " + d);
  return out;
}

std::string SelectOutput(const PipelineOutput& out, EmitMode mode) {
  switch (mode) {
    case EmitMode::kMarkup: return out.markup;
    case EmitMode::kTobi: return out.tobi;
    case EmitMode::kBoth: return out.markup + "\n" + out.tobi;
    case EmitMode::kGroups: return out.groups_text;
  }
  return {};
}

GoldenReport GoldenCheck(std::string_view produced, std::string_view golden) {
  GoldenReport r;
  if (produced == golden) return r;
  r.match = false;
  std::size_t i = 0;
  std::size_t line_start = 0;
  r.line = 1;
  while (i < produced.size() && i < golden.size() && produced[i] == golden[i]) {
    if (produced[i] == '\n') {
      ++r.line;
      line_start = i + 1;
    }
    ++i;
  }
  r.column = i - line_start + 1;
  auto line_of = [&](std::string_view text) {
    std::size_t end = text.find('\n', line_start);
    if (line_start >= text.size()) return std::string();
    return std::string(text.substr(line_start, end == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : end - line_start));
  };
  r.expected = line_of(golden);
  r.actual = line_of(produced);

  // Token diff by longest common subsequence.
  const std::vector<std::string> a = MarkupTokens(golden);
  const std::vector<std::string> b = MarkupTokens(produced);
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<std::vector<std::size_t>> lcs(n + 1, std::vector<std::size_t>(m + 1, 0));
  for (std::size_t x = n; x-- > 0;) {
    for (std::size_t y = m; y-- > 0;) {
      lcs[x][y] = a[x] == b[y] ? lcs[x + 1][y + 1] + 1 : std::max(lcs[x + 1][y], lcs[x][y + 1]);
    }
  }
  std::size_t x = 0;
  std::size_t y = 0;
  while (x < n || y < m) {
    if (x < n && y < m && a[x] == b[y]) {
      ++x;
      ++y;
    } else if (y < m && (x == n || lcs[x][y + 1] >= lcs[x + 1][y])) {
      r.token_diff.push_back("+" + b[y++]);
    } else {
      r.token_diff.push_back("-" + a[x++]);
    }
  }
  return r;
}

std::string GoldenReport::Render() const {
  if (match) return {};
  std::string out = "first difference at line " + std::to_string(line) + ", column " +
                    std::to_string(column) + "\n";
  out += "expected: " + expected + "\n";
  out += "actual:   " + actual + "\n";
  for (const auto& d : token_diff) out += d + "\n";
  return out;
}

}  // namespace prosomark
