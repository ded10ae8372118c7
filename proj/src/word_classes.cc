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

#include "prosomark/word_classes.h"

#include <array>
#include <map>
#include <set>

#include "prosomark/lexicon.h"

namespace prosomark {
namespace {

bool In(const std::set<std::string, std::less<>>& s, std::string_view w) {
  return s.find(w) != s.end();
}

const std::set<std::string, std::less<>> kDeterminers = {
    "a",    "an",   "the",   "this",  "that",  "these", "those", "my",
    "your", "his",  "her",   "its",   "our",   "their", "some",  "any",
    "no",   "each", "every", "which", "what",  "whose", "another"};

const std::set<std::string, std::less<>> kPrepositions = {
    "at",   "by",    "for",  "from",    "in",      "into",   "of",
    "on",   "onto",  "over", "round",   "through", "to",     "under",
    "upon", "with",  "without", "about", "above",  "across", "after",
    "against", "along", "among", "around", "before", "behind", "below",
    "beneath", "beside", "between", "beyond", "during", "near", "off",
    "out",  "past",  "since", "toward", "towards", "within"};

const std::set<std::string, std::less<>> kPronouns = {
    "i",    "me",   "you",   "he",   "him",  "she",  "her", "it",  "we",
    "us",   "they", "them",  "myself", "yourself", "himself", "herself",
    "itself", "ourselves", "themselves", "one", "someone", "somebody",
    "anyone", "anybody", "everyone", "everybody", "nobody", "no_one",
    "nothing", "something", "everything", "anything", "who", "whom"};

const std::set<std::string, std::less<>> kAuxiliaries = {
    "be",    "am",    "is",     "are",   "was",    "were",  "been",
    "being", "have",  "has",    "had",   "having", "do",    "does",
    "did",   "will",  "would",  "shall", "should", "can",   "could",
    "may",   "might", "must",   "ought"};

const std::set<std::string, std::less<>> kCoordinators = {"and", "but", "or",
                                                          "nor", "yet"};

const std::set<std::string, std::less<>> kSubordinators = {
    "if",     "when",   "while", "until", "till",   "because", "although",
    "though", "unless", "since", "as",    "before", "after",   "whenever",
    "whereas", "once",  "lest",  "so"};

const std::set<std::string, std::less<>> kRelatives = {
    "which", "who", "whom", "whose", "where"};

const std::map<std::string, std::string, std::less<>> kIrregular = {
    {"said", "say"},     {"says", "say"},       {"got", "get"},
    {"got_up", "get_up"}, {"had", "have"},      {"has", "have"},
    {"thought", "think"}, {"spoke", "speak"},   {"spoken", "speak"},
    {"met", "meet"},     {"took", "take"},      {"taken", "take"},
    {"came", "come"},    {"went", "go"},        {"gone", "go"},
    {"saw", "see"},      {"seen", "see"},       {"knew", "know"},
    {"known", "know"},   {"made", "make"},      {"ran", "run"},
    {"sat", "sit"},      {"gave", "give"},      {"given", "give"},
    {"found", "find"},   {"told", "tell"},      {"heard", "hear"},
    {"held", "hold"},    {"left", "leave"},     {"felt", "feel"},
    {"kept", "keep"},    {"began", "begin"},    {"begun", "begin"},
    {"fell", "fall"},    {"flew", "fly"},       {"sang", "sing"},
    {"stood", "stand"},  {"was", "be"},         {"were", "be"},
    {"is", "be"},        {"are", "be"},         {"am", "be"},
    {"been", "be"},      {"did", "do"},         {"done", "do"},
    {"cried", "cry"},    {"replied", "reply"},  {"dropped", "drop"},
    {"bled", "bleed"},   {"brought", "bring"},  {"caught", "catch"},
    {"wore", "wear"},    {"worn", "wear"}};

}  // namespace

bool IsDeterminer(std::string_view w) { return In(kDeterminers, w); }
bool IsPreposition(std::string_view w) { return In(kPrepositions, w); }
bool IsPronoun(std::string_view w) { return In(kPronouns, w); }
bool IsAuxiliary(std::string_view w) { return In(kAuxiliaries, w); }
bool IsCoordinator(std::string_view w) { return In(kCoordinators, w); }
bool IsSubordinator(std::string_view w) { return In(kSubordinators, w); }
bool IsRelativePronoun(std::string_view w) { return In(kRelatives, w); }
bool IsComplementizer(std::string_view w) {
  return w == "that" || w == "whether";
}

bool IsFunctionWord(std::string_view w) {
  return IsDeterminer(w) || IsPreposition(w) || IsPronoun(w) ||
         IsAuxiliary(w) || IsCoordinator(w) || IsSubordinator(w) ||
         IsRelativePronoun(w) || w == "to" || w == "not";
}

std::optional<std::string> IrregularVerbLemma(std::string_view w) {
  auto it = kIrregular.find(w);
  if (it == kIrregular.end()) return std::nullopt;
  return it->second;
}

std::string VerbLemma(std::string_view w) {
  if (auto irr = IrregularVerbLemma(w)) return *irr;
  std::string s(w);
  if (EndsWith(s, "ied") && s.size() > 4) return s.substr(0, s.size() - 3) + "y";
  if (EndsWith(s, "ed") && s.size() > 3) {
    std::string stem = s.substr(0, s.size() - 2);
    // doubled consonant: dropped -> drop
    if (stem.size() > 2 && stem.back() == stem[stem.size() - 2] &&
        stem.back() != 'l' && stem.back() != 's') {
      return stem.substr(0, stem.size() - 1);
    }
    return stem;
  }
  if (EndsWith(s, "ing") && s.size() > 4) return s.substr(0, s.size() - 3);
  if (EndsWith(s, "es") && s.size() > 3) return s.substr(0, s.size() - 2);
  if (EndsWith(s, "s") && s.size() > 2 && !EndsWith(s, "ss")) {
    return s.substr(0, s.size() - 1);
  }
  return s;
}

bool IsFormOf(std::string_view form, std::string_view lemma) {
  if (form == lemma) return true;
  if (auto irr = IrregularVerbLemma(form)) return *irr == lemma;
  std::string f(form), l(lemma);
  const std::array<std::string, 6> candidates = {
      l + "s", l + "es", l + "ed", l + "d", l + "ing", l + "ies"};
  for (const auto& c : candidates) {
    if (f == c) return true;
  }
  if (!l.empty() && l.back() == 'e' && f == l.substr(0, l.size() - 1) + "ing") {
    return true;
  }
  if (!l.empty() && l.back() == 'y' &&
      (f == l.substr(0, l.size() - 1) + "ied" ||
       f == l.substr(0, l.size() - 1) + "ies")) {
    return true;
  }
  return VerbLemma(f) == l;
}

bool LooksLikeVerb(std::string_view w) {
  if (IsAuxiliary(w) || IrregularVerbLemma(w)) return true;
  return w.size() > 3 && EndsWith(w, "ed");
}

}  // namespace prosomark
