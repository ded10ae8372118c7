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

#ifndef PROSOMARK_WORD_CLASSES_H_
#define PROSOMARK_WORD_CLASSES_H_

#include <optional>
#include <string>
#include <string_view>

namespace prosomark {

// Closed-class English vocabulary used by the shallow heuristics. All
// predicates expect a lowercased, underscore-joined word.
bool IsDeterminer(std::string_view w);
bool IsPreposition(std::string_view w);
bool IsPronoun(std::string_view w);
bool IsAuxiliary(std::string_view w);  // be/have/do forms and modals
bool IsCoordinator(std::string_view w);
bool IsSubordinator(std::string_view w);
bool IsRelativePronoun(std::string_view w);
bool IsComplementizer(std::string_view w);

// Determiners, prepositions, auxiliaries, pronouns, conjunctions and the
// infinitival marker: words that never carry a pitch accent.
bool IsFunctionWord(std::string_view w);

// Past-tense or participle form of an irregular verb, mapped to its lemma.
std::optional<std::string> IrregularVerbLemma(std::string_view w);

// Best-effort lemma for a verb form ("procured" -> "procure").
std::string VerbLemma(std::string_view w);

// True when `form` is a plausible inflection of `lemma`.
bool IsFormOf(std::string_view form, std::string_view lemma);

// Heuristic: does the word look like a finite or participial verb form
// (irregular past, -ed suffix, or an auxiliary)?
bool LooksLikeVerb(std::string_view w);

}  // namespace prosomark

#endif  // PROSOMARK_WORD_CLASSES_H_
