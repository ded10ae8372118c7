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

#include <algorithm>
#include <map>
#include <set>

#include "prosomark/prosody.h"
#include "prosomark/word_classes.h"

namespace prosomark {
namespace {

enum class HeadKind { kFunction, kVerbal, kPredicative, kNominal };

bool IsModal(std::string_view w) {
  static const std::set<std::string, std::less<>> kModals = {
      "will", "would", "shall", "should", "can", "could", "may", "might", "must", "ought",
      "do",   "does",  "did",   "have",   "has", "had"};
  return kModals.count(w) > 0;
}

bool IsBeForm(std::string_view w) {
  static const std::set<std::string, std::less<>> kBe = {"be", "am", "is", "are", "was",
                                                         "were", "been", "being"};
  return kBe.count(w) > 0;
}

// Question words and complementizers that open a complement clause.
bool OpensComplement(std::string_view w) {
  static const std::set<std::string, std::less<>> kWh = {"what", "where", "why", "how",
                                                         "whether"};
  return IsComplementizer(w) || kWh.count(w) > 0;
}

bool IsQuestionWord(std::string_view w) {
  static const std::set<std::string, std::less<>> kQ = {"who",  "whom", "what", "which",
                                                        "where", "why", "how",  "when"};
  return kQ.count(w) > 0;
}

bool IsDemonstrative(std::string_view w) {
  return w == "this" || w == "that" || w == "these" || w == "those";
}

bool OpensCoordinatePause(std::string_view w) { return w == "and" || w == "or" || w == "nor"; }

// Ordering slots for events attached to one word.
enum Slot {
  kPause = 0,       // silences opening a group or clause
  kSentenceTone = 1,
  kAffectTone = 2,
  kTone = 3,
  kSlowdown = 4,
  kAfterTail = 0,
  kAfterBreak = 1,
  kAfterExclaim = 2,
  kAfterReset = 3,
  kAfterLeadIn = 4,
};

struct Attachment {
  int slot = 0;
  std::vector<ScriptItem> items;
};

class SentencePlanner {
 public:
  SentencePlanner(const Document& doc, const AnnotationSet& ann, std::size_t si,
                  const std::vector<BreathGroup>& groups, const ProsodyConfig& config,
                  const PovTrack& pov, PlanResult& result)
      : doc_(doc),
        ann_(ann),
        si_(si),
        s_(doc.sentences[si]),
        groups_(groups),
        config_(config),
        table_(*config.table),
        pov_(pov),
        result_(result),
        before_(s_.tokens.size()),
        after_(s_.tokens.size()) {
    for (std::size_t p = 0; p < s_.tokens.size(); ++p) {
      if (s_.tokens[p].is_word()) words_.push_back(p);
    }
  }

  void Plan() {
    if (s_.is_title) {
      PlanTitle();
    } else if (!words_.empty()) {
      records_.resize(groups_.size());
      for (std::size_t g = 0; g < groups_.size(); ++g) {
        records_[g].sentence = si_;
        records_[g].group = g;
      }
      FindSpans();
      PlanFrozen();
      PlanSentenceStart();
      for (std::size_t g = 0; g < groups_.size(); ++g) PlanGroup(g);
      PlanSpeechLeadIn();
      for (auto& r : records_) {
        if (r.contours.empty()) r.contours.push_back(Contour("H*-L"));
      }
      result_.script.groups.insert(result_.script.groups.end(), records_.begin(),
                                   records_.end());
    }
    Linearize();
  }

 private:
  const std::string& Norm(std::size_t p) const { return s_.tokens[p].normalized; }

  ScriptItem Ev(const ParamEvent& e, Glue glue, std::vector<Label> labels = {}) const {
    return ScriptItem::Event(si_, e, glue, std::move(labels));
  }

  void Before(std::size_t p, int slot, std::vector<ScriptItem> items) {
    before_[p].push_back({slot, std::move(items)});
  }
  void After(std::size_t p, int slot, std::vector<ScriptItem> items) {
    after_[p].push_back({slot, std::move(items)});
  }

  // Events of one mapping step, the label on the first one.
  std::vector<ScriptItem> StepItems(const MappingStep& step, Glue glue) const {
    std::vector<ScriptItem> out;
    for (std::size_t i = 0; i < step.events.size(); ++i) {
      out.push_back(Ev(step.events[i], glue, i == 0 ? std::vector<Label>{step.label}
                                                    : std::vector<Label>{}));
    }
    return out;
  }

  std::vector<ScriptItem> ToneItems(const ToneContour& c, std::optional<RowId> row,
                                    Glue glue) const {
    MappingStep step{c, ToneToParams(c, table_, row)};
    return StepItems(step, glue);
  }

  std::vector<ScriptItem> BreakItems(BreakIndex bi) const {
    std::vector<ScriptItem> out;
    for (const ParamEvent& e : BreakEvents(bi, table_)) {
      out.push_back(Ev(e, e.rset ? Glue::kNone : Glue::kLeft,
                       e.rset ? std::vector<Label>{} : std::vector<Label>{bi}));
    }
    return out;
  }

  const PointOfView& PovAt(std::size_t p) const {
    static const PointOfView kNarrator;
    const PovSpan* span = pov_.at({si_, p});
    return span ? span->pov : kNarrator;
  }

  const ClauseFeatures* ClauseOf(std::size_t p) const {
    const auto& wi = s_.tokens[p].word_index;
    if (!wi) return nullptr;
    auto c = ClauseAt(ann_, *wi);
    return c ? FindClause(ann_, *c) : nullptr;
  }

  const DiscourseNode* NodeOf(std::size_t p) const {
    const ClauseFeatures* c = ClauseOf(p);
    return c ? FindNode(ann_, c->clause_no) : nullptr;
  }

  bool ClauseStartsAt(std::size_t p) const {
    const auto& wi = s_.tokens[p].word_index;
    if (ann_.clause_spans.empty() || !wi) return true;
    return IsClauseStart(ann_, *wi);
  }

  bool InAffect(std::size_t p) const {
    for (const auto& a : affect_) {
      if (p >= a.from && p <= a.to) return true;
    }
    return false;
  }

  std::vector<std::size_t> GroupWords(const BreathGroup& g) const {
    std::vector<std::size_t> out;
    for (std::size_t p : words_) {
      if (p >= g.from && p <= g.to) out.push_back(p);
    }
    return out;
  }

  HeadKind KindOf(const std::vector<std::size_t>& gw, std::size_t idx) const {
    const std::string& w = Norm(gw[idx]);
    if (IsFunctionWord(w)) return HeadKind::kFunction;
    if (LooksLikeVerb(w)) return HeadKind::kVerbal;
    for (std::size_t j = idx; j-- > 0;) {
      const std::string& u = Norm(gw[j]);
      if (!IsFunctionWord(u)) continue;
      if (u == "to" || IsModal(u)) return HeadKind::kVerbal;
      if (IsBeForm(u)) return HeadKind::kPredicative;
      return HeadKind::kNominal;
    }
    return HeadKind::kNominal;
  }

  // The clause at p has the same predicate as the clause before it.
  bool RepeatsPredicate(std::size_t p) const {
    const ClauseFeatures* c = ClauseOf(p);
    if (!c || c->clause_no == 0) return false;
    const ClauseFeatures* before = FindClause(ann_, c->clause_no - 1);
    return before && before->pred == c->pred;
  }

  bool SentenceFinalSpeech() const {
    return s_.terminal == Terminal::kQuestion || s_.terminal == Terminal::kExclamation;
  }

  void FindSpans() {
    for (const auto& a : FindAffectSpans(s_, config_.affect)) {
      if (a.affect == Affect::kSad) affect_.push_back(a);
    }
    for (const auto& a : affect_) {
      Before(a.from, kAffectTone,
             ToneItems(Contour("L*-L%"), RowId::kSad, Glue::kRight));
      // The row's reset closes the span.
      auto& items = before_[a.from].back().items;
      std::vector<ScriptItem> reset;
      while (!items.empty() && items.back().event.rset) {
        reset.insert(reset.begin(), items.back());
        items.pop_back();
      }
      for (auto& r : reset) r.glue = Glue::kNone;
      After(a.to, kAfterReset, reset);
      if (auto* rec = RecordFor(a.from)) rec->contours.push_back(Contour("L*-L%"));
    }
  }

  GroupRecord* RecordFor(std::size_t p) {
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      if (p >= groups_[g].from && p <= groups_[g].to && g < records_.size()) {
        return &records_[g];
      }
    }
    return nullptr;
  }

  void PlanTitle() {
    ToneChoice t = SelectTone(TonePosition::kTitle, Relevance::kBackground, Move::kRoot,
                              "main", DiscRel::kNarration, PointOfView{}, Affect::kNeutral,
                              ToneFlags{});
    if (!words_.empty()) {
      Before(words_.front(), kSentenceTone, ToneItems(t.contour, t.row, Glue::kRight));
    }
    BreakContext ctx;
    ctx.title_final = true;
    const BreakIndex bi = AssignBreakIndex(BreathGroup{}, ctx);
    auto items = BreakItems(bi);
    for (auto& it : items) it.glue = Glue::kNone;
    if (!s_.tokens.empty()) After(s_.tokens.size() - 1, kAfterBreak, items);
    result_.script.groups.push_back({si_, 0, bi, {t.contour}});
  }

  void PlanFrozen() {
    const WordList& address = config_.phrasing.comma_lexicon.vocatives;
    for (std::size_t p : words_) {
      if (covered_.count(p)) continue;
      auto m = MatchFrozen(s_.tokens, p, config_.frozen, address);
      if (!m) continue;
      covered_.insert(m->words.begin(), m->words.end());
      const auto& steps = m->entry->steps;
      std::vector<std::size_t> body = m->words;
      if (m->tail) body.pop_back();
      std::size_t step = 0;
      if (!steps.empty()) {
        // The first contour spreads over the pattern words.
        const MappingStep& first = steps[0];
        for (std::size_t i = 0; i < first.events.size(); ++i) {
          std::size_t at = body[std::min(i, body.size() - 1)];
          Before(at, kTone,
                 {Ev(first.events[i], Glue::kRight,
                     i == 0 ? std::vector<Label>{first.label} : std::vector<Label>{})});
        }
        step = 1;
      }
      if (m->tail) {
        int slot = kAfterTail;
        for (; step < steps.size(); ++step) {
          auto items = StepItems(steps[step], Glue::kLeft);
          if (slot == kAfterTail && !items.empty()) {
            items.front().glue = Glue::kRight;
            Before(*m->tail, kTone, {items.front()});
            items.erase(items.begin());
          }
          for (auto& it : items) {
            if (it.event.rset) it.glue = Glue::kNone;
          }
          After(*m->tail, slot, items);
          slot = kAfterBreak;
        }
      } else {
        for (; step < steps.size(); ++step) {
          Before(body.front(), kTone, StepItems(steps[step], Glue::kRight));
        }
      }
      if (auto* rec = RecordFor(p)) {
        for (const auto& c : m->contours()) rec->contours.push_back(c);
      }
    }
  }

  void PlanSentenceStart() {
    const std::size_t w0 = words_.front();
    if (covered_.count(w0)) return;
    const ClauseFeatures* feats = ClauseOf(w0);
    const DiscourseNode* node = NodeOf(w0);
    const PointOfView& pov = PovAt(w0);
    ToneFlags flags;
    flags.paragraph_boundary = si_ > 0 &&
                               doc_.sentences[si_ - 1].paragraph_index != s_.paragraph_index &&
                               !doc_.sentences[si_ - 1].is_title;
    flags.speech_open = pov.character() && pov.opened_at == si_;
    const Affect affect = flags.speech_open && s_.terminal == Terminal::kExclamation
                              ? Affect::kExclaim
                              : Affect::kNeutral;
    const Relevance rel = feats && feats->relevance ? *feats->relevance
                          : node                    ? node->relevance
                                                    : Relevance::kBackground;
    ToneChoice choice = SelectTone(TonePosition::kSentenceInitial, rel,
                                   node ? node->move : Move::kLevel,
                                   feats ? feats->func_role.func : "main",
                                   feats ? feats->disc_rel : DiscRel::kNarration, pov, affect,
                                   flags);
    const bool continuation = pov.character() && pov.opened_at < si_;
    if (continuation && config_.pov_tracking) {
      const ToneContour down = Downstep(choice.contour, table_);
      Before(w0, kSentenceTone, ToneItems(down, std::nullopt, Glue::kRight));
      records_.front().contours.push_back(down);
      return;
    }
    if (!choice.row) return;
    Before(w0, kSentenceTone, ToneItems(choice.contour, choice.row, Glue::kRight));
    records_.front().contours.push_back(choice.contour);
  }

  // Head-end contour before `head` and a break after `last`.
  void HeadEnd(GroupRecord& rec, std::size_t head, std::size_t last, const ToneChoice& tone,
               BreakIndex bi) {
    Before(head, kTone, ToneItems(tone.contour, tone.row, Glue::kRight));
    After(last, kAfterBreak, BreakItems(bi));
    rec.contours.push_back(tone.contour);
  }

  ToneChoice GroupFinalTone(std::size_t p, const ToneFlags& flags,
                            Affect affect = Affect::kNeutral) const {
    const ClauseFeatures* feats = ClauseOf(p);
    const DiscourseNode* node = NodeOf(p);
    const Relevance rel = feats && feats->relevance ? *feats->relevance
                          : node                    ? node->relevance
                                                    : Relevance::kBackground;
    return SelectTone(TonePosition::kGroupFinal, rel, node ? node->move : Move::kLevel,
                      feats ? feats->func_role.func : "main",
                      feats ? feats->disc_rel : DiscRel::kNarration, PovAt(p), affect,
                      flags);
  }

  ToneChoice InternalTone(std::size_t p, const ToneFlags& flags) const {
    const ClauseFeatures* feats = ClauseOf(p);
    const DiscourseNode* node = NodeOf(p);
    return SelectTone(TonePosition::kSentenceInternal,
                      feats && feats->relevance ? *feats->relevance : Relevance::kBackground,
                      node ? node->move : Move::kLevel, feats ? feats->func_role.func : "main",
                      feats ? feats->disc_rel : DiscRel::kNarration, PovAt(p),
                      Affect::kNeutral, flags);
  }

  void PlanInternal(std::size_t g, const std::vector<std::size_t>& gw) {
    GroupRecord& rec = records_[g];
    for (std::size_t idx = 1; idx < gw.size(); ++idx) {
      const std::size_t k = gw[idx];
      const std::size_t prev = gw[idx - 1];
      const std::string& w = Norm(k);
      if (InAffect(k) || covered_.count(k)) continue;
      if (IsSubordinator(w) && ClauseStartsAt(k)) {
        ToneFlags f;
        f.subordinate_marker = true;
        ToneChoice t = InternalTone(k, f);
        ParamEvent fused = BreakEvents(BreakIndex::kBI2, table_).front();
        const ParamEvent tuple = ToneToParams(t.contour, table_, t.row).front();
        fused.pbas_milli = tuple.pbas_milli;
        fused.rate = tuple.rate;
        fused.volm_tenths = tuple.volm_tenths;
        Before(k, kPause, {Ev(fused, Glue::kRight, {BreakIndex::kBI2, t.contour})});
        rec.contours.push_back(t.contour);
        continue;
      }
      if (InAffect(prev) || covered_.count(prev)) continue;
      const HeadKind kind = KindOf(gw, idx - 1);
      if (kind != HeadKind::kVerbal) continue;
      ToneFlags f;
      f.head_end = true;
      const bool demonstrative_object =
          idx + 1 == gw.size() && IsDemonstrative(w) && !RepeatsPredicate(prev);
      if ((OpensComplement(w) && idx + 1 < gw.size()) || demonstrative_object) {
        BreakContext ctx;
        ctx.head_end = true;
        ctx.head_followed_by_dependent = true;
        HeadEnd(rec, prev, prev, GroupFinalTone(prev, f), AssignBreakIndex(groups_[g], ctx));
      } else if (w == "to" && idx + 1 < gw.size() && !IsDeterminer(Norm(gw[idx + 1])) &&
                 !IsPronoun(Norm(gw[idx + 1]))) {
        BreakContext ctx;
        ctx.head_end = true;
        HeadEnd(rec, prev, prev, GroupFinalTone(prev, f), AssignBreakIndex(groups_[g], ctx));
        const std::size_t verb = gw[idx + 1];
        const ClauseFeatures* c = ClauseOf(verb);
        if (c && c->disc_rel == DiscRel::kResult) {
          ToneFlags rf;
          rf.resultative = true;
          ToneChoice t = InternalTone(verb, rf);
          Before(verb, kPause, ToneItems(t.contour, t.row, Glue::kRight));
          rec.contours.push_back(t.contour);
        }
      }
    }
  }

  void PlanGroup(std::size_t g) {
    const BreathGroup& group = groups_[g];
    const BreathGroup* next = g + 1 < groups_.size() ? &groups_[g + 1] : nullptr;
    GroupRecord& rec = records_[g];
    const std::vector<std::size_t> gw = GroupWords(group);
    if (gw.empty()) return;
    const std::size_t first = gw.front();
    const std::size_t last = gw.back();
    const std::size_t head = group.head_index;
    const auto& adverbials = config_.phrasing.comma_lexicon.adverbials;

    // A connective before a fronted adverbial stands alone.
    if (g == 0 && gw.size() > 2 && IsCoordinator(Norm(first)) &&
        adverbials.Contains(Norm(gw[1])) && !InAffect(first)) {
      BreakContext ctx;
      ctx.head_end = true;
      ToneFlags f;
      f.head_end = true;
      HeadEnd(rec, first, first, GroupFinalTone(first, f), AssignBreakIndex(group, ctx));
    }

    if (g > 0 && OpensCoordinatePause(Norm(first)) && !InAffect(first) &&
        !covered_.count(first)) {
      auto items = BreakItems(BreakIndex::kBI2);
      items.front().glue = Glue::kRight;
      Before(first, kPause, items);
    }

    PlanInternal(g, gw);

    bool floating_final = false;
    for (const auto& m : MarkQuantifierSlowdown(group, s_, config_.quantifiers,
                                                config_.floating_quantifiers)) {
      if (InAffect(m.token) || covered_.count(m.token)) continue;
      Before(m.token, kSlowdown, {Ev(m.event, Glue::kRight)});
      if (m.break_after) {
        BreakContext ctx;
        ctx.before_quantifier = true;
        After(m.token, kAfterBreak, BreakItems(AssignBreakIndex(group, ctx)));
      }
      floating_final = floating_final || m.replaces_group_end;
    }

    const PointOfView& pov = PovAt(last);
    const bool speech_final = next == nullptr && pov.character() && SentenceFinalSpeech();
    if (speech_final && s_.terminal == Terminal::kQuestion) {
      for (std::size_t p : gw) {
        if (!IsQuestionWord(Norm(p))) continue;
        ToneFlags f;
        f.question = true;
        ToneChoice t = InternalTone(p, f);
        Before(p, kTone, ToneItems(t.contour, t.row, Glue::kRight));
        rec.contours.push_back(t.contour);
        break;
      }
    }

    const bool adverbial_group =
        g == 0 && gw.size() == 1 && adverbials.Contains(Norm(first)) && next != nullptr;
    if (adverbial_group || InAffect(last) || InAffect(head) || covered_.count(last) ||
        floating_final) {
      return;
    }

    if (speech_final) {
      BreakContext ctx;
      ctx.pre_exclamative = true;
      const BreakIndex bi = AssignBreakIndex(group, ctx);
      ToneChoice t = GroupFinalTone(last, ToneFlags{}, Affect::kExclaim);
      ParamEvent fused = BreakEvents(bi, table_).front();
      const ParamEvent tuple = ToneToParams(t.contour, table_, t.row).front();
      fused.pbas_milli = tuple.pbas_milli;
      fused.rate = tuple.rate;
      fused.volm_tenths = tuple.volm_tenths;
      After(last, kAfterExclaim, {Ev(fused, Glue::kLeft, {bi, t.contour})});
      rec.bi = bi;
      rec.contours.push_back(t.contour);
      PlanAfterTerminal(pov);
      return;
    }

    if (group.junction == Junction::kEndStopped) {
      BreakContext ctx;
      ctx.at_punct = true;
      ctx.sentence_final = next == nullptr;
      ctx.paragraph_final = config_.paragraph_final_bi4 && ctx.sentence_final &&
                            (si_ + 1 == doc_.sentences.size() ||
                             doc_.sentences[si_ + 1].paragraph_index != s_.paragraph_index);
      const BreakIndex bi = AssignBreakIndex(group, ctx);
      HeadEnd(rec, head, last, GroupFinalTone(head, ToneFlags{}), bi);
      rec.bi = bi;
      return;
    }

    // Enjambed: the opener of the next group decides.
    const std::string& opener = Norm(GroupWords(*next).front());
    std::size_t head_idx = 0;
    for (std::size_t i = 0; i < gw.size(); ++i) {
      if (gw[i] == head) head_idx = i;
    }
    const HeadKind kind = KindOf(gw, head_idx);
    BreakContext ctx;
    ToneFlags f;
    if (OpensCoordinatePause(opener)) {
      ctx.enjambed = true;
      rec.bi = AssignBreakIndex(group, ctx);
      return;
    }
    if ((IsSubordinator(opener) || OpensComplement(opener)) && kind == HeadKind::kVerbal) {
      ctx.head_end = true;
      ctx.head_followed_by_dependent = true;
      f.head_end = true;
    } else if (opener == "to" && kind == HeadKind::kVerbal) {
      ctx.head_end = true;
      f.head_end = true;
    } else if (opener == "to" && kind == HeadKind::kPredicative) {
      ctx.head_end = true;
      f.predicative_end = true;
    } else {
      return;
    }
    const BreakIndex bi = AssignBreakIndex(group, ctx);
    HeadEnd(rec, head, last, GroupFinalTone(head, f), bi);
    rec.bi = bi;
  }

  // A colon followed by an opening quote raises the register for the speech.
  void PlanSpeechLeadIn() {
    for (std::size_t p = 0; p < s_.tokens.size(); ++p) {
      if (s_.tokens[p].surface != ":") continue;
      TokenRef next{si_, p + 1};
      if (p + 1 == s_.tokens.size()) next = {si_ + 1, 0};
      if (next.sentence >= doc_.sentences.size()) continue;
      const auto& toks = doc_.sentences[next.sentence].tokens;
      if (next.token >= toks.size() || toks[next.token].kind != TokenKind::kQuoteMark) continue;
      const PovSpan* span = pov_.at(next);
      if (!span || !span->pov.character()) continue;
      After(p, kAfterLeadIn, {Ev(SpeechLeadIn(), Glue::kNone)});
    }
  }

  // After '?' or '!' in direct speech: a short pause when the speech goes
  // on, otherwise a reset.
  void PlanAfterTerminal(const PointOfView& pov) {
    std::size_t t = s_.tokens.size();
    for (std::size_t p = s_.tokens.size(); p-- > 0;) {
      if (s_.tokens[p].kind == TokenKind::kTerminalPunct) {
        t = p;
        break;
      }
    }
    if (t == s_.tokens.size()) return;
    bool continues = false;
    if (si_ + 1 < doc_.sentences.size()) {
      const PovSpan* span = pov_.at({si_ + 1, 0});
      continues = span && span->pov.character() && span->pov == pov;
    }
    if (continues) {
      auto items = BreakItems(BreakIndex::kBI2);
      for (auto& it : items) it.glue = Glue::kNone;
      After(t, kAfterBreak, items);
    } else {
      After(t, kAfterReset, {Ev(ParamEvent::Reset(), Glue::kNone)});
    }
  }

  void Linearize() {
    auto emit = [&](std::vector<Attachment>& list) {
      std::stable_sort(list.begin(), list.end(),
                       [](const Attachment& a, const Attachment& b) { return a.slot < b.slot; });
      for (auto& a : list) {
        for (auto& it : a.items) result_.script.items.push_back(std::move(it));
      }
    };
    for (std::size_t p = 0; p < s_.tokens.size(); ++p) {
      emit(before_[p]);
      result_.script.items.push_back(ScriptItem::Word(si_, p));
      emit(after_[p]);
    }
  }

  const Document& doc_;
  const AnnotationSet& ann_;
  std::size_t si_;
  const Sentence& s_;
  const std::vector<BreathGroup>& groups_;
  const ProsodyConfig& config_;
  const MappingTable& table_;
  const PovTrack& pov_;
  PlanResult& result_;
  std::vector<std::size_t> words_;
  std::vector<AffectSpan> affect_;
  std::set<std::size_t> covered_;
  std::vector<GroupRecord> records_;
  std::vector<std::vector<Attachment>> before_;
  std::vector<std::vector<Attachment>> after_;
};

}  // namespace

PlanResult PlanProsody(const Document& doc, const AnnotationSet& ann,
                       const std::vector<SentenceGroups>& groups,
                       const ProsodyConfig& config) {
  PlanResult result;
  PovTrack pov = TrackPointOfView(doc, ann, config.comm_verbs);
  result.diagnostics = pov.diagnostics;
  std::map<std::size_t, const std::vector<BreathGroup>*> by_sentence;
  for (const auto& sg : groups) by_sentence[sg.sentence] = &sg.groups;
  static const std::vector<BreathGroup> kNone;
  for (std::size_t si = 0; si < doc.sentences.size(); ++si) {
    auto it = by_sentence.find(si);
    const auto& g = it == by_sentence.end() ? kNone : *it->second;
    SentencePlanner(doc, ann, si, g, config, pov, result).Plan();
  }
  return result;
}

}  // namespace prosomark
