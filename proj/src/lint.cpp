#include "blinker/lint.hpp"

#include <algorithm>
#include <sstream>

#include "blinker/errors.hpp"

namespace blinker {

std::string_view rule_name(RuleId rule) {
  switch (rule) {
    case RuleId::kR1Completeness:
      return "R1_COMPLETENESS";
    case RuleId::kR2NtExclusivity:
      return "R2_NT_EXCLUSIVITY";
    case RuleId::kR3NegationPair:
      return "R3_NEGATION_PAIR";
    case RuleId::kR4BlockClosure:
      return "R4_BLOCK_CLOSURE";
    case RuleId::kR5PunctCrossing:
      return "R5_PUNCT_CROSSING";
    case RuleId::kR6PossessiveSep:
      return "R6_POSSESSIVE_SEP";
    case RuleId::kR7AuxAttach:
      return "R7_AUX_ATTACH";
  }
  return "";
}

RuleId rule_from_name(std::string_view name) {
  for (RuleId rule : kAllRules) {
    if (rule_name(rule) == name) return rule;
  }
  throw ValidationError("unknown lint rule '" + std::string(name) + "'");
}

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::kError:
      return "error";
    case Severity::kWarning:
      return "warning";
    case Severity::kInfo:
      return "info";
  }
  return "";
}

Severity default_severity(RuleId rule) {
  switch (rule) {
    case RuleId::kR1Completeness:
    case RuleId::kR2NtExclusivity:
    case RuleId::kR3NegationPair:
      return Severity::kError;
    case RuleId::kR4BlockClosure:
    case RuleId::kR5PunctCrossing:
    case RuleId::kR6PossessiveSep:
      return Severity::kWarning;
    case RuleId::kR7AuxAttach:
      return Severity::kInfo;
  }
  return Severity::kInfo;
}

std::string_view guideline_tag(RuleId rule) {
  switch (rule) {
    case RuleId::kR1Completeness:
    case RuleId::kR2NtExclusivity:
      return "omissions";
    case RuleId::kR3NegationPair:
      return "negation";
    case RuleId::kR4BlockClosure:
      return "phrasal-correspondence";
    case RuleId::kR5PunctCrossing:
      return "punctuation-series";
    case RuleId::kR6PossessiveSep:
      return "possessives";
    case RuleId::kR7AuxAttach:
      return "auxiliary-verbs";
  }
  return "";
}

std::string_view guideline_text(RuleId rule) {
  switch (rule) {
    case RuleId::kR1Completeness:
      return "Every word must be linked to its counterpart or marked Not "
             "Translated. Mark a word Not Translated only if deleting it "
             "would bring the two verses closer in meaning.";
    case RuleId::kR2NtExclusivity:
      return "A word marked Not Translated cannot also be linked.";
    case RuleId::kR3NegationPair:
      return "Two-part French negations (ne ... pas, ne ... point, ne ... "
             "rien, ne ... jamais, ne ... que): link both parts to the same "
             "English negation.";
    case RuleId::kR4BlockClosure:
      return "Phrases that correspond only as wholes are linked word by "
             "word: every word of one phrase to every word of the other.";
    case RuleId::kR5PunctCrossing:
      return "Link the words first, then pair up series of similar "
             "punctuation marks so that as few links as possible cross.";
    case RuleId::kR6PossessiveSep:
      return "Possessive markers ('s, and the bare apostrophe of plurals) "
             "are linked on their own, not together with their noun.";
    case RuleId::kR7AuxAttach:
      return "When auxiliaries have no counterpart in the translation, link "
             "the auxiliaries together with the main verb to the translated "
             "verb.";
  }
  return "";
}

bool has_blocking_findings(const std::vector<LintFinding>& findings) {
  return std::any_of(findings.begin(), findings.end(), [](const auto& f) {
    return f.severity == Severity::kError &&
           (f.rule == RuleId::kR1Completeness ||
            f.rule == RuleId::kR2NtExclusivity);
  });
}

namespace {

LintFinding make_finding(RuleId rule, std::vector<TokenRef> tokens,
                         std::string message) {
  LintFinding f;
  f.rule = rule;
  f.severity = default_severity(rule);
  f.tokens = std::move(tokens);
  f.message = std::move(message);
  f.guideline = std::string(guideline_tag(rule));
  return f;
}

std::string quote(const Token& t) { return "\"" + t.surface + "\""; }

Side other(Side side) {
  return side == Side::kSource ? Side::kTarget : Side::kSource;
}

// Linked counterparts of token `i` on `side`.
IndexSet partners(const Alignment& a, Side side, std::size_t i) {
  IndexSet out;
  for (const auto& l : a.links) {
    if (side == Side::kSource && l.source == i) out.insert(l.target);
    if (side == Side::kTarget && l.target == i) out.insert(l.source);
  }
  return out;
}

bool lang_is(const std::string& lang, std::string_view prefix) {
  return lang.rfind(prefix, 0) == 0;
}

class Linter {
 public:
  Linter(const VersePair& vp, const Alignment& a, const Lexicons& lex)
      : vp_(vp), a_(a), lex_(lex) {}

  std::vector<LintFinding> run(RuleId rule) const {
    switch (rule) {
      case RuleId::kR1Completeness:
        return completeness();
      case RuleId::kR2NtExclusivity:
        return nt_exclusivity();
      case RuleId::kR3NegationPair:
        return negation_pair();
      case RuleId::kR4BlockClosure:
        return block_closure();
      case RuleId::kR5PunctCrossing:
        return punct_crossing();
      case RuleId::kR6PossessiveSep:
        return possessive_sep();
      case RuleId::kR7AuxAttach:
        return aux_attach();
    }
    return {};
  }

 private:
  const Token& token(Side side, std::size_t i) const {
    return vp_.tokens(side)[i];
  }

  std::vector<LintFinding> completeness() const {
    std::vector<LintFinding> out;
    for (Side side : {Side::kSource, Side::kTarget}) {
      IndexSet covered = a_.not_translated(side);
      for (const auto& l : a_.links) {
        covered.insert(side == Side::kSource ? l.source : l.target);
      }
      for (std::size_t i = 0; i < vp_.tokens(side).size(); ++i) {
        if (covered.count(i)) continue;
        out.push_back(make_finding(
            RuleId::kR1Completeness, {{side, i}},
            std::string(to_string(side)) + " token " + std::to_string(i) +
                " " + quote(token(side, i)) +
                " is neither linked nor marked Not Translated"));
      }
    }
    return out;
  }

  std::vector<LintFinding> nt_exclusivity() const {
    std::vector<LintFinding> out;
    for (Side side : {Side::kSource, Side::kTarget}) {
      for (auto i : a_.not_translated(side)) {
        const auto linked = partners(a_, side, i);
        if (linked.empty()) continue;
        out.push_back(make_finding(
            RuleId::kR2NtExclusivity, {{side, i}},
            std::string(to_string(side)) + " token " + std::to_string(i) +
                " " + quote(token(side, i)) +
                " is marked Not Translated but has " +
                std::to_string(linked.size()) + " link(s)"));
      }
    }
    return out;
  }

  // Both parts of a French two-word negation must link to the same English
  // token set.
  std::vector<LintFinding> negation_pair() const {
    std::vector<LintFinding> out;
    Side fr = Side::kSource;
    if (lang_is(vp_.target_lang, "fr") && lang_is(vp_.source_lang, "en")) {
      fr = Side::kTarget;
    } else if (!(lang_is(vp_.source_lang, "fr") &&
                 lang_is(vp_.target_lang, "en"))) {
      return out;
    }
    const Side en = other(fr);
    const auto& toks = vp_.tokens(fr);
    auto is_head = [&](std::size_t i) {
      return Lexicons::contains(lex_.negation_head, toks[i].surface);
    };
    auto is_companion = [&](std::size_t i) {
      return Lexicons::contains(lex_.negation_companion, toks[i].surface);
    };

    for (std::size_t h = 0; h < toks.size(); ++h) {
      if (!is_head(h)) continue;
      const IndexSet english = partners(a_, fr, h);
      if (english.empty()) continue;
      std::optional<std::size_t> first_companion;
      bool matched = false;
      for (std::size_t c = h + 1; c < toks.size() && !matched; ++c) {
        if (!is_companion(c)) continue;
        if (!first_companion) first_companion = c;
        matched = partners(a_, fr, c) == english;
      }
      if (matched) continue;
      std::vector<TokenRef> refs{{fr, h}};
      std::string msg = "negation " + quote(toks[h]) + " is linked to " +
                        describe(en, english) + " but ";
      if (first_companion) {
        refs.push_back({fr, *first_companion});
        msg += quote(toks[*first_companion]) + " is not linked to the same";
      } else {
        msg += "no later negation companion is linked to the same";
      }
      out.push_back(make_finding(RuleId::kR3NegationPair, refs, msg));
    }

    for (std::size_t c = 0; c < toks.size(); ++c) {
      if (!is_companion(c)) continue;
      const IndexSet english = partners(a_, fr, c);
      const bool negates = std::any_of(
          english.begin(), english.end(), [&](std::size_t e) {
            return Lexicons::contains(lex_.english_negation,
                                      token(en, e).surface);
          });
      if (!negates) continue;
      std::optional<std::size_t> nearest_head;
      bool matched = false;
      for (std::size_t h = 0; h < c; ++h) {
        if (!is_head(h)) continue;
        nearest_head = h;
        if (partners(a_, fr, h) == english) matched = true;
      }
      if (matched || !nearest_head) continue;
      // Already reported from the head's side when the head is linked.
      if (!partners(a_, fr, *nearest_head).empty()) continue;
      out.push_back(make_finding(
          RuleId::kR3NegationPair, {{fr, *nearest_head}, {fr, c}},
          "negation " + quote(toks[c]) + " is linked to " +
              describe(en, english) + " but " + quote(toks[*nearest_head]) +
              " is not linked to the same"));
    }
    sort_by_token(out);
    return out;
  }

  std::vector<LintFinding> block_closure() const {
    std::vector<LintFinding> out;
    for (const auto& c : components(a_)) {
      if (c.sources.size() < 2 || c.targets.size() < 2 || c.complete()) {
        continue;
      }
      std::vector<TokenRef> refs;
      for (auto s : c.sources) refs.push_back({Side::kSource, s});
      for (auto t : c.targets) refs.push_back({Side::kTarget, t});
      std::ostringstream msg;
      msg << "phrasal block of " << c.sources.size() << " x "
          << c.targets.size() << " tokens has " << c.links.size() << " of "
          << c.sources.size() * c.targets.size() << " links";
      out.push_back(make_finding(RuleId::kR4BlockClosure, refs, msg.str()));
    }
    return out;
  }

  std::vector<LintFinding> punct_crossing() const {
    const PunctuationLayer split =
        split_punctuation_layer(vp_, a_, lex_.punctuation);
    if (split.sources.size() > kDefaultPunctuationBound ||
        split.targets.size() > kDefaultPunctuationBound) {
      return {};
    }
    const LinkSet best = optimal_punct_links(vp_, a_, lex_.punctuation);
    LinkSet submitted = split.background;
    submitted.insert(split.layer.begin(), split.layer.end());
    LinkSet optimal = split.background;
    optimal.insert(best.begin(), best.end());
    const std::size_t have = crossing_count(submitted);
    const std::size_t can = crossing_count(optimal);
    if (have <= can) return {};
    LintFinding f = make_finding(
        RuleId::kR5PunctCrossing, {},
        "punctuation links produce " + std::to_string(have) +
            " crossing(s); a pairing with " + std::to_string(can) +
            " exists");
    f.links = best;
    return {f};
  }

  std::vector<LintFinding> possessive_sep() const {
    std::vector<LintFinding> out;
    for (Side side : {Side::kSource, Side::kTarget}) {
      if (!lang_is(vp_.lang(side), "en")) continue;
      const auto& toks = vp_.tokens(side);
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (!Lexicons::contains(lex_.possessive_markers, toks[i].surface)) {
          continue;
        }
        const Token& noun = toks[i - 1];
        if (Lexicons::contains(lex_.punctuation, noun.surface) ||
            Lexicons::contains(lex_.possessive_markers, noun.surface)) {
          continue;
        }
        const IndexSet own = partners(a_, side, i);
        if (own.empty()) continue;
        const IndexSet noun_links = partners(a_, side, i - 1);
        if (!std::includes(noun_links.begin(), noun_links.end(), own.begin(),
                           own.end())) {
          continue;
        }
        out.push_back(make_finding(
            RuleId::kR6PossessiveSep, {{side, i - 1}, {side, i}},
            "possessive marker " + quote(toks[i]) +
                " shares all its links with " + quote(noun) +
                "; link it separately"));
      }
    }
    return out;
  }

  // Component holding an auxiliary but not the verb after it, against a
  // single non-auxiliary token on the other side.
  std::vector<LintFinding> aux_attach() const {
    std::vector<LintFinding> out;
    for (const auto& c : components(a_)) {
      for (Side side : {Side::kSource, Side::kTarget}) {
        const Side opp = other(side);
        const IndexSet& mine = side == Side::kSource ? c.sources : c.targets;
        const IndexSet& theirs = side == Side::kSource ? c.targets : c.sources;
        if (theirs.size() != 1) continue;
        const std::size_t single = *theirs.begin();
        const Token& verb = token(opp, single);
        if (lex_.is_auxiliary(vp_.lang(opp), verb.surface) ||
            Lexicons::contains(lex_.punctuation, verb.surface)) {
          continue;
        }
        for (auto aux : mine) {
          if (!lex_.is_auxiliary(vp_.lang(side), token(side, aux).surface)) {
            continue;
          }
          const auto main = main_verb_after(side, aux);
          if (!main || mine.count(*main)) continue;
          out.push_back(make_finding(
              RuleId::kR7AuxAttach, {{side, aux}, {side, *main}, {opp, single}},
              "auxiliary " + quote(token(side, aux)) + " is linked to " +
                  quote(verb) + " without its main verb; consider linking " +
                  quote(token(side, *main)) + " too"));
        }
      }
    }
    sort_by_token(out);
    return out;
  }

  std::optional<std::size_t> main_verb_after(Side side, std::size_t aux) const {
    constexpr std::size_t kWindow = 3;
    const auto& toks = vp_.tokens(side);
    for (std::size_t k = aux + 1; k < toks.size() && k <= aux + kWindow; ++k) {
      const auto& s = toks[k].surface;
      if (Lexicons::contains(lex_.punctuation, s)) return std::nullopt;
      if (lex_.is_auxiliary(vp_.lang(side), s) || lex_.is_negation(s)) {
        continue;
      }
      return k;
    }
    return std::nullopt;
  }

  std::string describe(Side side, const IndexSet& indices) const {
    std::string out = "{";
    for (auto i : indices) {
      if (out.size() > 1) out += ", ";
      out += quote(token(side, i));
    }
    return out + "}";
  }

  static void sort_by_token(std::vector<LintFinding>& findings) {
    std::stable_sort(findings.begin(), findings.end(),
                     [](const LintFinding& x, const LintFinding& y) {
                       return x.tokens < y.tokens;
                     });
  }

  const VersePair& vp_;
  const Alignment& a_;
  const Lexicons& lex_;
};

void check_applicable(const VersePair& vp, const Alignment& a) {
  if (vp.id != a.verse_id) {
    throw ValidationError("alignment for verse '" + a.verse_id +
                          "' checked against verse '" + vp.id + "'");
  }
  if (a.extent != Extent::of(vp)) {
    throw ValidationError(
        "alignment for verse '" + a.verse_id + "' expects " +
        std::to_string(a.extent.source) + "/" +
        std::to_string(a.extent.target) + " tokens, verse has " +
        std::to_string(vp.source_tokens.size()) + "/" +
        std::to_string(vp.target_tokens.size()));
  }
  check_bounds(a);
}

}  // namespace

std::vector<LintFinding> check_rule(RuleId rule, const VersePair& vp,
                                    const Alignment& a, const Lexicons& lex) {
  check_applicable(vp, a);
  return Linter(vp, a, lex).run(rule);
}

std::vector<LintFinding> check_rule(std::string_view rule, const VersePair& vp,
                                    const Alignment& a, const Lexicons& lex) {
  return check_rule(rule_from_name(rule), vp, a, lex);
}

std::vector<LintFinding> lint(const VersePair& vp, const Alignment& a,
                              const Lexicons& lex) {
  check_applicable(vp, a);
  const Linter linter(vp, a, lex);
  std::vector<LintFinding> out;
  for (RuleId rule : kAllRules) {
    auto found = linter.run(rule);
    out.insert(out.end(), std::make_move_iterator(found.begin()),
               std::make_move_iterator(found.end()));
  }
  return out;
}

}  // namespace blinker
