#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "blinker/alignment.hpp"
#include "blinker/bitext.hpp"
#include "blinker/lexicons.hpp"

namespace blinker {

enum class RuleId {
  kR1Completeness,
  kR2NtExclusivity,
  kR3NegationPair,
  kR4BlockClosure,
  kR5PunctCrossing,
  kR6PossessiveSep,
  kR7AuxAttach,
};

inline constexpr RuleId kAllRules[] = {
    RuleId::kR1Completeness,  RuleId::kR2NtExclusivity,
    RuleId::kR3NegationPair,  RuleId::kR4BlockClosure,
    RuleId::kR5PunctCrossing, RuleId::kR6PossessiveSep,
    RuleId::kR7AuxAttach,
};

enum class Severity { kError, kWarning, kInfo };

std::string_view rule_name(RuleId rule);  // "R1_COMPLETENESS", ...
RuleId rule_from_name(std::string_view name);  // throws ValidationError
std::string_view to_string(Severity severity);
Severity default_severity(RuleId rule);

// Short topic tag and the guideline text shown next to findings.
std::string_view guideline_tag(RuleId rule);
std::string_view guideline_text(RuleId rule);

struct LintFinding {
  RuleId rule = RuleId::kR1Completeness;
  Severity severity = Severity::kError;
  std::vector<TokenRef> tokens;  // empty only for R5
  LinkSet links;                 // R5: the suggested punctuation pairing
  std::string message;
  std::string guideline;

  friend bool operator==(const LintFinding&, const LintFinding&) = default;
};

// All rules in rule order; findings within a rule are ordered by token.
// Throws ValidationError when `a` does not refer to `vp` and
// OutOfBoundsError on indices outside the verse.
std::vector<LintFinding> lint(const VersePair& vp, const Alignment& a,
                              const Lexicons& lex);

std::vector<LintFinding> check_rule(RuleId rule, const VersePair& vp,
                                    const Alignment& a, const Lexicons& lex);
std::vector<LintFinding> check_rule(std::string_view rule, const VersePair& vp,
                                    const Alignment& a, const Lexicons& lex);

bool has_blocking_findings(const std::vector<LintFinding>& findings);

}  // namespace blinker
