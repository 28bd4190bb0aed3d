#pragma once

#include <istream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "blinker/token.hpp"

namespace blinker {

// Retokenization table, per language. Keys come in three shapes:
//   "du"  whole-word contraction, expanded to its replacements
//   "l'"  prefix elision (ends with an apostrophe), split off the word
//   "'s"  suffix clitic (starts with an apostrophe), split off the word
// Lookup folds case and treats U+2019 as an ASCII apostrophe. When the
// original starts with a capital, the first replacement is capitalized.
class ElisionTable {
 public:
  enum class EntryKind { kContraction, kPrefix, kSuffix };

  static ElisionTable defaults();

  // Throws ValidationError on an empty key or replacement list.
  void add(std::string_view lang, std::string_view contraction,
           std::vector<std::string> replacements);

  // Replacements with case restored, or empty if `surface` is not a key.
  std::vector<std::string> expand(std::string_view lang,
                                  std::string_view surface) const;

  // Reverse lookup: whether `replacements` is what `contraction` expands to.
  bool expands_to(std::string_view lang, std::string_view contraction,
                  const std::vector<std::string>& replacements) const;

  bool contains(std::string_view lang, std::string_view surface) const;
  bool has_kind(std::string_view lang, std::string_view surface,
                EntryKind kind) const;

  // Text format: `lang <TAB> contraction <TAB> space-separated replacements`,
  // `#` comments. Entries are added on top of the current contents.
  void load(std::istream& in);

  static EntryKind classify(std::string_view key);

 private:
  // lang -> folded key -> replacements (as written in the table)
  std::map<std::string, std::map<std::string, std::vector<std::string>>,
           std::less<>>
      entries_;
};

// Characters split off words as separate tokens. Apostrophes and the ASCII
// hyphen get extra treatment in the tokenizer regardless of this set.
class PunctuationSet {
 public:
  // ASCII punctuation plus French guillemets.
  static PunctuationSet defaults();

  PunctuationSet() = default;
  explicit PunctuationSet(std::set<char32_t> code_points)
      : code_points_(std::move(code_points)) {}

  bool contains(char32_t cp) const { return code_points_.count(cp) != 0; }
  void insert(char32_t cp) { code_points_.insert(cp); }
  void erase(char32_t cp) { code_points_.erase(cp); }

 private:
  std::set<char32_t> code_points_;
};

// Splits one verse into tokens: whitespace split, punctuation detached,
// hyphenated words split with the hyphen dropped, contractions expanded and
// elisions/clitics split according to `table`. Never fails.
std::vector<Token> tokenize(std::string_view raw, std::string_view lang,
                            const ElisionTable& table,
                            Side side = Side::kSource,
                            const PunctuationSet& punctuation =
                                PunctuationSet::defaults());

}  // namespace blinker
