#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "blinker/token.hpp"
#include "blinker/tokenizer.hpp"

namespace blinker {

// Two corresponding verses sharing an id such as "gen:9:20"; the unit of
// annotation.
struct VersePair {
  std::string id;
  std::string source_lang;
  std::string target_lang;
  std::string source_raw;
  std::string target_raw;
  std::vector<Token> source_tokens;
  std::vector<Token> target_tokens;

  const std::vector<Token>& tokens(Side side) const {
    return side == Side::kSource ? source_tokens : target_tokens;
  }
  const std::string& lang(Side side) const {
    return side == Side::kSource ? source_lang : target_lang;
  }

  friend bool operator==(const VersePair&, const VersePair&) = default;
};

VersePair make_verse_pair(std::string id, std::string source_lang,
                          std::string target_lang, std::string source_raw,
                          std::string target_raw, const ElisionTable& table,
                          const PunctuationSet& punctuation =
                              PunctuationSet::defaults());

// Reads the ingestion TSV:
//   id <TAB> source_lang <TAB> target_lang <TAB> source_raw <TAB> target_raw
// Lines starting with '#' and blank lines are skipped. Throws ParseError with
// the 1-based line number on a malformed record and on a duplicate id.
std::vector<VersePair> load_bitext(std::istream& in, const ElisionTable& table,
                                   const PunctuationSet& punctuation =
                                       PunctuationSet::defaults());

// Writes records back in the ingestion format.
void write_bitext(std::ostream& out, const std::vector<VersePair>& corpus);

// Draws `n_sets` disjoint sets of `set_size` verse ids, uniformly without
// replacement. The draw depends only on (corpus order, sizes, seed).
std::vector<std::vector<std::string>> sample_verse_sets(
    const std::vector<VersePair>& corpus, std::size_t set_size,
    std::size_t n_sets, std::uint64_t seed);

}  // namespace blinker
