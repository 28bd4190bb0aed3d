#pragma once

#include <istream>
#include <map>
#include <string>
#include <string_view>

#include "blinker/punctuation.hpp"

namespace blinker {

// Word lists behind the lexicon-driven lint rules and the variation
// categories. Entries are stored case-folded; use contains() to query.
struct Lexicons {
  SurfaceSet negation_head;       // French: ne, n'
  SurfaceSet negation_companion;  // French: pas, point, rien, jamais, que
  SurfaceSet english_negation;    // not, never, nothing, no
  SurfaceSet possessive_markers;  // 's, '
  SurfaceSet punctuation;         // must not contain possessive markers
  std::map<std::string, SurfaceSet, std::less<>> auxiliaries;  // by lang
  std::map<std::string, SurfaceSet, std::less<>> determiners;  // by lang

  static Lexicons defaults();

  // Plain-text config, one entry per line: `list_name <TAB> surface`. List
  // names: negation_head, negation_companion, english_negation,
  // possessive_marker, punctuation, auxiliary_<lang>, determiner_<lang>.
  // Lines starting with '#' are comments. Throws ParseError.
  static Lexicons load(std::istream& in);

  // Throws ValidationError when a required list is empty or possessive
  // markers overlap the punctuation list.
  void validate() const;

  static bool contains(const SurfaceSet& list, std::string_view surface);
  bool is_auxiliary(std::string_view lang, std::string_view surface) const;
  bool is_determiner(std::string_view lang, std::string_view surface) const;
  bool is_negation(std::string_view surface) const;
};

}  // namespace blinker
