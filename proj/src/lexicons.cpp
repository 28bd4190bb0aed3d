#include "blinker/lexicons.hpp"

#include <initializer_list>

#include "blinker/errors.hpp"
#include "utf8.hpp"

namespace blinker {

namespace {

void add_all(SurfaceSet& set, std::initializer_list<const char*> words) {
  for (const char* w : words) set.insert(utf8::fold(w));
}

}  // namespace

Lexicons Lexicons::defaults() {
  Lexicons lex;
  add_all(lex.negation_head, {"ne", "n'"});
  add_all(lex.negation_companion, {"pas", "point", "rien", "jamais", "que"});
  add_all(lex.english_negation, {"not", "never", "nothing", "no"});
  add_all(lex.possessive_markers, {"'s", "'"});
  // Tokenizer punctuation minus the apostrophe, which is a possessive marker.
  for (char32_t c = 0x21; c < 0x7F; ++c) {
    const bool alnum = (c >= U'0' && c <= U'9') || (c >= U'A' && c <= U'Z') ||
                       (c >= U'a' && c <= U'z');
    if (!alnum && c != U'\'') lex.punctuation.insert(utf8::encode(c));
  }
  add_all(lex.punctuation, {"«", "»"});

  add_all(lex.auxiliaries["en"],
          {"be",    "am",    "is",     "are",   "was",   "were",  "been",
           "being", "have",  "has",    "had",   "having", "do",   "does",
           "did",   "will",  "would",  "shall", "should", "may",  "might",
           "must",  "can",   "could",  "wilt",  "shalt",  "hath", "hast",
           "doth",  "dost",  "art",    "wast",  "didst"});
  add_all(lex.auxiliaries["fr"],
          {"suis",   "es",      "est",     "sommes",  "êtes",    "sont",
           "étais",  "était",   "étions",  "étiez",   "étaient", "fus",
           "fut",    "fûmes",   "fûtes",   "furent",  "serai",   "seras",
           "sera",   "serons",  "serez",   "seront",  "serais",  "serait",
           "serions", "seriez", "seraient", "sois",   "soit",    "soyons",
           "soyez",  "soient",  "été",     "étant",   "être",    "ai",
           "as",     "a",       "avons",   "avez",    "ont",     "avais",
           "avait",  "avions",  "aviez",   "avaient", "eus",     "eut",
           "eûmes",  "eûtes",   "eurent",  "aurai",   "auras",   "aura",
           "aurons", "aurez",   "auront",  "aurais",  "aurait",  "aurions",
           "auriez", "auraient", "aie",    "aies",    "ait",     "ayons",
           "ayez",   "aient",   "eu",      "ayant",   "avoir"});
  add_all(lex.determiners["en"],
          {"the", "a", "an", "this", "that", "these", "those", "some", "any"});
  add_all(lex.determiners["fr"],
          {"le", "la", "les", "l'", "un", "une", "des", "du", "de", "ce", "cet",
           "cette", "ces"});
  return lex;
}

Lexicons Lexicons::load(std::istream& in) {
  Lexicons lex;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab + 1 == line.size()) {
      throw ParseError(line_no, "expected `list_name <TAB> surface`");
    }
    const std::string name = line.substr(0, tab);
    const std::string surface = utf8::fold(line.substr(tab + 1));
    if (name == "negation_head") {
      lex.negation_head.insert(surface);
    } else if (name == "negation_companion") {
      lex.negation_companion.insert(surface);
    } else if (name == "english_negation") {
      lex.english_negation.insert(surface);
    } else if (name == "possessive_marker") {
      lex.possessive_markers.insert(surface);
    } else if (name == "punctuation") {
      lex.punctuation.insert(surface);
    } else if (name.rfind("auxiliary_", 0) == 0 && name.size() > 10) {
      lex.auxiliaries[name.substr(10)].insert(surface);
    } else if (name.rfind("determiner_", 0) == 0 && name.size() > 11) {
      lex.determiners[name.substr(11)].insert(surface);
    } else {
      throw ParseError(line_no, "unknown lexicon list '" + name + "'");
    }
  }
  try {
    lex.validate();
  } catch (const ValidationError& e) {
    throw ParseError(0, e.what());
  }
  return lex;
}

void Lexicons::validate() const {
  const std::pair<const char*, const SurfaceSet*> required[] = {
      {"negation_head", &negation_head},
      {"negation_companion", &negation_companion},
      {"english_negation", &english_negation},
      {"possessive_marker", &possessive_markers},
      {"punctuation", &punctuation},
  };
  for (const auto& [name, list] : required) {
    if (list->empty()) {
      throw ValidationError(std::string("lexicon list '") + name +
                            "' is empty");
    }
  }
  for (const auto& m : possessive_markers) {
    if (punctuation.count(m)) {
      throw ValidationError("possessive marker '" + m +
                            "' is also listed as punctuation");
    }
  }
}

bool Lexicons::contains(const SurfaceSet& list, std::string_view surface) {
  return list.count(utf8::fold(surface)) != 0;
}

bool Lexicons::is_auxiliary(std::string_view lang,
                            std::string_view surface) const {
  const auto it = auxiliaries.find(lang);
  return it != auxiliaries.end() && contains(it->second, surface);
}

bool Lexicons::is_determiner(std::string_view lang,
                             std::string_view surface) const {
  const auto it = determiners.find(lang);
  return it != determiners.end() && contains(it->second, surface);
}

bool Lexicons::is_negation(std::string_view surface) const {
  return contains(negation_head, surface) ||
         contains(negation_companion, surface) ||
         contains(english_negation, surface);
}

}  // namespace blinker
