#include "blinker/tokenizer.hpp"

#include <sstream>

#include "blinker/errors.hpp"
#include "utf8.hpp"

namespace blinker {

std::string_view to_string(Side side) {
  return side == Side::kSource ? "source" : "target";
}

Side side_from_string(std::string_view s) {
  if (s == "source") return Side::kSource;
  if (s == "target") return Side::kTarget;
  throw ValidationError("unknown side '" + std::string(s) + "'");
}

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord:
      return "word";
    case TokenKind::kPunctuation:
      return "punctuation";
    case TokenKind::kExpanded:
      return "expanded";
  }
  return "word";
}

// ---------------------------------------------------------------------------
// ElisionTable

ElisionTable ElisionTable::defaults() {
  ElisionTable table;
  table.add("fr", "du", {"de", "le"});
  table.add("fr", "des", {"de", "les"});
  table.add("fr", "au", {"à", "le"});
  table.add("fr", "aux", {"à", "les"});
  for (const char* prefix : {"l'", "d'", "j'", "n'", "s'", "c'", "qu'", "m'",
                             "t'", "jusqu'", "lorsqu'", "puisqu'"}) {
    table.add("fr", prefix, {prefix});
  }
  table.add("en", "'s", {"'s"});
  table.add("en", "'", {"'"});
  return table;
}

ElisionTable::EntryKind ElisionTable::classify(std::string_view key) {
  const std::string folded = utf8::fold(key);
  if (!folded.empty() && folded.front() == '\'') return EntryKind::kSuffix;
  if (folded.size() > 1 && folded.back() == '\'') return EntryKind::kPrefix;
  return EntryKind::kContraction;
}

void ElisionTable::add(std::string_view lang, std::string_view contraction,
                       std::vector<std::string> replacements) {
  if (contraction.empty()) {
    throw ValidationError("elision table: empty contraction");
  }
  if (replacements.empty()) {
    throw ValidationError("elision table: empty replacement for '" +
                          std::string(contraction) + "'");
  }
  for (const auto& r : replacements) {
    if (r.empty()) {
      throw ValidationError("elision table: empty replacement word for '" +
                            std::string(contraction) + "'");
    }
  }
  entries_[std::string(lang)][utf8::fold(contraction)] =
      std::move(replacements);
}

std::vector<std::string> ElisionTable::expand(std::string_view lang,
                                              std::string_view surface) const {
  const auto by_lang = entries_.find(lang);
  if (by_lang == entries_.end()) return {};
  const auto entry = by_lang->second.find(utf8::fold(surface));
  if (entry == by_lang->second.end()) return {};
  std::vector<std::string> out = entry->second;
  if (utf8::starts_upper(surface)) {
    out.front() = utf8::capitalize_first(out.front());
  }
  return out;
}

bool ElisionTable::expands_to(
    std::string_view lang, std::string_view contraction,
    const std::vector<std::string>& replacements) const {
  const auto expected = expand(lang, contraction);
  if (expected.empty() || expected.size() != replacements.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (utf8::fold(expected[i]) != utf8::fold(replacements[i])) return false;
  }
  return true;
}

bool ElisionTable::contains(std::string_view lang,
                            std::string_view surface) const {
  const auto by_lang = entries_.find(lang);
  return by_lang != entries_.end() &&
         by_lang->second.count(utf8::fold(surface)) != 0;
}

bool ElisionTable::has_kind(std::string_view lang, std::string_view surface,
                            EntryKind kind) const {
  return contains(lang, surface) && classify(surface) == kind;
}

void ElisionTable::load(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab1 = line.find('\t');
    const auto tab2 =
        tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      throw ParseError(line_no, "elision entry needs 3 tab-separated fields");
    }
    std::vector<std::string> replacements;
    std::istringstream words(line.substr(tab2 + 1));
    for (std::string w; words >> w;) replacements.push_back(w);
    try {
      add(line.substr(0, tab1), line.substr(tab1 + 1, tab2 - tab1 - 1),
          std::move(replacements));
    } catch (const ValidationError& e) {
      throw ParseError(line_no, e.what());
    }
  }
}

// ---------------------------------------------------------------------------
// PunctuationSet

PunctuationSet PunctuationSet::defaults() {
  PunctuationSet set;
  for (char32_t c = 0x21; c < 0x7F; ++c) {
    const bool alnum = (c >= U'0' && c <= U'9') || (c >= U'A' && c <= U'Z') ||
                       (c >= U'a' && c <= U'z');
    if (!alnum) set.insert(c);
  }
  set.insert(0x00AB);  // «
  set.insert(0x00BB);  // »
  return set;
}

// ---------------------------------------------------------------------------
// tokenize

namespace {

class Tokenizer {
 public:
  Tokenizer(std::string_view raw, std::string_view lang,
            const ElisionTable& table, Side side,
            const PunctuationSet& punctuation)
      : raw_(raw),
        lang_(lang),
        table_(table),
        side_(side),
        punctuation_(punctuation) {}

  std::vector<Token> run() {
    const auto cps = utf8::decode(raw_);
    std::size_t i = 0;
    while (i < cps.size()) {
      if (utf8::is_space(cps[i].value)) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < cps.size() && !utf8::is_space(cps[j].value)) ++j;
      chunk(std::vector<utf8::CodePoint>(cps.begin() + i, cps.begin() + j));
      i = j;
    }
    return std::move(tokens_);
  }

 private:
  enum class Class { kWord, kApostrophe, kHyphen, kPunct };

  Class classify(char32_t cp) const {
    if (utf8::is_apostrophe(cp)) return Class::kApostrophe;
    if (cp == U'-') return Class::kHyphen;
    if (punctuation_.contains(cp)) return Class::kPunct;
    return Class::kWord;
  }

  void chunk(const std::vector<utf8::CodePoint>& cps) {
    const std::size_t begin = cps.front().offset;
    const std::size_t end = cps.back().offset + cps.back().length;
    if (table_.contains(lang_, raw_.substr(begin, end - begin))) {
      emit_key(begin, end);
      return;
    }

    std::vector<Class> cls;
    cls.reserve(cps.size());
    for (const auto& cp : cps) cls.push_back(classify(cp.value));
    auto word_at = [&](std::size_t k) {
      return k < cls.size() && cls[k] == Class::kWord;
    };
    auto joinable = [&](std::size_t k) {
      switch (cls[k]) {
        case Class::kWord:
          return true;
        case Class::kApostrophe:
          return (k > 0 && word_at(k - 1)) || word_at(k + 1);
        case Class::kHyphen:
          return k > 0 && word_at(k - 1) && word_at(k + 1);
        case Class::kPunct:
          return false;
      }
      return false;
    };

    std::size_t k = 0;
    while (k < cps.size()) {
      if (!joinable(k)) {
        emit(cps[k].offset, cps[k].offset + cps[k].length,
             TokenKind::kPunctuation);
        ++k;
        continue;
      }
      // A run of joinable code points; internal hyphens separate parts.
      std::size_t part_begin = cps[k].offset;
      while (k < cps.size() && joinable(k)) {
        if (cls[k] == Class::kHyphen) {
          part(part_begin, cps[k].offset);
          part_begin = cps[k].offset + cps[k].length;
        }
        ++k;
      }
      part(part_begin, cps[k - 1].offset + cps[k - 1].length);
    }
  }

  // Resolves apostrophes inside one hyphen-free word.
  void part(std::size_t begin, std::size_t end) {
    if (begin >= end) return;
    const std::string_view text = raw_.substr(begin, end - begin);
    if (table_.contains(lang_, text)) {
      emit_key(begin, end);
      return;
    }
    const auto cps = utf8::decode(text);
    if (utf8::is_apostrophe(cps.front().value)) {
      emit(begin, begin + cps.front().length, TokenKind::kPunctuation);
      part(begin + cps.front().length, end);
      return;
    }
    for (const auto& cp : cps) {
      if (!utf8::is_apostrophe(cp.value)) continue;
      const std::size_t cut = cp.offset + cp.length;
      if (cut < text.size() &&
          table_.has_kind(lang_, text.substr(0, cut),
                          ElisionTable::EntryKind::kPrefix)) {
        emit_key(begin, begin + cut);
        part(begin + cut, end);
        return;
      }
    }
    for (const auto& cp : cps) {
      if (!utf8::is_apostrophe(cp.value) || cp.offset == 0) continue;
      if (table_.has_kind(lang_, text.substr(cp.offset),
                          ElisionTable::EntryKind::kSuffix)) {
        part(begin, begin + cp.offset);
        emit_key(begin + cp.offset, end);
        return;
      }
    }
    if (utf8::is_apostrophe(cps.back().value)) {
      part(begin, begin + cps.back().offset);
      emit(begin + cps.back().offset, end, TokenKind::kPunctuation);
      return;
    }
    emit(begin, end, TokenKind::kWord);
  }

  void emit_key(std::size_t begin, std::size_t end) {
    const std::string_view text = raw_.substr(begin, end - begin);
    const auto replacements = table_.expand(lang_, text);
    if (replacements.size() == 1 &&
        utf8::fold(replacements.front()) == utf8::fold(text)) {
      emit(begin, end, TokenKind::kWord);
      return;
    }
    for (const auto& r : replacements) {
      tokens_.push_back(
          Token{tokens_.size(), r, side_, Span{begin, end}, TokenKind::kExpanded});
    }
  }

  void emit(std::size_t begin, std::size_t end, TokenKind kind) {
    tokens_.push_back(Token{tokens_.size(),
                            std::string(raw_.substr(begin, end - begin)), side_,
                            Span{begin, end}, kind});
  }

  std::string_view raw_;
  std::string_view lang_;
  const ElisionTable& table_;
  Side side_;
  const PunctuationSet& punctuation_;
  std::vector<Token> tokens_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view raw, std::string_view lang,
                            const ElisionTable& table, Side side,
                            const PunctuationSet& punctuation) {
  return Tokenizer(raw, lang, table, side, punctuation).run();
}

}  // namespace blinker
