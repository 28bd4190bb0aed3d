#include "blinker/bitext.hpp"

#include <random>
#include <unordered_set>

#include "blinker/errors.hpp"

namespace blinker {

VersePair make_verse_pair(std::string id, std::string source_lang,
                          std::string target_lang, std::string source_raw,
                          std::string target_raw, const ElisionTable& table,
                          const PunctuationSet& punctuation) {
  VersePair vp{std::move(id),         std::move(source_lang),
               std::move(target_lang), std::move(source_raw),
               std::move(target_raw),  {},
               {}};
  vp.source_tokens = tokenize(vp.source_raw, vp.source_lang, table,
                              Side::kSource, punctuation);
  vp.target_tokens = tokenize(vp.target_raw, vp.target_lang, table,
                              Side::kTarget, punctuation);
  return vp;
}

std::vector<VersePair> load_bitext(std::istream& in, const ElisionTable& table,
                                   const PunctuationSet& punctuation) {
  std::vector<VersePair> corpus;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const auto tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 5) {
      throw ParseError(line_no, "expected 5 tab-separated fields, found " +
                                    std::to_string(fields.size()));
    }
    for (std::size_t f = 0; f < 3; ++f) {
      if (fields[f].empty()) {
        static constexpr const char* kNames[] = {"id", "source_lang",
                                                 "target_lang"};
        throw ParseError(line_no, std::string("empty ") + kNames[f]);
      }
    }
    if (!seen.insert(fields[0]).second) {
      throw ParseError(line_no, "duplicate verse id '" + fields[0] + "'");
    }
    corpus.push_back(make_verse_pair(fields[0], fields[1], fields[2],
                                     fields[3], fields[4], table,
                                     punctuation));
  }
  return corpus;
}

void write_bitext(std::ostream& out, const std::vector<VersePair>& corpus) {
  for (const auto& vp : corpus) {
    out << vp.id << '\t' << vp.source_lang << '\t' << vp.target_lang << '\t'
        << vp.source_raw << '\t' << vp.target_raw << '\n';
  }
}

namespace {

// Unbiased draw in [0, bound) by rejection; std::uniform_int_distribution is
// implementation-defined, which would make seeds non-portable.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() -
                              (std::mt19937_64::max() % bound + 1) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x <= limit) return x % bound;
  }
}

}  // namespace

std::vector<std::vector<std::string>> sample_verse_sets(
    const std::vector<VersePair>& corpus, std::size_t set_size,
    std::size_t n_sets, std::uint64_t seed) {
  const std::size_t needed = set_size * n_sets;
  if (needed > corpus.size()) {
    throw ValidationError("corpus too small: need " + std::to_string(needed) +
                          " verse pairs, have " +
                          std::to_string(corpus.size()));
  }
  std::vector<std::size_t> order(corpus.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  // Partial Fisher-Yates: the first `needed` slots are a uniform sample.
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < needed; ++i) {
    const std::size_t j = i + draw_below(rng, order.size() - i);
    std::swap(order[i], order[j]);
  }

  std::vector<std::vector<std::string>> sets(n_sets);
  for (std::size_t s = 0; s < n_sets; ++s) {
    sets[s].reserve(set_size);
    for (std::size_t k = 0; k < set_size; ++k) {
      sets[s].push_back(corpus[order[s * set_size + k]].id);
    }
  }
  return sets;
}

}  // namespace blinker
