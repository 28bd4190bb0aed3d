#pragma once

// Brute-force reference implementations and random generators. Nothing here
// calls the code path it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "blinker/alignment.hpp"
#include "blinker/bitext.hpp"
#include "blinker/punctuation.hpp"
#include "blinker/tokenizer.hpp"

namespace blinker::testing {

// All unordered pairs, O(n^2).
inline std::size_t brute_crossings(const std::vector<Link>& links) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < links.size(); ++i) {
    for (std::size_t j = i + 1; j < links.size(); ++j) {
      const auto ds = static_cast<long long>(links[i].source) -
                      static_cast<long long>(links[j].source);
      const auto dt = static_cast<long long>(links[i].target) -
                      static_cast<long long>(links[j].target);
      if (ds * dt < 0) ++n;
    }
  }
  return n;
}

struct BrutePairing {
  LinkSet links;
  std::size_t crossings = 0;
};

// Enumerates every injective partial pairing of `sources` with `targets`
// (restricted to allowed(s, t)), keeps those of maximum size, and returns
// the one with the fewest total crossings against `background`, ties to the
// lexicographically smallest set.
inline BrutePairing brute_punct_pairing(
    const std::vector<std::size_t>& sources,
    const std::vector<std::size_t>& targets, const LinkSet& background,
    const std::function<bool(std::size_t, std::size_t)>& allowed) {
  std::vector<LinkSet> all;
  std::vector<Link> current;
  std::vector<bool> used(targets.size(), false);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == sources.size()) {
      all.emplace_back(current.begin(), current.end());
      return;
    }
    rec(i + 1);
    for (std::size_t j = 0; j < targets.size(); ++j) {
      if (used[j] || !allowed(sources[i], targets[j])) continue;
      used[j] = true;
      current.push_back({sources[i], targets[j]});
      rec(i + 1);
      current.pop_back();
      used[j] = false;
    }
  };
  rec(0);

  std::size_t max_size = 0;
  for (const auto& p : all) max_size = std::max(max_size, p.size());
  std::optional<BrutePairing> best;
  for (const auto& p : all) {
    if (p.size() != max_size) continue;
    std::vector<Link> total(background.begin(), background.end());
    total.insert(total.end(), p.begin(), p.end());
    const std::size_t c = brute_crossings(total);
    if (!best || c < best->crossings ||
        (c == best->crossings && p < best->links)) {
      best = BrutePairing{p, c};
    }
  }
  return *best;
}

// Atom vote counts by scanning each annotator's atom list.
inline std::map<Atom, std::size_t> brute_votes(
    const std::vector<std::vector<Atom>>& per_annotator) {
  std::vector<Atom> universe;
  for (const auto& atoms : per_annotator) {
    for (const auto& a : atoms) {
      if (std::find(universe.begin(), universe.end(), a) == universe.end()) {
        universe.push_back(a);
      }
    }
  }
  std::map<Atom, std::size_t> out;
  for (const auto& atom : universe) {
    for (const auto& atoms : per_annotator) {
      if (std::find(atoms.begin(), atoms.end(), atom) != atoms.end()) {
        ++out[atom];
      }
    }
  }
  return out;
}

struct BruteScores {
  double precision, recall, f1;
};

inline BruteScores brute_compare(const std::vector<Atom>& a,
                                 const std::vector<Atom>& b) {
  std::size_t shared = 0;
  for (const auto& x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) ++shared;
  }
  const double p = a.empty() ? 1.0 : double(shared) / double(a.size());
  const double r = b.empty() ? 1.0 : double(shared) / double(b.size());
  const double f = (p + r) == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
  return {p, r, f};
}

// Returns an empty string when `tokens` reconstruct `raw`, otherwise a
// description of the first violation.
inline std::string reconstruction_error(const std::string& raw,
                                        const std::string& lang,
                                        const std::vector<Token>& tokens,
                                        const ElisionTable& table) {
  std::vector<bool> covered(raw.size(), false);
  std::size_t last_end = 0;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const Token& t = tokens[i];
    if (t.index != i) return "index not dense at " + std::to_string(i);
    if (t.surface.empty()) return "empty surface at " + std::to_string(i);
    if (t.surface.find_first_of(" \t\r\n") != std::string::npos) {
      return "whitespace in surface at " + std::to_string(i);
    }
    if (t.span.end > raw.size() || t.span.begin >= t.span.end) {
      return "bad span at " + std::to_string(i);
    }
    if (t.span.begin < last_end) return "overlap at " + std::to_string(i);
    const std::string piece = raw.substr(t.span.begin, t.span.size());
    if (t.kind == TokenKind::kExpanded) {
      std::vector<std::string> group;
      std::size_t j = i;
      while (j < tokens.size() && tokens[j].kind == TokenKind::kExpanded &&
             tokens[j].span == t.span) {
        group.push_back(tokens[j].surface);
        ++j;
      }
      if (!table.expands_to(lang, piece, group)) {
        return "expansion of '" + piece + "' not in table";
      }
      i = j;
    } else {
      if (piece != t.surface) {
        return "surface '" + t.surface + "' != raw '" + piece + "'";
      }
      ++i;
    }
    for (std::size_t k = t.span.begin; k < t.span.end; ++k) covered[k] = true;
    last_end = t.span.end;
  }
  // Whatever is not covered must be whitespace or a dropped hyphen.
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (covered[k]) continue;
    const unsigned char c = raw[k];
    const bool nbsp = (c == 0xC2 && k + 1 < raw.size() &&
                       static_cast<unsigned char>(raw[k + 1]) == 0xA0) ||
                      (c == 0xA0 && k > 0 &&
                       static_cast<unsigned char>(raw[k - 1]) == 0xC2);
    if (!(c == ' ' || c == '\t' || c == '-' || nbsp)) {
      return "byte " + std::to_string(k) + " not covered";
    }
  }
  return {};
}

// Verse-like text mixing contractions, elisions, clitics, hyphens,
// punctuation and irregular whitespace.
inline std::string random_verse(std::mt19937_64& rng, const std::string& lang) {
  static const std::vector<std::string> kEnglish = {
      "And",     "the",      "Lord",     "Lord's", "brothers'", "keeper",
      "said",    "unto",     "him",      "don't",  "self-made", "God's",
      "(thee)",  "vineyard", "husbandman", "'quoted'", "it's", "Noah,",
      "wages.",  "o'clock",  "Israel;",  "--",     "'",         "'s"};
  static const std::vector<std::string> kFrench = {
      "Du",       "du",      "au",      "aux",      "des",     "l'homme",
      "qu'il",    "d'Israël", "peut-être", "Lui-même", "«",    "»",
      "jusqu'à",  "n'est",   "vigne.",  "L'Éternel", "c'est", "aujourd'hui",
      "salaire,", "(terre)", "Noà",     "commença",  "l’âme", "s'",
      "va-t-il",  "-",       "l'",      "ne"};
  static const std::vector<std::string> kGaps = {" ", " ", " ", "  ", "\t",
                                                 "\xC2\xA0"};
  const auto& vocab = lang == "fr" ? kFrench : kEnglish;
  std::uniform_int_distribution<std::size_t> len(0, 14);
  std::uniform_int_distribution<std::size_t> word(0, vocab.size() - 1);
  std::uniform_int_distribution<std::size_t> gap(0, kGaps.size() - 1);
  std::string out;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) out += kGaps[gap(rng)];
    out += vocab[word(rng)];
  }
  if (n > 0 && rng() % 3 == 0) out += " .";
  return out;
}

}  // namespace blinker::testing
