#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "blinker/alignment.hpp"
#include "blinker/bitext.hpp"

namespace blinker {

using SurfaceSet = std::set<std::string, std::less<>>;

inline constexpr std::size_t kDefaultPunctuationBound = 8;

// Marks that may be paired with each other share a class: sentence and
// clause marks (, ; : . ! ?), quotes, opening brackets, closing brackets,
// dashes. Any other mark is its own class.
std::string punctuation_class(std::string_view surface);

// Split of an alignment into the punctuation layer the optimizer may rewrite
// and the fixed background.
struct PunctuationLayer {
  // Punctuation tokens that are not NT-marked and link only to other
  // candidates.
  IndexSet sources;
  IndexSet targets;
  // Links between candidates.
  LinkSet layer;
  // Every other link.
  LinkSet background;
};

PunctuationLayer split_punctuation_layer(const VersePair& vp,
                                         const Alignment& a,
                                         const SurfaceSet& punctuation);

// Pairs candidate punctuation marks, at most one counterpart each and only
// within a class: maximizes the number of pairs, then minimizes
// crossing_count(background + pairs), then picks the lexicographically
// smallest set. Existing links between candidates are ignored. Throws
// ValidationError when either side has more than `max_per_side` candidates.
LinkSet optimal_punct_links(const VersePair& vp, const Alignment& a,
                            const SurfaceSet& punctuation,
                            std::size_t max_per_side =
                                kDefaultPunctuationBound);

}  // namespace blinker
