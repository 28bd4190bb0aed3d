#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "blinker/alignment.hpp"
#include "blinker/bitext.hpp"
#include "blinker/lexicons.hpp"

namespace blinker {

struct Scores {
  double precision = 1.0;
  double recall = 1.0;
  double f1 = 1.0;

  friend bool operator==(const Scores&, const Scores&) = default;
};

// Set precision/recall/F1 of `a` against `b` over unified atoms.
// |A| = 0 gives precision 1, |B| = 0 gives recall 1, and F1 is 0 when
// precision + recall is 0.
Scores compare_atoms(const AtomSet& a, const AtomSet& b);
// Throws ValidationError when the alignments refer to different verses.
Scores compare(const Alignment& a, const Alignment& b);

// All annotators' alignments of one verse.
class AnnotationSet {
 public:
  // Throws ValidationError on an empty list, mixed verse ids, differing
  // extents or a repeated annotator.
  explicit AnnotationSet(std::vector<Alignment> alignments);

  const std::string& verse_id() const { return verse_id_; }
  Extent extent() const { return extent_; }
  std::size_t size() const { return alignments_.size(); }
  const std::map<std::string, Alignment>& alignments() const {
    return alignments_;
  }

 private:
  std::string verse_id_;
  Extent extent_;
  std::map<std::string, Alignment> alignments_;
};

using PairwiseTable = std::map<std::pair<std::string, std::string>, Scores>;
using VoteTable = std::map<Atom, std::size_t>;

struct VariationEntry {
  Atom atom;
  std::vector<std::string> holders;  // annotators asserting the atom
  std::string category;              // lexicon class or "uncategorized"
};

struct AgreementReport {
  std::string verse_id;
  std::size_t n_annotators = 0;
  PairwiseTable pairwise;  // every ordered pair of distinct annotators
  VoteTable vote_table;
  std::vector<VariationEntry> variation;  // atoms not held by everyone
};

VoteTable count_votes(const AnnotationSet& set);

// Lexicon class of the tokens an atom touches, checked in the order
// negation, punctuation, possessive, auxiliary, determiner.
std::string atom_category(const Atom& atom, const VersePair& vp,
                          const Lexicons& lex);

AgreementReport variation_report(const AnnotationSet& set, const VersePair& vp,
                                 const Lexicons& lex);

struct VoteResult {
  Alignment gold;
  // Tokens covered by no surviving atom.
  std::vector<TokenRef> unresolved;
};

// Keeps atoms held by more than `threshold` of the annotators. A surviving
// NT mark on a token that also keeps a link is dropped. Throws
// ValidationError unless 0 < threshold <= 1.
VoteResult majority_vote(const AnnotationSet& set, double threshold = 0.5);

bool pairwise_symmetric(const PairwiseTable& pairwise);
bool pairwise_symmetry_check(const AnnotationSet& set);

}  // namespace blinker
