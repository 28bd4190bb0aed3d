#include "blinker/agreement.hpp"

#include <algorithm>

#include "blinker/errors.hpp"

namespace blinker {

Scores compare_atoms(const AtomSet& a, const AtomSet& b) {
  std::size_t shared = 0;
  for (const auto& atom : a) shared += b.count(atom);
  Scores s;
  s.precision = a.empty() ? 1.0 : static_cast<double>(shared) / a.size();
  s.recall = b.empty() ? 1.0 : static_cast<double>(shared) / b.size();
  const double sum = s.precision + s.recall;
  s.f1 = sum == 0.0 ? 0.0 : 2.0 * s.precision * s.recall / sum;
  return s;
}

Scores compare(const Alignment& a, const Alignment& b) {
  if (a.verse_id != b.verse_id) {
    throw ValidationError("cannot compare alignments of verses '" +
                          a.verse_id + "' and '" + b.verse_id + "'");
  }
  return compare_atoms(to_atoms(a), to_atoms(b));
}

AnnotationSet::AnnotationSet(std::vector<Alignment> alignments) {
  if (alignments.empty()) {
    throw ValidationError("annotation set needs at least one alignment");
  }
  verse_id_ = alignments.front().verse_id;
  extent_ = alignments.front().extent;
  for (auto& a : alignments) {
    if (a.verse_id != verse_id_) {
      throw ValidationError("annotation set mixes verses '" + verse_id_ +
                            "' and '" + a.verse_id + "'");
    }
    if (a.extent != extent_) {
      throw ValidationError("annotation set for '" + verse_id_ +
                            "' mixes token counts");
    }
    const std::string who = a.annotator_id;
    if (!alignments_.emplace(who, std::move(a)).second) {
      throw ValidationError("annotator '" + who + "' appears twice for '" +
                            verse_id_ + "'");
    }
  }
}

VoteTable count_votes(const AnnotationSet& set) {
  VoteTable votes;
  for (const auto& [who, a] : set.alignments()) {
    for (const auto& atom : to_atoms(a)) ++votes[atom];
  }
  return votes;
}

std::string atom_category(const Atom& atom, const VersePair& vp,
                          const Lexicons& lex) {
  std::vector<std::pair<Side, const Token*>> touched;
  if (atom.source) {
    touched.emplace_back(Side::kSource, &vp.source_tokens.at(*atom.source));
  }
  if (atom.target) {
    touched.emplace_back(Side::kTarget, &vp.target_tokens.at(*atom.target));
  }
  auto any = [&](auto&& pred) {
    return std::any_of(touched.begin(), touched.end(), [&](const auto& st) {
      return pred(st.first, st.second->surface);
    });
  };
  if (any([&](Side, const std::string& s) { return lex.is_negation(s); })) {
    return "negation";
  }
  if (any([&](Side, const std::string& s) {
        return Lexicons::contains(lex.punctuation, s);
      })) {
    return "punctuation";
  }
  if (any([&](Side, const std::string& s) {
        return Lexicons::contains(lex.possessive_markers, s);
      })) {
    return "possessive";
  }
  if (any([&](Side side, const std::string& s) {
        return lex.is_auxiliary(vp.lang(side), s);
      })) {
    return "auxiliary";
  }
  if (any([&](Side side, const std::string& s) {
        return lex.is_determiner(vp.lang(side), s);
      })) {
    return "determiner";
  }
  return "uncategorized";
}

AgreementReport variation_report(const AnnotationSet& set, const VersePair& vp,
                                 const Lexicons& lex) {
  if (set.verse_id() != vp.id) {
    throw ValidationError("annotations for '" + set.verse_id() +
                          "' reported against verse '" + vp.id + "'");
  }
  if (set.extent() != Extent::of(vp)) {
    throw ValidationError("annotations for '" + vp.id +
                          "' do not match the verse's tokens");
  }
  for (const auto& [who, a] : set.alignments()) check_bounds(a);

  AgreementReport report;
  report.verse_id = set.verse_id();
  report.n_annotators = set.size();
  report.vote_table = count_votes(set);

  std::map<std::string, AtomSet> atoms;
  for (const auto& [who, a] : set.alignments()) atoms[who] = to_atoms(a);
  for (const auto& [x, ax] : atoms) {
    for (const auto& [y, ay] : atoms) {
      if (x != y) report.pairwise[{x, y}] = compare_atoms(ax, ay);
    }
  }

  for (const auto& [atom, count] : report.vote_table) {
    if (count == report.n_annotators) continue;
    VariationEntry entry{atom, {}, atom_category(atom, vp, lex)};
    for (const auto& [who, held] : atoms) {
      if (held.count(atom)) entry.holders.push_back(who);
    }
    report.variation.push_back(std::move(entry));
  }
  return report;
}

VoteResult majority_vote(const AnnotationSet& set, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw ValidationError("vote threshold must be in (0, 1], got " +
                          std::to_string(threshold));
  }
  const auto n = static_cast<double>(set.size());
  AtomSet winners;
  for (const auto& [atom, count] : count_votes(set)) {
    if (static_cast<double>(count) / n > threshold) winners.insert(atom);
  }

  VoteResult result;
  Alignment& gold = result.gold;
  gold.verse_id = set.verse_id();
  gold.annotator_id = "gold";
  gold.extent = set.extent();
  for (const auto& atom : winners) {
    if (atom.is_link()) gold.links.insert({*atom.source, *atom.target});
  }
  IndexSet linked_source, linked_target;
  for (const auto& l : gold.links) {
    linked_source.insert(l.source);
    linked_target.insert(l.target);
  }
  // Links win over NT marks on the same token.
  for (const auto& atom : winners) {
    if (atom.is_link()) continue;
    if (atom.source && !linked_source.count(*atom.source)) {
      gold.nt_source.insert(*atom.source);
    }
    if (atom.target && !linked_target.count(*atom.target)) {
      gold.nt_target.insert(*atom.target);
    }
  }

  for (std::size_t i = 0; i < gold.extent.source; ++i) {
    if (!linked_source.count(i) && !gold.nt_source.count(i)) {
      result.unresolved.push_back({Side::kSource, i});
    }
  }
  for (std::size_t i = 0; i < gold.extent.target; ++i) {
    if (!linked_target.count(i) && !gold.nt_target.count(i)) {
      result.unresolved.push_back({Side::kTarget, i});
    }
  }
  return result;
}

bool pairwise_symmetric(const PairwiseTable& pairwise) {
  for (const auto& [pair, scores] : pairwise) {
    const auto mirror = pairwise.find({pair.second, pair.first});
    if (mirror == pairwise.end()) return false;
    if (scores.precision != mirror->second.recall) return false;
  }
  return true;
}

bool pairwise_symmetry_check(const AnnotationSet& set) {
  PairwiseTable pairwise;
  for (const auto& [x, ax] : set.alignments()) {
    for (const auto& [y, ay] : set.alignments()) {
      if (x != y) pairwise[{x, y}] = compare(ax, ay);
    }
  }
  return pairwise_symmetric(pairwise);
}

}  // namespace blinker
