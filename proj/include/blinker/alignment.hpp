#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "blinker/bitext.hpp"
#include "blinker/token.hpp"

namespace blinker {

struct Link {
  std::size_t source = 0;
  std::size_t target = 0;

  friend auto operator<=>(const Link&, const Link&) = default;
};

using LinkSet = std::set<Link>;
using IndexSet = std::set<std::size_t>;

// Token counts of the verse an alignment refers to.
struct Extent {
  std::size_t source = 0;
  std::size_t target = 0;

  static Extent of(const VersePair& vp) {
    return {vp.source_tokens.size(), vp.target_tokens.size()};
  }
  std::size_t size(Side side) const {
    return side == Side::kSource ? source : target;
  }
  friend bool operator==(const Extent&, const Extent&) = default;
};

// One annotator's alignment of one verse pair. The editing functions below
// keep "Not Translated" marks exclusive with links (a marked index appears in
// no link); data read from files may violate that, which the linter reports.
struct Alignment {
  std::string verse_id;
  std::string annotator_id;
  Extent extent;
  LinkSet links;
  IndexSet nt_source;
  IndexSet nt_target;
  std::uint64_t revision = 0;

  const IndexSet& not_translated(Side side) const {
    return side == Side::kSource ? nt_source : nt_target;
  }
  IndexSet& not_translated(Side side) {
    return side == Side::kSource ? nt_source : nt_target;
  }

  friend bool operator==(const Alignment&, const Alignment&) = default;
};

Alignment empty_alignment(const VersePair& vp, std::string annotator_id);

// Throws OutOfBoundsError naming the side and bound of the first offending
// index.
void check_bounds(const Alignment& a);
bool nt_exclusive(const Alignment& a);

// Each edit returns a new snapshot with revision + 1.
Alignment toggle_link(const Alignment& a, std::size_t source,
                      std::size_t target);
Alignment mark_not_translated(const Alignment& a, Side side, std::size_t index);
// Adds the complete bipartite block sources x targets. Throws
// ValidationError on an empty side.
Alignment block_link(const Alignment& a, const IndexSet& sources,
                     const IndexSet& targets);

// A connected group of linked tokens.
struct Component {
  IndexSet sources;
  IndexSet targets;
  LinkSet links;

  bool complete() const {
    return links.size() == sources.size() * targets.size();
  }
  friend bool operator==(const Component&, const Component&) = default;
};

// Connected components of the link graph, ordered by smallest source index
// then smallest target index.
std::vector<Component> components(const Alignment& a);

// Number of unordered link pairs whose source and target orders disagree.
// O(n log n).
std::size_t crossing_count(std::span<const Link> links);
std::size_t crossing_count(const LinkSet& links);

// Unified annotation decision: a link "s-t", a source NT mark "s-∅" or a
// target NT mark "∅-t".
struct Atom {
  std::optional<std::size_t> source;
  std::optional<std::size_t> target;

  static Atom link(std::size_t s, std::size_t t) { return {s, t}; }
  static Atom nt_source(std::size_t s) { return {s, std::nullopt}; }
  static Atom nt_target(std::size_t t) { return {std::nullopt, t}; }

  bool is_link() const { return source && target; }
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

using AtomSet = std::set<Atom>;

AtomSet to_atoms(const Alignment& a);
// Checks bounds and that no atom is empty; does not enforce NT exclusivity.
Alignment from_atoms(std::string verse_id, std::string annotator_id,
                     Extent extent, const AtomSet& atoms);

}  // namespace blinker
