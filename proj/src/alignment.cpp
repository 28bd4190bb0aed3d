#include "blinker/alignment.hpp"

#include <algorithm>
#include <numeric>

#include "blinker/errors.hpp"

namespace blinker {

Alignment empty_alignment(const VersePair& vp, std::string annotator_id) {
  Alignment a;
  a.verse_id = vp.id;
  a.annotator_id = std::move(annotator_id);
  a.extent = Extent::of(vp);
  return a;
}

namespace {

void require_in_bounds(const Extent& extent, Side side, std::size_t index) {
  const std::size_t bound = extent.size(side);
  if (index >= bound) {
    throw OutOfBoundsError(std::string(to_string(side)) + " index " +
                           std::to_string(index) + " out of bounds (" +
                           std::string(to_string(side)) + " has " +
                           std::to_string(bound) + " tokens)");
  }
}

}  // namespace

void check_bounds(const Alignment& a) {
  for (const auto& l : a.links) {
    require_in_bounds(a.extent, Side::kSource, l.source);
    require_in_bounds(a.extent, Side::kTarget, l.target);
  }
  for (auto i : a.nt_source) require_in_bounds(a.extent, Side::kSource, i);
  for (auto i : a.nt_target) require_in_bounds(a.extent, Side::kTarget, i);
}

bool nt_exclusive(const Alignment& a) {
  return std::none_of(a.links.begin(), a.links.end(), [&](const Link& l) {
    return a.nt_source.count(l.source) || a.nt_target.count(l.target);
  });
}

Alignment toggle_link(const Alignment& a, std::size_t source,
                      std::size_t target) {
  require_in_bounds(a.extent, Side::kSource, source);
  require_in_bounds(a.extent, Side::kTarget, target);
  Alignment next = a;
  const Link link{source, target};
  if (next.links.erase(link) == 0) {
    next.links.insert(link);
    next.nt_source.erase(source);
    next.nt_target.erase(target);
  }
  ++next.revision;
  return next;
}

Alignment mark_not_translated(const Alignment& a, Side side,
                              std::size_t index) {
  require_in_bounds(a.extent, side, index);
  Alignment next = a;
  next.not_translated(side).insert(index);
  std::erase_if(next.links, [&](const Link& l) {
    return (side == Side::kSource ? l.source : l.target) == index;
  });
  ++next.revision;
  return next;
}

Alignment block_link(const Alignment& a, const IndexSet& sources,
                     const IndexSet& targets) {
  if (sources.empty() || targets.empty()) {
    throw ValidationError("block link needs at least one token on each side");
  }
  for (auto s : sources) require_in_bounds(a.extent, Side::kSource, s);
  for (auto t : targets) require_in_bounds(a.extent, Side::kTarget, t);
  Alignment next = a;
  for (auto s : sources) {
    next.nt_source.erase(s);
    for (auto t : targets) next.links.insert({s, t});
  }
  for (auto t : targets) next.nt_target.erase(t);
  ++next.revision;
  return next;
}

std::vector<Component> components(const Alignment& a) {
  // Union-find over source nodes [0, S) and target nodes [S, S + T).
  std::size_t n_source = a.extent.source;
  std::size_t n_target = a.extent.target;
  for (const auto& l : a.links) {
    n_source = std::max(n_source, l.source + 1);
    n_target = std::max(n_target, l.target + 1);
  }
  const std::size_t n = n_source + n_target;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& l : a.links) {
    parent[find(l.source)] = find(n_source + l.target);
  }

  std::vector<Component> out;
  std::vector<std::size_t> slot(n, static_cast<std::size_t>(-1));
  // Links are visited in (source, target) order, so components appear in
  // order of their smallest source index and, for that source, smallest
  // target.
  for (const auto& l : a.links) {
    const std::size_t root = find(l.source);
    if (slot[root] == static_cast<std::size_t>(-1)) {
      slot[root] = out.size();
      out.emplace_back();
    }
    Component& c = out[slot[root]];
    c.sources.insert(l.source);
    c.targets.insert(l.target);
    c.links.insert(l);
  }
  return out;
}

std::size_t crossing_count(std::span<const Link> links) {
  std::vector<Link> sorted(links.begin(), links.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() < 2) return 0;

  // Compress target indices, then count, for each link, earlier links with a
  // strictly smaller source and strictly larger target (Fenwick tree).
  std::vector<std::size_t> targets;
  targets.reserve(sorted.size());
  for (const auto& l : sorted) targets.push_back(l.target);
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  std::vector<std::size_t> tree(targets.size() + 1, 0);
  auto rank = [&](std::size_t t) {
    return static_cast<std::size_t>(
               std::lower_bound(targets.begin(), targets.end(), t) -
               targets.begin()) +
           1;
  };
  auto prefix = [&](std::size_t i) {
    std::size_t sum = 0;
    for (; i > 0; i -= i & (~i + 1)) sum += tree[i];
    return sum;
  };

  std::size_t inserted = 0;
  std::size_t crossings = 0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j].source == sorted[i].source) ++j;
    for (std::size_t k = i; k < j; ++k) {
      crossings += inserted - prefix(rank(sorted[k].target));
    }
    for (std::size_t k = i; k < j; ++k) {
      for (std::size_t x = rank(sorted[k].target); x < tree.size();
           x += x & (~x + 1)) {
        ++tree[x];
      }
      ++inserted;
    }
    i = j;
  }
  return crossings;
}

std::size_t crossing_count(const LinkSet& links) {
  const std::vector<Link> v(links.begin(), links.end());
  return crossing_count(std::span<const Link>(v));
}

AtomSet to_atoms(const Alignment& a) {
  AtomSet atoms;
  for (const auto& l : a.links) atoms.insert(Atom::link(l.source, l.target));
  for (auto s : a.nt_source) atoms.insert(Atom::nt_source(s));
  for (auto t : a.nt_target) atoms.insert(Atom::nt_target(t));
  return atoms;
}

Alignment from_atoms(std::string verse_id, std::string annotator_id,
                     Extent extent, const AtomSet& atoms) {
  Alignment a;
  a.verse_id = std::move(verse_id);
  a.annotator_id = std::move(annotator_id);
  a.extent = extent;
  for (const auto& atom : atoms) {
    if (atom.is_link()) {
      a.links.insert({*atom.source, *atom.target});
    } else if (atom.source) {
      a.nt_source.insert(*atom.source);
    } else if (atom.target) {
      a.nt_target.insert(*atom.target);
    } else {
      throw ValidationError("atom with neither source nor target index");
    }
  }
  check_bounds(a);
  return a;
}

}  // namespace blinker
