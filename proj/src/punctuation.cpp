#include "blinker/punctuation.hpp"

#include <algorithm>
#include <limits>

#include "blinker/errors.hpp"

namespace blinker {

std::string punctuation_class(std::string_view surface) {
  static const SurfaceSet kStops = {",", ";", ":", ".", "!", "?"};
  static const SurfaceSet kQuotes = {"\"", "«", "»", "“", "”", "‘", "`"};
  static const SurfaceSet kOpen = {"(", "[", "{"};
  static const SurfaceSet kClose = {")", "]", "}"};
  static const SurfaceSet kDashes = {"-", "–", "—"};
  if (kStops.count(surface)) return "stop";
  if (kQuotes.count(surface)) return "quote";
  if (kOpen.count(surface)) return "open";
  if (kClose.count(surface)) return "close";
  if (kDashes.count(surface)) return "dash";
  return "mark:" + std::string(surface);
}

PunctuationLayer split_punctuation_layer(const VersePair& vp,
                                         const Alignment& a,
                                         const SurfaceSet& punctuation) {
  auto is_punct = [&](Side side, std::size_t i) {
    const auto& toks = vp.tokens(side);
    return i < toks.size() && punctuation.count(toks[i].surface) != 0;
  };

  PunctuationLayer out;
  for (std::size_t i = 0; i < vp.source_tokens.size(); ++i) {
    if (is_punct(Side::kSource, i) && !a.nt_source.count(i)) {
      out.sources.insert(i);
    }
  }
  for (std::size_t i = 0; i < vp.target_tokens.size(); ++i) {
    if (is_punct(Side::kTarget, i) && !a.nt_target.count(i)) {
      out.targets.insert(i);
    }
  }
  // Drop candidates linked to a non-candidate until stable.
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& l : a.links) {
      const bool s_in = out.sources.count(l.source) != 0;
      const bool t_in = out.targets.count(l.target) != 0;
      if (s_in != t_in) {
        out.sources.erase(l.source);
        out.targets.erase(l.target);
        changed = true;
      }
    }
  }
  for (const auto& l : a.links) {
    if (out.sources.count(l.source)) {
      out.layer.insert(l);
    } else {
      out.background.insert(l);
    }
  }
  return out;
}

namespace {

bool crosses(const Link& x, const Link& y) {
  return (x.source < y.source && x.target > y.target) ||
         (x.source > y.source && x.target < y.target);
}

class PairingSearch {
 public:
  PairingSearch(std::vector<std::size_t> sources,
                std::vector<std::size_t> targets,
                std::vector<std::vector<bool>> allowed,
                const LinkSet& background)
      : sources_(std::move(sources)),
        targets_(std::move(targets)),
        allowed_(std::move(allowed)) {
    background_cost_.assign(sources_.size(),
                            std::vector<std::size_t>(targets_.size(), 0));
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      for (std::size_t j = 0; j < targets_.size(); ++j) {
        const Link candidate{sources_[i], targets_[j]};
        for (const auto& b : background) {
          if (crosses(candidate, b)) ++background_cost_[i][j];
        }
      }
    }
  }

  LinkSet solve() {
    goal_ = max_matching();
    if (goal_ == 0) return {};
    used_.assign(targets_.size(), false);
    search(0, 0);
    return best_;
  }

 private:
  // Kuhn's augmenting paths; sizes are tiny.
  std::size_t max_matching() const {
    std::vector<std::size_t> match(targets_.size(), kNone);
    std::size_t size = 0;
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      std::vector<bool> seen(targets_.size(), false);
      if (augment(i, seen, match)) ++size;
    }
    return size;
  }

  bool augment(std::size_t i, std::vector<bool>& seen,
               std::vector<std::size_t>& match) const {
    for (std::size_t j = 0; j < targets_.size(); ++j) {
      if (!allowed_[i][j] || seen[j]) continue;
      seen[j] = true;
      if (match[j] == kNone || augment(match[j], seen, match)) {
        match[j] = i;
        return true;
      }
    }
    return false;
  }

  // Sources are decided in index order: pair with each target in ascending
  // order, then leave unpaired. The first optimum found in this order is the
  // lexicographically smallest one, so only strict improvements replace it.
  void search(std::size_t i, std::size_t cost) {
    if (chosen_.size() == goal_) {
      if (cost < best_cost_) {
        best_cost_ = cost;
        best_ = LinkSet(chosen_.begin(), chosen_.end());
      }
      return;
    }
    if (i == sources_.size() ||
        chosen_.size() + (sources_.size() - i) < goal_) {
      return;
    }
    for (std::size_t j = 0; j < targets_.size(); ++j) {
      if (!allowed_[i][j] || used_[j]) continue;
      const Link link{sources_[i], targets_[j]};
      std::size_t extra = background_cost_[i][j];
      for (const auto& c : chosen_) {
        if (crosses(link, c)) ++extra;
      }
      if (cost + extra >= best_cost_) continue;
      used_[j] = true;
      chosen_.push_back(link);
      search(i + 1, cost + extra);
      chosen_.pop_back();
      used_[j] = false;
    }
    search(i + 1, cost);
  }

  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::vector<std::size_t> sources_;
  std::vector<std::size_t> targets_;
  std::vector<std::vector<bool>> allowed_;
  std::vector<std::vector<std::size_t>> background_cost_;
  std::size_t goal_ = 0;
  std::vector<bool> used_;
  std::vector<Link> chosen_;
  LinkSet best_;
  std::size_t best_cost_ = kNone;
};

}  // namespace

LinkSet optimal_punct_links(const VersePair& vp, const Alignment& a,
                            const SurfaceSet& punctuation,
                            std::size_t max_per_side) {
  if (vp.id != a.verse_id) {
    throw ValidationError("alignment for '" + a.verse_id +
                          "' applied to verse '" + vp.id + "'");
  }
  const PunctuationLayer split = split_punctuation_layer(vp, a, punctuation);
  for (Side side : {Side::kSource, Side::kTarget}) {
    const auto n = (side == Side::kSource ? split.sources : split.targets).size();
    if (n > max_per_side) {
      throw ValidationError(
          std::to_string(n) + " unlinked punctuation marks on the " +
          std::string(to_string(side)) + " side exceed the search bound of " +
          std::to_string(max_per_side) + "; link them manually");
    }
  }

  std::vector<std::size_t> sources(split.sources.begin(), split.sources.end());
  std::vector<std::size_t> targets(split.targets.begin(), split.targets.end());
  std::vector<std::vector<bool>> allowed(
      sources.size(), std::vector<bool>(targets.size(), false));
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const auto cls = punctuation_class(vp.source_tokens[sources[i]].surface);
    for (std::size_t j = 0; j < targets.size(); ++j) {
      allowed[i][j] =
          cls == punctuation_class(vp.target_tokens[targets[j]].surface);
    }
  }
  return PairingSearch(std::move(sources), std::move(targets),
                       std::move(allowed), split.background)
      .solve();
}

}  // namespace blinker
