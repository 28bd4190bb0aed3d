#include "blinker/campaign.hpp"

#include <algorithm>
#include <set>

#include "blinker/errors.hpp"

namespace blinker {

std::string_view to_string(TaskStatus status) {
  return status == TaskStatus::kPending ? "pending" : "submitted";
}

std::size_t Campaign::count(TaskStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(status.begin(), status.end(),
                    [&](const auto& entry) { return entry.second == s; }));
}

std::optional<std::size_t> Campaign::group_of(
    const std::string& annotator) const {
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (std::find(groups[g].begin(), groups[g].end(), annotator) !=
        groups[g].end()) {
      return g;
    }
  }
  return std::nullopt;
}

bool Campaign::assigned(const std::string& annotator,
                        const std::string& verse_id) const {
  return status.count({annotator, verse_id}) != 0;
}

std::optional<std::string> Campaign::next_pending(
    const std::string& annotator) const {
  const auto group = group_of(annotator);
  if (!group) return std::nullopt;
  for (const auto& verse : verse_sets[*group]) {
    const auto it = status.find({annotator, verse});
    if (it != status.end() && it->second == TaskStatus::kPending) return verse;
  }
  return std::nullopt;
}

Campaign make_campaign(std::string id, const std::vector<VersePair>& corpus,
                       std::size_t set_size,
                       std::vector<std::vector<std::string>> groups,
                       std::uint64_t seed) {
  if (groups.empty()) {
    throw ValidationError("campaign needs at least one annotator group");
  }
  std::set<std::string> seen;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].empty()) {
      throw ValidationError("annotator group " + std::to_string(g) +
                            " is empty");
    }
    for (const auto& who : groups[g]) {
      if (who.empty()) throw ValidationError("empty annotator id");
      if (!seen.insert(who).second) {
        throw ValidationError("annotator '" + who +
                              "' belongs to more than one group");
      }
    }
  }

  Campaign c;
  c.id = std::move(id);
  c.set_size = set_size;
  c.seed = seed;
  c.verse_sets = sample_verse_sets(corpus, set_size, groups.size(), seed);
  c.groups = std::move(groups);
  for (std::size_t g = 0; g < c.groups.size(); ++g) {
    for (const auto& who : c.groups[g]) {
      for (const auto& verse : c.verse_sets[g]) {
        c.status[{who, verse}] = TaskStatus::kPending;
      }
    }
  }
  return c;
}

}  // namespace blinker
