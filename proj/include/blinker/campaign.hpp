#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blinker/bitext.hpp"

namespace blinker {

enum class TaskStatus { kPending, kSubmitted };

std::string_view to_string(TaskStatus status);

// Annotator groups, each assigned its own sampled set of verse pairs.
struct Campaign {
  std::string id;
  std::size_t set_size = 0;
  std::uint64_t seed = 0;
  std::vector<std::vector<std::string>> verse_sets;  // one per group
  std::vector<std::vector<std::string>> groups;      // annotator ids
  // (annotator, verse_id) -> status, one entry per assigned task.
  std::map<std::pair<std::string, std::string>, TaskStatus> status;

  std::size_t count(TaskStatus s) const;
  // Index of the annotator's group, if any.
  std::optional<std::size_t> group_of(const std::string& annotator) const;
  bool assigned(const std::string& annotator,
                const std::string& verse_id) const;
  // First pending verse of the annotator's set, in set order.
  std::optional<std::string> next_pending(const std::string& annotator) const;

  friend bool operator==(const Campaign&, const Campaign&) = default;
};

// Samples one verse set per group and marks every (annotator, verse) task
// pending. Throws ValidationError on no groups, an empty group, an annotator
// in two groups, or a corpus too small for the sets.
Campaign make_campaign(std::string id, const std::vector<VersePair>& corpus,
                       std::size_t set_size,
                       std::vector<std::vector<std::string>> groups,
                       std::uint64_t seed);

}  // namespace blinker
