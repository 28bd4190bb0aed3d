#pragma once

#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "blinker/agreement.hpp"
#include "blinker/alignment.hpp"
#include "blinker/bitext.hpp"
#include "blinker/campaign.hpp"
#include "blinker/errors.hpp"
#include "blinker/kv_store.hpp"
#include "blinker/lexicons.hpp"
#include "blinker/lint.hpp"

namespace blinker {

// Submission refused because of blocking lint findings and no override.
class LintGateError : public ValidationError {
 public:
  explicit LintGateError(std::vector<LintFinding> findings)
      : ValidationError("submission has blocking lint findings; resubmit "
                        "with override to store it anyway"),
        findings_(std::move(findings)) {}
  const std::vector<LintFinding>& findings() const { return findings_; }

 private:
  std::vector<LintFinding> findings_;
};

struct StoredAlignment {
  Alignment alignment;  // revision is the stored revision
  std::string campaign_id;
  std::string submitted_at;  // ISO-8601 UTC
  bool override_used = false;
  std::vector<LintFinding> findings;
};

struct SubmitResult {
  std::uint64_t revision = 0;
  std::vector<LintFinding> findings;
};

// Corpus, campaigns and alignment history on top of a KvStore. Safe to call
// from several threads: writes take an exclusive lock, reads a shared one.
class AnnotationService {
 public:
  AnnotationService(KvStore store, ElisionTable table, Lexicons lexicons);

  // Adds verse pairs; a duplicate id (in the batch or already stored) is a
  // ValidationError and nothing is written.
  void ingest(const std::vector<VersePair>& verses);
  std::vector<VersePair> corpus() const;
  VersePair verse(const std::string& id) const;  // NotFoundError

  Campaign create_campaign(const std::string& id, std::size_t set_size,
                           std::vector<std::vector<std::string>> groups,
                           std::uint64_t seed);
  Campaign campaign(const std::string& id) const;  // NotFoundError
  std::vector<std::string> campaign_ids() const;

  // Next pending verse for the annotator, or nullopt when done.
  std::optional<VersePair> next_task(const std::string& campaign_id,
                                     const std::string& annotator) const;

  // Stores a new revision. `base_revision` must equal the latest stored
  // revision for (verse, annotator), 0 if none; otherwise ConflictError.
  // AuthorizationError if the verse is not assigned to the annotator.
  // LintGateError on blocking findings unless `override_gate`.
  SubmitResult submit(const std::string& campaign_id,
                      const std::string& annotator, const std::string& verse_id,
                      const AtomSet& atoms, std::uint64_t base_revision,
                      bool override_gate);

  std::vector<LintFinding> lint(const std::string& verse_id,
                                const AtomSet& atoms) const;

  std::uint64_t latest_revision(const std::string& verse_id,
                                const std::string& annotator) const;
  std::vector<StoredAlignment> history(const std::string& verse_id,
                                       const std::string& annotator) const;
  // Latest alignment of every annotator of the verse.
  std::vector<Alignment> current_alignments(const std::string& verse_id) const;

  AgreementReport agreement(const std::string& verse_id) const;
  VoteResult vote(const std::string& verse_id, double threshold) const;

  // Alignment file with the latest revision of every submitted task of the
  // campaign, optionally restricted to one verse.
  std::string export_alignments(
      const std::string& campaign_id,
      const std::optional<std::string>& verse_filter = std::nullopt) const;

  const Lexicons& lexicons() const { return lexicons_; }

 private:
  void load_corpus();
  VersePair verse_locked(const std::string& id) const;
  Campaign campaign_locked(const std::string& id) const;
  std::vector<StoredAlignment> history_locked(
      const std::string& verse_id, const std::string& annotator) const;
  std::vector<Alignment> current_locked(const std::string& verse_id) const;

  mutable std::shared_mutex mutex_;
  KvStore store_;
  ElisionTable table_;
  Lexicons lexicons_;
  std::vector<VersePair> corpus_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

}  // namespace blinker
