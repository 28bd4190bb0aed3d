#include "blinker/service.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <mutex>
#include <set>
#include <sstream>

#include "blinker/alignment_io.hpp"
#include "blinker/errors.hpp"
#include "blinker/json_io.hpp"

namespace blinker {

namespace {

constexpr char kSep = '\x1f';

std::string verse_key(const std::string& id) { return "verse" + (kSep + id); }

std::string campaign_key(const std::string& id) {
  return "campaign" + (kSep + id);
}

std::string history_prefix(const std::string& verse,
                           const std::string& annotator) {
  return "aln" + (kSep + verse) + kSep + annotator + kSep;
}

std::string revision_key(const std::string& verse, const std::string& annotator,
                         std::uint64_t revision) {
  char digits[21];
  std::snprintf(digits, sizeof digits, "%020llu",
                static_cast<unsigned long long>(revision));
  return history_prefix(verse, annotator) + digits;
}

std::string now_utc() {
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void check_id(const std::string& id, const char* what) {
  if (id.empty()) throw ValidationError(std::string("empty ") + what);
  for (char c : id) {
    if (static_cast<unsigned char>(c) < 0x20) {
      throw ValidationError(std::string(what) + " '" + id +
                            "' contains a control character");
    }
  }
}

}  // namespace

AnnotationService::AnnotationService(KvStore store, ElisionTable table,
                                     Lexicons lexicons)
    : store_(std::move(store)),
      table_(std::move(table)),
      lexicons_(std::move(lexicons)) {
  lexicons_.validate();
  load_corpus();
}

void AnnotationService::load_corpus() {
  std::vector<std::pair<std::uint64_t, VersePair>> rows;
  for (const auto& [key, value] : store_.scan("verse" + std::string(1, kSep))) {
    const Json j = Json::parse(value);
    rows.emplace_back(
        j.at("seq").get<std::uint64_t>(),
        make_verse_pair(j.at("id"), j.at("source_lang"), j.at("target_lang"),
                        j.at("source_raw"), j.at("target_raw"), table_));
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  corpus_.clear();
  by_id_.clear();
  for (auto& [seq, vp] : rows) {
    by_id_[vp.id] = corpus_.size();
    corpus_.push_back(std::move(vp));
  }
}

void AnnotationService::ingest(const std::vector<VersePair>& verses) {
  std::unique_lock lock(mutex_);
  std::set<std::string> batch;
  for (const auto& vp : verses) {
    check_id(vp.id, "verse id");
    if (by_id_.count(vp.id) || !batch.insert(vp.id).second) {
      throw ValidationError("duplicate verse id '" + vp.id + "'");
    }
  }
  store_.transaction([&] {
    std::uint64_t seq = corpus_.size();
    for (const auto& vp : verses) {
      const Json j = {{"seq", seq++},
                      {"id", vp.id},
                      {"source_lang", vp.source_lang},
                      {"target_lang", vp.target_lang},
                      {"source_raw", vp.source_raw},
                      {"target_raw", vp.target_raw}};
      store_.put(verse_key(vp.id), j.dump());
    }
  });
  for (const auto& vp : verses) {
    by_id_[vp.id] = corpus_.size();
    corpus_.push_back(make_verse_pair(vp.id, vp.source_lang, vp.target_lang,
                                      vp.source_raw, vp.target_raw, table_));
  }
}

std::vector<VersePair> AnnotationService::corpus() const {
  std::shared_lock lock(mutex_);
  return corpus_;
}

VersePair AnnotationService::verse(const std::string& id) const {
  std::shared_lock lock(mutex_);
  return verse_locked(id);
}

VersePair AnnotationService::verse_locked(const std::string& id) const {
  const auto it = by_id_.find(id);
  if (it == by_id_.end()) throw NotFoundError("no verse '" + id + "'");
  return corpus_[it->second];
}

Campaign AnnotationService::create_campaign(
    const std::string& id, std::size_t set_size,
    std::vector<std::vector<std::string>> groups, std::uint64_t seed) {
  check_id(id, "campaign id");
  std::unique_lock lock(mutex_);
  if (store_.get(campaign_key(id))) {
    throw ConflictError("campaign '" + id + "' already exists");
  }
  Campaign c = make_campaign(id, corpus_, set_size, std::move(groups), seed);
  store_.put(campaign_key(id), to_json(c).dump());
  return c;
}

Campaign AnnotationService::campaign(const std::string& id) const {
  std::shared_lock lock(mutex_);
  return campaign_locked(id);
}

Campaign AnnotationService::campaign_locked(const std::string& id) const {
  const auto value = store_.get(campaign_key(id));
  if (!value) throw NotFoundError("no campaign '" + id + "'");
  return campaign_from_json(Json::parse(*value));
}

std::vector<std::string> AnnotationService::campaign_ids() const {
  std::shared_lock lock(mutex_);
  std::vector<std::string> ids;
  const std::string prefix = campaign_key("");
  for (const auto& [key, value] : store_.scan(prefix)) {
    ids.push_back(key.substr(prefix.size()));
  }
  return ids;
}

std::optional<VersePair> AnnotationService::next_task(
    const std::string& campaign_id, const std::string& annotator) const {
  std::shared_lock lock(mutex_);
  const Campaign c = campaign_locked(campaign_id);
  if (!c.group_of(annotator)) {
    throw AuthorizationError("annotator '" + annotator +
                             "' is not part of campaign '" + campaign_id +
                             "'");
  }
  const auto next = c.next_pending(annotator);
  if (!next) return std::nullopt;
  return verse_locked(*next);
}

SubmitResult AnnotationService::submit(const std::string& campaign_id,
                                       const std::string& annotator,
                                       const std::string& verse_id,
                                       const AtomSet& atoms,
                                       std::uint64_t base_revision,
                                       bool override_gate) {
  std::unique_lock lock(mutex_);
  Campaign c = campaign_locked(campaign_id);
  if (!c.assigned(annotator, verse_id)) {
    throw AuthorizationError("verse '" + verse_id +
                             "' is not assigned to annotator '" + annotator +
                             "' in campaign '" + campaign_id + "'");
  }
  const VersePair vp = verse_locked(verse_id);
  Alignment a = from_atoms(verse_id, annotator, Extent::of(vp), atoms);

  const auto past = history_locked(verse_id, annotator);
  const std::uint64_t latest = past.empty() ? 0 : past.back().alignment.revision;
  if (base_revision != latest) {
    throw ConflictError("stale revision: submitted against revision " +
                        std::to_string(base_revision) + ", latest is " +
                        std::to_string(latest));
  }

  SubmitResult result;
  result.findings = blinker::lint(vp, a, lexicons_);
  if (has_blocking_findings(result.findings) && !override_gate) {
    throw LintGateError(result.findings);
  }
  result.revision = latest + 1;
  a.revision = result.revision;

  const Json record = {{"verse_id", verse_id},
                       {"annotator_id", annotator},
                       {"campaign", campaign_id},
                       {"revision", result.revision},
                       {"atoms", format_atoms(atoms)},
                       {"submitted_at", now_utc()},
                       {"override", override_gate},
                       {"findings", to_json(result.findings)}};
  c.status[{annotator, verse_id}] = TaskStatus::kSubmitted;
  store_.transaction([&] {
    store_.put(revision_key(verse_id, annotator, result.revision),
               record.dump());
    store_.put(campaign_key(campaign_id), to_json(c).dump());
  });
  return result;
}

std::vector<LintFinding> AnnotationService::lint(const std::string& verse_id,
                                                 const AtomSet& atoms) const {
  std::shared_lock lock(mutex_);
  const VersePair vp = verse_locked(verse_id);
  return blinker::lint(vp, from_atoms(verse_id, "draft", Extent::of(vp), atoms),
                       lexicons_);
}

std::uint64_t AnnotationService::latest_revision(
    const std::string& verse_id, const std::string& annotator) const {
  std::shared_lock lock(mutex_);
  const auto past = history_locked(verse_id, annotator);
  return past.empty() ? 0 : past.back().alignment.revision;
}

std::vector<StoredAlignment> AnnotationService::history(
    const std::string& verse_id, const std::string& annotator) const {
  std::shared_lock lock(mutex_);
  return history_locked(verse_id, annotator);
}

std::vector<StoredAlignment> AnnotationService::history_locked(
    const std::string& verse_id, const std::string& annotator) const {
  std::vector<StoredAlignment> out;
  const auto it = by_id_.find(verse_id);
  if (it == by_id_.end()) return out;
  const Extent extent = Extent::of(corpus_[it->second]);
  for (const auto& [key, value] :
       store_.scan(history_prefix(verse_id, annotator))) {
    const Json j = Json::parse(value);
    StoredAlignment s;
    s.alignment = from_atoms(verse_id, annotator, extent,
                             parse_atoms(j.at("atoms").get<std::string>()));
    s.alignment.revision = j.at("revision").get<std::uint64_t>();
    s.campaign_id = j.at("campaign").get<std::string>();
    s.submitted_at = j.at("submitted_at").get<std::string>();
    s.override_used = j.at("override").get<bool>();
    for (const auto& f : j.at("findings")) {
      s.findings.push_back(finding_from_json(f));
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Alignment> AnnotationService::current_alignments(
    const std::string& verse_id) const {
  std::shared_lock lock(mutex_);
  return current_locked(verse_id);
}

std::vector<Alignment> AnnotationService::current_locked(
    const std::string& verse_id) const {
  std::set<std::string> annotators;
  const std::string prefix = "aln" + (kSep + verse_id) + kSep;
  for (const auto& [key, value] : store_.scan(prefix)) {
    const auto rest = key.substr(prefix.size());
    annotators.insert(rest.substr(0, rest.find(kSep)));
  }
  std::vector<Alignment> out;
  for (const auto& who : annotators) {
    auto past = history_locked(verse_id, who);
    if (!past.empty()) out.push_back(std::move(past.back().alignment));
  }
  return out;
}

AgreementReport AnnotationService::agreement(const std::string& verse_id) const {
  std::shared_lock lock(mutex_);
  const VersePair vp = verse_locked(verse_id);
  auto current = current_locked(verse_id);
  if (current.empty()) {
    throw NotFoundError("no submitted alignments for verse '" + verse_id +
                        "'");
  }
  return variation_report(AnnotationSet(std::move(current)), vp, lexicons_);
}

VoteResult AnnotationService::vote(const std::string& verse_id,
                                   double threshold) const {
  std::shared_lock lock(mutex_);
  verse_locked(verse_id);
  auto current = current_locked(verse_id);
  if (current.empty()) {
    throw NotFoundError("no submitted alignments for verse '" + verse_id +
                        "'");
  }
  return majority_vote(AnnotationSet(std::move(current)), threshold);
}

std::string AnnotationService::export_alignments(
    const std::string& campaign_id,
    const std::optional<std::string>& verse_filter) const {
  std::shared_lock lock(mutex_);
  const Campaign c = campaign_locked(campaign_id);
  std::vector<AlignmentRecord> records;
  for (const auto& [task, status] : c.status) {
    const auto& [annotator, verse_id] = task;
    if (status != TaskStatus::kSubmitted) continue;
    if (verse_filter && *verse_filter != verse_id) continue;
    const auto past = history_locked(verse_id, annotator);
    if (!past.empty()) records.push_back(to_record(past.back().alignment));
  }
  std::ostringstream out;
  write_alignment_file(out, std::move(records));
  return out.str();
}

}  // namespace blinker
