// blinker: command line front end for ingestion, campaigns, linting,
// agreement reports, voting and the annotation server.

#include <CLI11.hpp>
#include <httplib.h>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "blinker/agreement.hpp"
#include "blinker/alignment_io.hpp"
#include "blinker/bitext.hpp"
#include "blinker/errors.hpp"
#include "blinker/http_api.hpp"
#include "blinker/json_io.hpp"
#include "blinker/kv_store.hpp"
#include "blinker/lint.hpp"
#include "blinker/service.hpp"

namespace {

using namespace blinker;

struct CommonOptions {
  std::string db;
  std::string corpus;
  std::string elisions;
  std::string lexicons;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

ElisionTable load_table(const CommonOptions& opts) {
  ElisionTable table = ElisionTable::defaults();
  if (!opts.elisions.empty()) {
    auto in = open_input(opts.elisions);
    table.load(in);
  }
  return table;
}

Lexicons load_lexicons(const CommonOptions& opts) {
  if (opts.lexicons.empty()) return Lexicons::defaults();
  auto in = open_input(opts.lexicons);
  return Lexicons::load(in);
}

AnnotationService open_service(const CommonOptions& opts) {
  if (opts.db.empty()) throw Error("--db is required");
  return AnnotationService(KvStore(opts.db), load_table(opts),
                           load_lexicons(opts));
}

// Verse pairs from --corpus (TSV) or, failing that, from --db.
std::map<std::string, VersePair> load_verses(const CommonOptions& opts) {
  std::vector<VersePair> verses;
  if (!opts.corpus.empty()) {
    auto in = open_input(opts.corpus);
    verses = load_bitext(in, load_table(opts));
  } else if (!opts.db.empty()) {
    verses = open_service(opts).corpus();
  } else {
    throw Error("need --corpus <tsv> or --db <store> for the verse tokens");
  }
  std::map<std::string, VersePair> by_id;
  for (auto& vp : verses) by_id.emplace(vp.id, std::move(vp));
  return by_id;
}

const VersePair& find_verse(const std::map<std::string, VersePair>& verses,
                            const std::string& id) {
  const auto it = verses.find(id);
  if (it == verses.end()) throw NotFoundError("no verse '" + id + "'");
  return it->second;
}

std::vector<AlignmentRecord> read_records(const std::string& path) {
  auto in = open_input(path);
  return read_alignment_file(in);
}

// Records grouped by verse, keeping first-seen verse order.
std::vector<std::pair<std::string, std::vector<AlignmentRecord>>> by_verse(
    std::vector<AlignmentRecord> records) {
  std::vector<std::pair<std::string, std::vector<AlignmentRecord>>> groups;
  std::map<std::string, std::size_t> slot;
  for (auto& r : records) {
    auto [it, fresh] = slot.emplace(r.verse_id, groups.size());
    if (fresh) groups.emplace_back(r.verse_id, std::vector<AlignmentRecord>{});
    groups[it->second].second.push_back(std::move(r));
  }
  return groups;
}

AnnotationSet annotation_set(const std::vector<AlignmentRecord>& records,
                             const VersePair& vp) {
  std::vector<Alignment> alignments;
  for (const auto& r : records) alignments.push_back(to_alignment(r, vp));
  return AnnotationSet(std::move(alignments));
}

std::vector<std::vector<std::string>> parse_groups(
    const std::vector<std::string>& specs) {
  std::vector<std::vector<std::string>> groups;
  for (const auto& spec : specs) {
    std::vector<std::string> group;
    std::stringstream ss(spec);
    for (std::string who; std::getline(ss, who, ',');) {
      if (!who.empty()) group.push_back(who);
    }
    groups.push_back(std::move(group));
  }
  return groups;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bitext word-alignment annotation tools"};
  app.require_subcommand(1);
  CommonOptions opts;
  app.add_option("--elisions", opts.elisions,
                 "Extra retokenization entries (lang<TAB>contraction<TAB>"
                 "replacements)");
  app.add_option("--lexicons", opts.lexicons,
                 "Lexicon config replacing the built-in lists");

  auto* ingest = app.add_subcommand("ingest", "Tokenize a verse-pair TSV");
  std::string tsv;
  ingest->add_option("tsv", tsv, "Ingestion TSV")->required();
  ingest->add_option("--db", opts.db,
                     "Store the corpus here instead of printing tokens");

  auto* campaign = app.add_subcommand("campaign", "Campaign management");
  campaign->require_subcommand(1);
  auto* campaign_new = campaign->add_subcommand("new", "Create a campaign");
  std::string campaign_id;
  std::size_t set_size = 10;
  std::vector<std::string> group_specs;
  std::uint64_t seed = 0;
  campaign_new->add_option("--db", opts.db, "Store")->required();
  campaign_new->add_option("--id", campaign_id, "Campaign id")->required();
  campaign_new->add_option("--set-size", set_size, "Verse pairs per group");
  campaign_new
      ->add_option("--group", group_specs,
                   "Comma-separated annotator ids; repeat once per group")
      ->required();
  campaign_new->add_option("--seed", seed, "Sampling seed");

  auto* lint_cmd = app.add_subcommand("lint", "Lint an alignment file");
  std::string alignment_file;
  lint_cmd->add_option("file", alignment_file, "Alignment file")->required();
  lint_cmd->add_option("--corpus", opts.corpus, "Ingestion TSV");
  lint_cmd->add_option("--db", opts.db, "Store holding the corpus");

  auto* compare_cmd =
      app.add_subcommand("compare", "Agreement report per verse");
  compare_cmd->add_option("file", alignment_file, "Alignment file")->required();
  compare_cmd->add_option("--corpus", opts.corpus, "Ingestion TSV");
  compare_cmd->add_option("--db", opts.db, "Store holding the corpus");

  auto* vote_cmd = app.add_subcommand("vote", "Majority-vote gold alignments");
  double threshold = 0.5;
  bool as_alignment_file = false;
  vote_cmd->add_option("file", alignment_file, "Alignment file")->required();
  vote_cmd->add_option("--threshold", threshold,
                       "Keep atoms held by more than this fraction");
  vote_cmd->add_option("--corpus", opts.corpus, "Ingestion TSV");
  vote_cmd->add_option("--db", opts.db, "Store holding the corpus");
  vote_cmd->add_flag("--alignment-file", as_alignment_file,
                     "Print gold alignments in alignment-file format");

  auto* export_cmd =
      app.add_subcommand("export", "Export a campaign's alignments");
  std::string verse_filter;
  export_cmd->add_option("--db", opts.db, "Store")->required();
  export_cmd->add_option("--campaign", campaign_id, "Campaign id")->required();
  export_cmd->add_option("--verse", verse_filter, "Only this verse");

  auto* serve = app.add_subcommand("serve", "Run the annotation HTTP API");
  int port = 8080;
  std::string host = "127.0.0.1";
  serve->add_option("--port", port, "Port");
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--db", opts.db, "Store")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (ingest->parsed()) {
      auto in = open_input(tsv);
      const auto verses = load_bitext(in, load_table(opts));
      if (opts.db.empty()) {
        for (const auto& vp : verses) std::cout << to_json(vp).dump() << '\n';
      } else {
        open_service(opts).ingest(verses);
        std::cerr << "ingested " << verses.size() << " verse pairs\n";
      }
    } else if (campaign_new->parsed()) {
      auto service = open_service(opts);
      const Campaign c = service.create_campaign(
          campaign_id, set_size, parse_groups(group_specs), seed);
      std::cout << to_json(c).dump() << '\n';
    } else if (lint_cmd->parsed()) {
      const auto verses = load_verses(opts);
      const Lexicons lex = load_lexicons(opts);
      bool errors = false;
      for (const auto& r : read_records(alignment_file)) {
        const VersePair& vp = find_verse(verses, r.verse_id);
        for (const auto& f : lint(vp, to_alignment(r, vp), lex)) {
          errors = errors || f.severity == Severity::kError;
          Json line = to_json(f);
          line["verse_id"] = r.verse_id;
          line["annotator_id"] = r.annotator_id;
          std::cout << line.dump() << '\n';
        }
      }
      return errors ? 1 : 0;
    } else if (compare_cmd->parsed()) {
      const auto verses = load_verses(opts);
      const Lexicons lex = load_lexicons(opts);
      for (const auto& [verse_id, records] :
           by_verse(read_records(alignment_file))) {
        const VersePair& vp = find_verse(verses, verse_id);
        std::cout << to_json(variation_report(annotation_set(records, vp), vp,
                                              lex))
                         .dump()
                  << '\n';
      }
    } else if (vote_cmd->parsed()) {
      const auto verses = load_verses(opts);
      std::vector<AlignmentRecord> gold;
      for (const auto& [verse_id, records] :
           by_verse(read_records(alignment_file))) {
        const VersePair& vp = find_verse(verses, verse_id);
        const VoteResult result =
            majority_vote(annotation_set(records, vp), threshold);
        if (as_alignment_file) {
          gold.push_back(to_record(result.gold));
        } else {
          std::cout << to_json(result).dump() << '\n';
        }
      }
      if (as_alignment_file) write_alignment_file(std::cout, std::move(gold));
    } else if (export_cmd->parsed()) {
      auto service = open_service(opts);
      std::cout << service.export_alignments(
          campaign_id, verse_filter.empty()
                           ? std::nullopt
                           : std::optional<std::string>(verse_filter));
    } else if (serve->parsed()) {
      auto service = open_service(opts);
      httplib::Server server;
      install_routes(server, service);
      std::cerr << "listening on " << host << ":" << port << '\n';
      if (!server.listen(host, port)) {
        throw Error("cannot listen on " + host + ":" + std::to_string(port));
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "blinker: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
