#include "blinker/json_io.hpp"

#include "blinker/alignment_io.hpp"
#include "blinker/errors.hpp"

namespace blinker {

Json to_json(const Token& token) {
  return {{"index", token.index},
          {"surface", token.surface},
          {"side", to_string(token.side)},
          {"span", {token.span.begin, token.span.end}},
          {"kind", to_string(token.kind)}};
}

Json to_json(const VersePair& vp) {
  Json source = Json::array();
  Json target = Json::array();
  for (const auto& t : vp.source_tokens) source.push_back(to_json(t));
  for (const auto& t : vp.target_tokens) target.push_back(to_json(t));
  return {{"id", vp.id},
          {"source_lang", vp.source_lang},
          {"target_lang", vp.target_lang},
          {"source_raw", vp.source_raw},
          {"target_raw", vp.target_raw},
          {"source_tokens", source},
          {"target_tokens", target}};
}

Json to_json(const LintFinding& f) {
  Json tokens = Json::array();
  for (const auto& t : f.tokens) {
    tokens.push_back({{"side", to_string(t.side)}, {"index", t.index}});
  }
  Json links = Json::array();
  for (const auto& l : f.links) links.push_back({l.source, l.target});
  return {{"rule", rule_name(f.rule)},
          {"severity", to_string(f.severity)},
          {"tokens", tokens},
          {"links", links},
          {"message", f.message},
          {"guideline", f.guideline},
          {"guideline_text", guideline_text(f.rule)}};
}

Json to_json(const std::vector<LintFinding>& findings) {
  Json out = Json::array();
  for (const auto& f : findings) out.push_back(to_json(f));
  return out;
}

Json to_json(const Scores& s) {
  return {{"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}};
}

Json to_json(const AgreementReport& report) {
  Json pairwise = Json::array();
  for (const auto& [pair, scores] : report.pairwise) {
    Json entry = to_json(scores);
    entry["a"] = pair.first;
    entry["b"] = pair.second;
    pairwise.push_back(entry);
  }
  Json votes = Json::object();
  for (const auto& [atom, count] : report.vote_table) {
    votes[format_atom(atom)] = count;
  }
  Json variation = Json::array();
  for (const auto& v : report.variation) {
    variation.push_back({{"atom", format_atom(v.atom)},
                         {"holders", v.holders},
                         {"category", v.category}});
  }
  return {{"verse_id", report.verse_id},
          {"n_annotators", report.n_annotators},
          {"pairwise", pairwise},
          {"vote_table", votes},
          {"variation", variation}};
}

Json to_json(const VoteResult& result) {
  Json unresolved = Json::array();
  for (const auto& t : result.unresolved) {
    unresolved.push_back({{"side", to_string(t.side)}, {"index", t.index}});
  }
  return {{"verse_id", result.gold.verse_id},
          {"annotator_id", result.gold.annotator_id},
          {"atoms", format_atoms(to_atoms(result.gold))},
          {"unresolved", unresolved}};
}

Json to_json(const Campaign& c) {
  Json status = Json::array();
  for (const auto& [key, s] : c.status) {
    status.push_back(
        {{"annotator", key.first}, {"verse", key.second}, {"status", to_string(s)}});
  }
  return {{"id", c.id},
          {"set_size", c.set_size},
          {"seed", c.seed},
          {"verse_sets", c.verse_sets},
          {"groups", c.groups},
          {"status", status},
          {"pending", c.count(TaskStatus::kPending)},
          {"submitted", c.count(TaskStatus::kSubmitted)}};
}

LintFinding finding_from_json(const Json& j) {
  LintFinding f;
  f.rule = rule_from_name(j.at("rule").get<std::string>());
  const auto severity = j.at("severity").get<std::string>();
  if (severity == "error") {
    f.severity = Severity::kError;
  } else if (severity == "warning") {
    f.severity = Severity::kWarning;
  } else if (severity == "info") {
    f.severity = Severity::kInfo;
  } else {
    throw ValidationError("unknown severity '" + severity + "'");
  }
  for (const auto& t : j.at("tokens")) {
    f.tokens.push_back({side_from_string(t.at("side").get<std::string>()),
                        t.at("index").get<std::size_t>()});
  }
  for (const auto& l : j.at("links")) {
    f.links.insert({l.at(0).get<std::size_t>(), l.at(1).get<std::size_t>()});
  }
  f.message = j.at("message").get<std::string>();
  f.guideline = j.at("guideline").get<std::string>();
  return f;
}

Campaign campaign_from_json(const Json& j) {
  Campaign c;
  c.id = j.at("id").get<std::string>();
  c.set_size = j.at("set_size").get<std::size_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.verse_sets = j.at("verse_sets").get<std::vector<std::vector<std::string>>>();
  c.groups = j.at("groups").get<std::vector<std::vector<std::string>>>();
  for (const auto& s : j.at("status")) {
    c.status[{s.at("annotator").get<std::string>(),
              s.at("verse").get<std::string>()}] =
        s.at("status").get<std::string>() == "submitted"
            ? TaskStatus::kSubmitted
            : TaskStatus::kPending;
  }
  return c;
}

}  // namespace blinker
