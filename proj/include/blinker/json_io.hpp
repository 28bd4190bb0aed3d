#pragma once

#include <json.hpp>

#include "blinker/agreement.hpp"
#include "blinker/bitext.hpp"
#include "blinker/campaign.hpp"
#include "blinker/lint.hpp"

namespace blinker {

using Json = nlohmann::json;

Json to_json(const Token& token);
Json to_json(const VersePair& vp);
Json to_json(const LintFinding& finding);
Json to_json(const std::vector<LintFinding>& findings);
Json to_json(const Scores& scores);
Json to_json(const AgreementReport& report);
Json to_json(const VoteResult& result);
Json to_json(const Campaign& campaign);

LintFinding finding_from_json(const Json& j);
Campaign campaign_from_json(const Json& j);

}  // namespace blinker
