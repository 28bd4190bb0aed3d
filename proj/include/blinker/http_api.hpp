#pragma once

namespace httplib {
class Server;
}

namespace blinker {

class AnnotationService;

// JSON API used by the annotation client:
//   GET  /campaigns/{id}/next?annotator=    next pending verse (204 when done)
//   PUT  /alignments/{verse}/{annotator}    submit {campaign, atoms,
//                                           base_revision, override}
//   POST /lint                              {verse_id, atoms} -> findings
//   GET  /agreement/{verse}                 agreement report
//   POST /vote/{verse}?threshold=           gold alignment
//   GET  /export/{campaign}?verse=          alignment file (text/plain)
//   POST /campaigns, GET /campaigns/{id}    campaign management
// Errors are {"error": message} with 400/403/404/409/422 status codes.
void install_routes(httplib::Server& server, AnnotationService& service);

}  // namespace blinker
