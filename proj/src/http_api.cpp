#include "blinker/http_api.hpp"

#include <httplib.h>

#include "blinker/alignment_io.hpp"
#include "blinker/errors.hpp"
#include "blinker/json_io.hpp"
#include "blinker/service.hpp"

namespace blinker {

namespace {

void send_json(httplib::Response& res, const Json& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

// Atoms arrive either in file syntax ("0-1 2-∅") or as a list of atoms.
AtomSet atoms_from(const Json& j) {
  if (j.is_string()) return parse_atoms(j.get<std::string>());
  if (j.is_array()) {
    AtomSet atoms;
    for (const auto& a : j) atoms.insert(parse_atom(a.get<std::string>()));
    return atoms;
  }
  throw ValidationError("'atoms' must be a string or an array of strings");
}

template <typename Handler>
httplib::Server::Handler guarded(Handler handler) {
  return [handler](const httplib::Request& req, httplib::Response& res) {
    try {
      handler(req, res);
    } catch (const LintGateError& e) {
      send_json(res, {{"error", e.what()}, {"findings", to_json(e.findings())}},
                422);
    } catch (const NotFoundError& e) {
      send_json(res, {{"error", e.what()}}, 404);
    } catch (const AuthorizationError& e) {
      send_json(res, {{"error", e.what()}}, 403);
    } catch (const ConflictError& e) {
      send_json(res, {{"error", e.what()}}, 409);
    } catch (const Error& e) {
      send_json(res, {{"error", e.what()}}, 400);
    } catch (const Json::exception& e) {
      send_json(res, {{"error", std::string("bad request body: ") + e.what()}},
                400);
    }
  };
}

Json parse_body(const httplib::Request& req) {
  return Json::parse(req.body.empty() ? std::string("{}") : req.body);
}

}  // namespace

void install_routes(httplib::Server& server, AnnotationService& service) {
  server.Get(R"(/campaigns/([^/]+)/next)",
             guarded([&](const httplib::Request& req, httplib::Response& res) {
               const std::string annotator = req.get_param_value("annotator");
               if (annotator.empty()) {
                 throw ValidationError("missing 'annotator' parameter");
               }
               const auto vp = service.next_task(req.matches[1], annotator);
               if (!vp) {
                 res.status = 204;
                 return;
               }
               send_json(res,
                         {{"verse", to_json(*vp)},
                          {"base_revision",
                           service.latest_revision(vp->id, annotator)}});
             }));

  server.Get(R"(/campaigns/([^/]+))",
             guarded([&](const httplib::Request& req, httplib::Response& res) {
               send_json(res, to_json(service.campaign(req.matches[1])));
             }));

  server.Post("/campaigns", guarded([&](const httplib::Request& req,
                                        httplib::Response& res) {
                const Json body = parse_body(req);
                const Campaign c = service.create_campaign(
                    body.at("id").get<std::string>(),
                    body.at("set_size").get<std::size_t>(),
                    body.at("groups")
                        .get<std::vector<std::vector<std::string>>>(),
                    body.value("seed", std::uint64_t{0}));
                send_json(res, to_json(c), 201);
              }));

  server.Put(R"(/alignments/([^/]+)/([^/]+))",
             guarded([&](const httplib::Request& req, httplib::Response& res) {
               const Json body = parse_body(req);
               const SubmitResult result = service.submit(
                   body.at("campaign").get<std::string>(), req.matches[2],
                   req.matches[1], atoms_from(body.at("atoms")),
                   body.value("base_revision", std::uint64_t{0}),
                   body.value("override", false));
               send_json(res, {{"revision", result.revision},
                               {"findings", to_json(result.findings)}});
             }));

  server.Post("/lint", guarded([&](const httplib::Request& req,
                                   httplib::Response& res) {
                const Json body = parse_body(req);
                send_json(res, {{"findings",
                                 to_json(service.lint(
                                     body.at("verse_id").get<std::string>(),
                                     atoms_from(body.at("atoms"))))}});
              }));

  server.Get(R"(/agreement/([^/]+))",
             guarded([&](const httplib::Request& req, httplib::Response& res) {
               send_json(res, to_json(service.agreement(req.matches[1])));
             }));

  server.Post(R"(/vote/([^/]+))",
              guarded([&](const httplib::Request& req, httplib::Response& res) {
                double threshold = 0.5;
                if (req.has_param("threshold")) {
                  try {
                    threshold = std::stod(req.get_param_value("threshold"));
                  } catch (const std::exception&) {
                    throw ValidationError("bad threshold '" +
                                          req.get_param_value("threshold") +
                                          "'");
                  }
                }
                send_json(res,
                          to_json(service.vote(req.matches[1], threshold)));
              }));

  server.Get(R"(/export/([^/]+))",
             guarded([&](const httplib::Request& req, httplib::Response& res) {
               std::optional<std::string> verse;
               if (req.has_param("verse")) verse = req.get_param_value("verse");
               res.set_content(service.export_alignments(req.matches[1], verse),
                               "text/plain; charset=utf-8");
             }));
}

}  // namespace blinker
