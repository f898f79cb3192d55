#include "http_server.hpp"

#include <httplib.h>

namespace wordle {

namespace {

bool local_origin(const std::string& origin) {
  for (const char* prefix : {"http://localhost", "http://127.0.0.1", "https://localhost", "https://127.0.0.1"}) {
    const std::string p(prefix);
    if (origin.rfind(p, 0) == 0 && (origin.size() == p.size() || origin[p.size()] == ':')) return true;
  }
  return false;
}

void reply(httplib::Response& res, int status, const nlohmann::json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

}  // namespace

void install_routes(httplib::Server& server, const Service& service) {
  server.set_post_routing_handler([](const httplib::Request& req, httplib::Response& res) {
    const std::string origin = req.get_header_value("Origin");
    if (local_origin(origin)) {
      res.set_header("Access-Control-Allow-Origin", origin);
      res.set_header("Vary", "Origin");
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
    }
  });
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
    reply(res, 200, {{"status", "ok"}});
  });
  server.Get("/api/meta", [&service](const httplib::Request&, httplib::Response& res) {
    reply(res, 200, service.meta());
  });
  server.Post("/api/suggest", [&service](const httplib::Request& req, httplib::Response& res) {
    const auto [status, body] = service.handle_suggest(req.body);
    reply(res, status, body);
  });
  server.Post("/api/partition", [&service](const httplib::Request& req, httplib::Response& res) {
    const auto [status, body] = service.handle_partition(req.body);
    reply(res, status, body);
  });
}

bool serve(const Service& service, const std::string& host, int port) {
  httplib::Server server;
  install_routes(server, service);
  return server.listen(host, port);
}

}  // namespace wordle
