#pragma once

#include <string>

#include "wordle/service.hpp"

namespace httplib {
class Server;
}

namespace wordle {

/// GET /api/health, GET /api/meta, POST /api/suggest, POST /api/partition.
/// Browsers on localhost / 127.0.0.1 origins get CORS headers.
void install_routes(httplib::Server& server, const Service& service);

/// Blocks until the server stops. Returns false if binding failed.
bool serve(const Service& service, const std::string& host, int port);

}  // namespace wordle
