// Copyright 2026 The Voronoi Game Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vgame/game_server.h"

#include <functional>

#include "httplib.h"
#include "vgame/errors.h"

namespace vgame {

int HttpStatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFound:
      return 404;
    case ErrorCode::kOutOfTurn:
    case ErrorCode::kWrongPhase:
      return 409;
    case ErrorCode::kCoincidentSites:
    case ErrorCode::kOutsideBoard:
      return 422;
    default:
      return 400;
  }
}

struct GameServer::Impl {
  explicit Impl(SessionStore& s) : store(s) {}

  using Handler = std::function<Json(const httplib::Request&)>;

  // Wraps a handler with JSON encoding and error mapping.
  httplib::Server::Handler Wrap(Handler handler, int ok_status = 200) {
    return [handler = std::move(handler), ok_status](
               const httplib::Request& req, httplib::Response& res) {
      try {
        const Json body = handler(req);
        res.status = ok_status;
        res.set_content(body.dump(), "application/json");
      } catch (const GameError& e) {
        res.status = HttpStatusFor(e.code());
        res.set_content(Json{{"error", std::string(ErrorCodeName(e.code()))},
                             {"message", e.what()}}
                            .dump(),
                        "application/json");
      } catch (const Json::exception& e) {
        res.status = 400;
        res.set_content(
            Json{{"error", "ParseError"}, {"message", e.what()}}.dump(),
            "application/json");
      }
    };
  }

  static Json Body(const httplib::Request& req) {
    if (req.body.empty()) return Json::object();
    try {
      return Json::parse(req.body);
    } catch (const Json::exception& e) {
      throw GameError(ErrorCode::kParseError, e.what());
    }
  }

  static std::pair<Player, Point> Placement(const Json& body) {
    if (!body.contains("player") || !body.at("player").is_string()) {
      throw GameError(ErrorCode::kParseError, "placement needs a player");
    }
    return {PlayerFromName(body.at("player").get<std::string>()),
            PointFromJson(body)};
  }

  void Install() {
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
    server.Options(R"(/sessions.*)",
                   [](const httplib::Request&, httplib::Response& res) {
                     res.set_header("Access-Control-Allow-Methods",
                                    "GET, POST, OPTIONS");
                     res.set_header("Access-Control-Allow-Headers",
                                    "Content-Type");
                     res.status = 204;
                   });
    server.Post("/sessions", Wrap(
                                 [this](const httplib::Request& req) {
                                   const Json body = Body(req);
                                   if (!body.contains("n") ||
                                       !body.at("n").is_number_integer()) {
                                     throw GameError(ErrorCode::kInvalidConfig,
                                                     "n must be an integer");
                                   }
                                   GameConfig config{
                                       body.at("n").get<int>(),
                                       BoardFromJson(body.value(
                                           "board", Json{{"w", 1.0},
                                                         {"h", 1.0}}))};
                                   return ToJson(store.Create(
                                       config,
                                       body.value("autoplay_barney", false)));
                                 },
                                 201));
    server.Get(R"(/sessions/([^/]+))",
               Wrap([this](const httplib::Request& req) {
                 return ToJson(store.Get(req.matches[1]));
               }));
    server.Post(R"(/sessions/([^/]+)/points)",
                Wrap([this](const httplib::Request& req) {
                  const auto [player, point] = Placement(Body(req));
                  return ToJson(store.Place(req.matches[1], player, point));
                }));
    server.Post(R"(/sessions/([^/]+)/preview)",
                Wrap([this](const httplib::Request& req) {
                  const auto [player, point] = Placement(Body(req));
                  const Preview p = store.DryRun(req.matches[1], player, point);
                  return Json{{"tally", ToJson(p.tally)}, {"gain", p.gain}};
                }));
    server.Post(R"(/sessions/([^/]+)/autoplay)",
                Wrap([this](const httplib::Request& req) {
                  return ToJson(store.Autoplay(req.matches[1]));
                }));
    server.Get(R"(/sessions/([^/]+)/advice)",
               Wrap([this](const httplib::Request& req) {
                 return ToJson(store.Advice(req.matches[1]));
               }));
    server.Get(R"(/sessions/([^/]+)/events)",
               Wrap([this](const httplib::Request& req) {
                 Json events = Json::array();
                 for (const GameEvent& e : store.Events(req.matches[1])) {
                   events.push_back(ToJson(e));
                 }
                 return events;
               }));
  }

  SessionStore& store;
  httplib::Server server;
};

GameServer::GameServer(SessionStore& store)
    : impl_(std::make_unique<Impl>(store)) {
  impl_->Install();
}

GameServer::~GameServer() { Stop(); }

bool GameServer::Listen(const std::string& host, int port) {
  return impl_->server.listen(host, port);
}

int GameServer::BindToAnyPort(const std::string& host) {
  return impl_->server.bind_to_any_port(host);
}

bool GameServer::ListenAfterBind() { return impl_->server.listen_after_bind(); }

void GameServer::WaitUntilReady() const { impl_->server.wait_until_ready(); }

void GameServer::Stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace vgame
