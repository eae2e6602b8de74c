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

// JSON-over-HTTP front end for SessionStore.

#ifndef VGAME_GAME_SERVER_H_
#define VGAME_GAME_SERVER_H_

#include <memory>
#include <string>

#include "vgame/errors.h"
#include "vgame/game_session.h"

namespace vgame {

// Routes:
//   POST /sessions                  {n, board: {w, h}, autoplay_barney?}
//   GET  /sessions/{id}
//   POST /sessions/{id}/points      {player, x, y}
//   POST /sessions/{id}/preview     {player, x, y}   (dry run)
//   POST /sessions/{id}/autoplay
//   GET  /sessions/{id}/advice
//   GET  /sessions/{id}/events
class GameServer {
 public:
  explicit GameServer(SessionStore& store);
  ~GameServer();
  GameServer(const GameServer&) = delete;
  GameServer& operator=(const GameServer&) = delete;

  // Blocks until Stop(). Returns false if the port cannot be bound.
  bool Listen(const std::string& host, int port);
  // Binds an ephemeral port and returns it, or -1.
  int BindToAnyPort(const std::string& host);
  // Serves on the port obtained from BindToAnyPort; blocks until Stop().
  bool ListenAfterBind();
  void WaitUntilReady() const;
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// HTTP status used for each error code.
int HttpStatusFor(ErrorCode code);

}  // namespace vgame

#endif  // VGAME_GAME_SERVER_H_
