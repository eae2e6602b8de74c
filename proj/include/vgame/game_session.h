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

// Interactive one-round games: Wilma places all her points, then Barney
// places his, and the diagram is recomputed after every placement.

#ifndef VGAME_GAME_SESSION_H_
#define VGAME_GAME_SESSION_H_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "vgame/best_response.h"
#include "vgame/game_rules.h"
#include "vgame/serialization.h"
#include "vgame/voronoi.h"

namespace vgame {

enum class Phase { kWilmaPlacing, kBarneyPlacing, kFinished };
enum class Player { kWilma, kBarney };

std::string_view PhaseName(Phase phase);
std::string_view PlayerName(Player player);
// Accepts "wilma"/"white" and "barney"/"black", any case.
Player PlayerFromName(const std::string& name);

struct GameEvent {
  enum class Type { kCreate, kPlace };
  Type type = Type::kCreate;
  int64_t seq = 0;
  // kCreate
  int n = 0;
  std::optional<Board> board;
  bool autoplay_barney = false;
  // kPlace
  Player player = Player::kWilma;
  Point point;
};

Json ToJson(const GameEvent& event);
GameEvent GameEventFromJson(const Json& j);

struct GameSession {
  std::string id;
  GameConfig config;
  // The engine plays all of Barney's points once Wilma is done.
  bool autoplay_barney = false;
  Phase phase = Phase::kWilmaPlacing;
  std::vector<Point> white;
  std::vector<Point> black;
  AreaTally tally;
  std::vector<VoronoiCell> cells;
  std::optional<StealResult> advice;
  std::optional<Winner> winner;
  std::vector<GameEvent> events;
};

// Full state including cell polygons.
Json ToJson(const GameSession& session);

GameSession CreateSession(const std::string& id, const GameConfig& config,
                          bool autoplay_barney = false);

// Throws GameError with kOutOfTurn, kOutsideBoard or kCoincidentSites.
// Does not trigger autoplay.
void PlacePoint(GameSession& session, Player player, const Point& point);

// Best single black point against the current position. Throws
// GameError(kWrongPhase) unless Barney is to move.
StealResult ComputeAdvice(const GameSession& session,
                          const BestResponseOptions& options);

// Places all remaining Barney points from BarneyPlay. Throws
// GameError(kWrongPhase) unless Barney is to move.
void AutoplayBarney(GameSession& session, const BestResponseOptions& options);

struct Preview {
  AreaTally tally;
  // Area the placement would move to the placing player.
  double gain = 0.0;
};

// Dry run of PlacePoint; the session is unchanged.
Preview PreviewPlacement(const GameSession& session, Player player,
                         const Point& point);

// Rebuilds a session from its event log by re-applying every event.
GameSession ReplayEvents(const std::string& id,
                         const std::vector<GameEvent>& events);

struct ServiceOptions {
  BestResponseOptions advice;
  // Append-only JSON-lines log; empty disables persistence.
  std::filesystem::path event_log;
  uint64_t id_seed = 0;
};

// Thread-safe collection of sessions. Mutations of one session are
// serialised; reads return a consistent copy.
class SessionStore {
 public:
  explicit SessionStore(ServiceOptions options = {});

  GameSession Create(const GameConfig& config, bool autoplay_barney);
  GameSession Place(const std::string& id, Player player, const Point& point);
  GameSession Get(const std::string& id) const;
  StealResult Advice(const std::string& id);
  GameSession Autoplay(const std::string& id);
  Preview DryRun(const std::string& id, Player player, const Point& point) const;
  std::vector<GameEvent> Events(const std::string& id) const;

  // Restores every session found in the event log. Returns the number loaded.
  size_t LoadLog();

 private:
  struct Entry {
    mutable std::mutex mu;
    GameSession session;
  };

  std::shared_ptr<Entry> Find(const std::string& id) const;
  std::string NextId();
  void AppendLog(const std::string& id, std::span<const GameEvent> events);

  ServiceOptions options_;
  mutable std::shared_mutex map_mu_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::mutex log_mu_;
  uint64_t id_state_;
};

}  // namespace vgame

#endif  // VGAME_GAME_SESSION_H_
