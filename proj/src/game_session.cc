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

#include "vgame/game_session.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <random>

#include "vgame/errors.h"

namespace vgame {
namespace {

void Recompute(GameSession& s) {
  if (s.white.empty()) {
    s.cells.clear();
    s.tally = {};
    return;
  }
  s.cells = ComputeVoronoi(SiteSet{s.white, s.black}, s.config.board);
  s.tally = Tally(s.cells);
}

void RequireBarneyToMove(const GameSession& s) {
  if (s.phase != Phase::kBarneyPlacing) {
    throw GameError(ErrorCode::kWrongPhase,
                    "only available while Barney is placing");
  }
}

}  // namespace

std::string_view PhaseName(Phase phase) {
  switch (phase) {
    case Phase::kWilmaPlacing:
      return "WilmaPlacing";
    case Phase::kBarneyPlacing:
      return "BarneyPlacing";
    case Phase::kFinished:
      return "Finished";
  }
  return "Finished";
}

std::string_view PlayerName(Player player) {
  return player == Player::kWilma ? "wilma" : "barney";
}

Player PlayerFromName(const std::string& name) {
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "wilma" || lower == "white") return Player::kWilma;
  if (lower == "barney" || lower == "black") return Player::kBarney;
  throw GameError(ErrorCode::kParseError, "unknown player '" + name + "'");
}

Json ToJson(const GameEvent& event) {
  if (event.type == GameEvent::Type::kCreate) {
    return {{"seq", event.seq},
            {"type", "create"},
            {"n", event.n},
            {"board", ToJson(*event.board)},
            {"autoplay_barney", event.autoplay_barney}};
  }
  return {{"seq", event.seq},
          {"type", "place"},
          {"player", std::string(PlayerName(event.player))},
          {"x", event.point.x},
          {"y", event.point.y}};
}

GameEvent GameEventFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw GameError(ErrorCode::kParseError, "event needs a type");
  }
  GameEvent event;
  event.seq = j.value("seq", int64_t{0});
  const std::string type = j.at("type").get<std::string>();
  if (type == "create") {
    event.type = GameEvent::Type::kCreate;
    event.n = j.value("n", 0);
    event.board = BoardFromJson(j.at("board"));
    event.autoplay_barney = j.value("autoplay_barney", false);
  } else if (type == "place") {
    event.type = GameEvent::Type::kPlace;
    event.player = PlayerFromName(j.value("player", std::string()));
    event.point = PointFromJson(j);
  } else {
    throw GameError(ErrorCode::kParseError, "unknown event type " + type);
  }
  return event;
}

Json ToJson(const GameSession& s) {
  Json white = Json::array();
  Json black = Json::array();
  for (const Point& p : s.white) white.push_back(ToJson(p));
  for (const Point& p : s.black) black.push_back(ToJson(p));
  Json j = {
      {"id", s.id},
      {"n", s.config.n},
      {"board", ToJson(s.config.board)},
      {"autoplay_barney", s.autoplay_barney},
      {"phase", std::string(PhaseName(s.phase))},
      {"white", white},
      {"black", black},
      {"tally", ToJson(s.tally)},
      {"cells", DiagramToJson(s.config.board, s.cells).at("cells")},
      {"predicted_winner",
       std::string(WinnerName(PredictWinner(s.config)))},
      {"winner", nullptr},
      {"advice", nullptr},
  };
  if (s.winner) j["winner"] = std::string(WinnerName(*s.winner));
  if (s.advice) j["advice"] = ToJson(*s.advice);
  return j;
}

GameSession CreateSession(const std::string& id, const GameConfig& config,
                          bool autoplay_barney) {
  config.Validate();
  GameSession s;
  s.id = id;
  s.config = config;
  s.autoplay_barney = autoplay_barney;
  GameEvent create;
  create.type = GameEvent::Type::kCreate;
  create.n = config.n;
  create.board = config.board;
  create.autoplay_barney = autoplay_barney;
  s.events.push_back(create);
  return s;
}

void PlacePoint(GameSession& s, Player player, const Point& point) {
  const bool wilma_turn = s.phase == Phase::kWilmaPlacing;
  if (s.phase == Phase::kFinished ||
      wilma_turn != (player == Player::kWilma)) {
    throw GameError(ErrorCode::kOutOfTurn,
                    std::string(PlayerName(player)) + " cannot place now");
  }
  if (!s.config.board.ContainsStrictly(point)) {
    throw GameError(ErrorCode::kOutsideBoard, "point is outside the board");
  }
  auto occupied = [&](const std::vector<Point>& sites) {
    return std::any_of(sites.begin(), sites.end(), [&](const Point& q) {
      return Distance(q, point) <= kCoincidenceTolerance;
    });
  };
  if (occupied(s.white) || occupied(s.black)) {
    throw GameError(ErrorCode::kCoincidentSites, "point is already occupied");
  }

  (wilma_turn ? s.white : s.black).push_back(point);
  GameEvent place;
  place.type = GameEvent::Type::kPlace;
  place.seq = static_cast<int64_t>(s.events.size());
  place.player = player;
  place.point = point;
  s.events.push_back(place);
  s.advice.reset();

  const auto n = static_cast<size_t>(s.config.n);
  if (wilma_turn && s.white.size() == n) s.phase = Phase::kBarneyPlacing;
  Recompute(s);
  if (!wilma_turn && s.black.size() == n) {
    s.phase = Phase::kFinished;
    s.winner = PlayGame(s.white, s.black, s.config.board).winner;
  }
}

StealResult ComputeAdvice(const GameSession& s,
                          const BestResponseOptions& options) {
  RequireBarneyToMove(s);
  return BestResponsePoint(SiteSet{s.white, s.black}, s.config.board, options);
}

void AutoplayBarney(GameSession& s, const BestResponseOptions& options) {
  RequireBarneyToMove(s);
  if (s.black.empty()) {
    const StrategyResult plan = BarneyPlay(
        s.white, s.config.board, DefaultEpsilon(s.config.board), options);
    for (const Point& p : plan.points) PlacePoint(s, Player::kBarney, p);
    return;
  }
  while (s.phase == Phase::kBarneyPlacing) {
    PlacePoint(s, Player::kBarney, ComputeAdvice(s, options).point);
  }
}

Preview PreviewPlacement(const GameSession& session, Player player,
                         const Point& point) {
  GameSession copy = session;
  const AreaTally before = copy.tally;
  PlacePoint(copy, player, point);
  Preview preview;
  preview.tally = copy.tally;
  preview.gain = player == Player::kWilma ? copy.tally.white - before.white
                                          : copy.tally.black - before.black;
  return preview;
}

GameSession ReplayEvents(const std::string& id,
                         const std::vector<GameEvent>& events) {
  if (events.empty() || events.front().type != GameEvent::Type::kCreate) {
    throw GameError(ErrorCode::kParseError, "event log must start with create");
  }
  const GameEvent& create = events.front();
  GameSession s = CreateSession(id, GameConfig{create.n, *create.board},
                                create.autoplay_barney);
  for (size_t i = 1; i < events.size(); ++i) {
    if (events[i].type != GameEvent::Type::kPlace) {
      throw GameError(ErrorCode::kParseError, "duplicate create event");
    }
    PlacePoint(s, events[i].player, events[i].point);
  }
  return s;
}

SessionStore::SessionStore(ServiceOptions options)
    : options_(std::move(options)),
      id_state_(options_.id_seed != 0 ? options_.id_seed
                                      : std::random_device{}()) {}

std::string SessionStore::NextId() {
  // Called with map_mu_ held exclusively.
  std::mt19937_64 rng(id_state_++);
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(rng()));
  return buf;
}

std::shared_ptr<SessionStore::Entry> SessionStore::Find(
    const std::string& id) const {
  std::shared_lock lock(map_mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) {
    throw GameError(ErrorCode::kNotFound, "no session '" + id + "'");
  }
  return it->second;
}

void SessionStore::AppendLog(const std::string& id,
                             std::span<const GameEvent> events) {
  if (options_.event_log.empty() || events.empty()) return;
  std::lock_guard lock(log_mu_);
  std::ofstream out(options_.event_log, std::ios::app);
  for (const GameEvent& e : events) {
    out << Json{{"session", id}, {"event", ToJson(e)}}.dump() << '\n';
  }
}

GameSession SessionStore::Create(const GameConfig& config,
                                 bool autoplay_barney) {
  config.Validate();
  auto entry = std::make_shared<Entry>();
  {
    std::unique_lock lock(map_mu_);
    std::string id = NextId();
    while (sessions_.count(id) != 0) id = NextId();
    entry->session = CreateSession(id, config, autoplay_barney);
    sessions_.emplace(id, entry);
  }
  std::lock_guard lock(entry->mu);
  AppendLog(entry->session.id, entry->session.events);
  return entry->session;
}

GameSession SessionStore::Place(const std::string& id, Player player,
                                const Point& point) {
  auto entry = Find(id);
  std::lock_guard lock(entry->mu);
  GameSession next = entry->session;
  PlacePoint(next, player, point);
  if (next.autoplay_barney && next.phase == Phase::kBarneyPlacing &&
      next.black.empty()) {
    AutoplayBarney(next, options_.advice);
  }
  const size_t old_size = entry->session.events.size();
  entry->session = std::move(next);
  AppendLog(id, std::span(entry->session.events).subspan(old_size));
  return entry->session;
}

GameSession SessionStore::Get(const std::string& id) const {
  auto entry = Find(id);
  std::lock_guard lock(entry->mu);
  return entry->session;
}

StealResult SessionStore::Advice(const std::string& id) {
  auto entry = Find(id);
  std::lock_guard lock(entry->mu);
  if (!entry->session.advice) {
    entry->session.advice = ComputeAdvice(entry->session, options_.advice);
  }
  return *entry->session.advice;
}

GameSession SessionStore::Autoplay(const std::string& id) {
  auto entry = Find(id);
  std::lock_guard lock(entry->mu);
  GameSession next = entry->session;
  AutoplayBarney(next, options_.advice);
  const size_t old_size = entry->session.events.size();
  entry->session = std::move(next);
  AppendLog(id, std::span(entry->session.events).subspan(old_size));
  return entry->session;
}

Preview SessionStore::DryRun(const std::string& id, Player player,
                             const Point& point) const {
  auto entry = Find(id);
  std::lock_guard lock(entry->mu);
  return PreviewPlacement(entry->session, player, point);
}

std::vector<GameEvent> SessionStore::Events(const std::string& id) const {
  auto entry = Find(id);
  std::lock_guard lock(entry->mu);
  return entry->session.events;
}

size_t SessionStore::LoadLog() {
  if (options_.event_log.empty() || !std::filesystem::exists(options_.event_log)) {
    return 0;
  }
  std::ifstream in(options_.event_log);
  std::map<std::string, std::vector<GameEvent>> logs;
  std::vector<std::string> order;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::exception& e) {
      throw GameError(ErrorCode::kParseError, e.what());
    }
    const std::string id = j.at("session").get<std::string>();
    if (logs.count(id) == 0) order.push_back(id);
    logs[id].push_back(GameEventFromJson(j.at("event")));
  }
  std::unique_lock lock(map_mu_);
  for (const std::string& id : order) {
    auto entry = std::make_shared<Entry>();
    entry->session = ReplayEvents(id, logs[id]);
    sessions_[id] = entry;
  }
  return order.size();
}

}  // namespace vgame
