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

// JSON documents shared by the command-line tool and the game service. The
// schemas are described in docs/schemas.md.

#ifndef VGAME_SERIALIZATION_H_
#define VGAME_SERIALIZATION_H_

#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "vgame/best_response.h"
#include "vgame/game_rules.h"
#include "vgame/voronoi.h"

namespace vgame {

using Json = nlohmann::json;

Json ToJson(const Point& p);
Json ToJson(const Board& board);
Json ToJson(const AreaTally& tally);
Json ToJson(const StealResult& result);
Json ToJson(const StrategyResult& result);
Json DiagramToJson(const Board& board, std::span<const VoronoiCell> cells);

// All parsers throw GameError(kParseError) on malformed input.
Point PointFromJson(const Json& j);
Board BoardFromJson(const Json& j);
std::vector<Point> PointsFromJson(const Json& j);
StealResult StealResultFromJson(const Json& j);

// {"board": {"w", "h"}, "white": [[x, y], ...], "black": [[x, y], ...]}
struct SitesFile {
  Board board{1.0, 1.0};
  SiteSet sites;
};

SitesFile SitesFileFromJson(const Json& j);
Json ToJson(const SitesFile& file);

// {board, n, white[], black[], tally, winner}
struct GameRecord {
  Board board{1.0, 1.0};
  int n = 0;
  std::vector<Point> white;
  std::vector<Point> black;
  AreaTally tally;
  Winner winner = Winner::kTie;
};

GameRecord MakeGameRecord(const Board& board, std::span<const Point> white,
                          std::span<const Point> black);
Json ToJson(const GameRecord& record);
GameRecord GameRecordFromJson(const Json& j);

Winner WinnerFromName(const std::string& name);

// Rounds every floating-point number in `j` to `digits` significant digits.
void RoundNumbers(Json& j, int digits = 9);
double RoundSignificant(double value, int digits = 9);

}  // namespace vgame

#endif  // VGAME_SERIALIZATION_H_
