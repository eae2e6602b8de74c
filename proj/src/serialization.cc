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

#include "vgame/serialization.h"

#include <cstdio>
#include <cstdlib>

#include "vgame/errors.h"

namespace vgame {
namespace {

[[noreturn]] void Malformed(const std::string& what) {
  throw GameError(ErrorCode::kParseError, "malformed JSON: " + what);
}

double NumberAt(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number()) {
    Malformed(std::string("expected number field '") + key + "'");
  }
  return j.at(key).get<double>();
}

}  // namespace

Json ToJson(const Point& p) { return Json::array({p.x, p.y}); }

Json ToJson(const Board& board) {
  Json j = {{"w", board.width()}, {"h", board.height()}};
  if (board.origin() != Point{}) {
    j["x0"] = board.origin().x;
    j["y0"] = board.origin().y;
  }
  return j;
}

Json ToJson(const AreaTally& tally) {
  return {{"white", tally.white}, {"black", tally.black}};
}

Json ToJson(const StealResult& result) {
  return {{"point", ToJson(result.point)},
          {"exactArea", result.exact_area},
          {"sampledArea", result.sampled_area},
          {"cellsStolenFrom", result.cells_stolen_from},
          {"iterations", result.iterations}};
}

Json ToJson(const StrategyResult& result) {
  Json points = Json::array();
  for (const Point& p : result.points) points.push_back(ToJson(p));
  return {{"points", points},
          {"guaranteedArea", result.guaranteed_area},
          {"formulaArea", result.formula_area},
          {"epsilon", result.epsilon}};
}

Json DiagramToJson(const Board& board, std::span<const VoronoiCell> cells) {
  Json out_cells = Json::array();
  for (const VoronoiCell& cell : cells) {
    Json vertices = Json::array();
    for (const Point& v : cell.region.vertices()) vertices.push_back(ToJson(v));
    out_cells.push_back({{"site", ToJson(cell.site)},
                         {"owner", cell.owner == Owner::kWhite ? "white" : "black"},
                         {"index", cell.index},
                         {"vertices", vertices},
                         {"area", cell.region.area()}});
  }
  return {{"board", ToJson(board)},
          {"cells", out_cells},
          {"tally", ToJson(Tally(cells))}};
}

Point PointFromJson(const Json& j) {
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  if (j.is_object()) return {NumberAt(j, "x"), NumberAt(j, "y")};
  Malformed("expected point [x, y]");
}

Board BoardFromJson(const Json& j) {
  Point origin;
  if (j.is_object() && j.contains("x0")) {
    origin = {NumberAt(j, "x0"), NumberAt(j, "y0")};
  }
  try {
    return Board(NumberAt(j, "w"), NumberAt(j, "h"), origin);
  } catch (const GameError& e) {
    Malformed(e.what());
  }
}

std::vector<Point> PointsFromJson(const Json& j) {
  if (!j.is_array()) Malformed("expected an array of points");
  std::vector<Point> points;
  for (const Json& item : j) points.push_back(PointFromJson(item));
  return points;
}

StealResult StealResultFromJson(const Json& j) {
  StealResult result;
  if (!j.is_object() || !j.contains("point")) Malformed("expected steal result");
  result.point = PointFromJson(j.at("point"));
  result.exact_area = NumberAt(j, "exactArea");
  result.sampled_area = NumberAt(j, "sampledArea");
  result.cells_stolen_from = j.value("cellsStolenFrom", std::vector<int>{});
  result.iterations = j.value("iterations", 0);
  return result;
}

SitesFile SitesFileFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("board") || !j.contains("white")) {
    Malformed("sites file needs 'board' and 'white'");
  }
  SitesFile file;
  file.board = BoardFromJson(j.at("board"));
  file.sites.white = PointsFromJson(j.at("white"));
  if (j.contains("black")) file.sites.black = PointsFromJson(j.at("black"));
  return file;
}

Json ToJson(const SitesFile& file) {
  Json white = Json::array();
  Json black = Json::array();
  for (const Point& p : file.sites.white) white.push_back(ToJson(p));
  for (const Point& p : file.sites.black) black.push_back(ToJson(p));
  return {{"board", ToJson(file.board)}, {"white", white}, {"black", black}};
}

GameRecord MakeGameRecord(const Board& board, std::span<const Point> white,
                          std::span<const Point> black) {
  const GameOutcome outcome = PlayGame(white, black, board);
  GameRecord record;
  record.board = board;
  record.n = static_cast<int>(white.size());
  record.white.assign(white.begin(), white.end());
  record.black.assign(black.begin(), black.end());
  record.tally = {outcome.white_area, outcome.black_area};
  record.winner = outcome.winner;
  return record;
}

Json ToJson(const GameRecord& record) {
  Json white = Json::array();
  Json black = Json::array();
  for (const Point& p : record.white) white.push_back(ToJson(p));
  for (const Point& p : record.black) black.push_back(ToJson(p));
  return {{"board", ToJson(record.board)},
          {"n", record.n},
          {"white", white},
          {"black", black},
          {"tally", ToJson(record.tally)},
          {"winner", std::string(WinnerName(record.winner))}};
}

GameRecord GameRecordFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("tally") || !j.contains("winner") ||
      !j.at("winner").is_string() || !j.contains("n") ||
      !j.at("n").is_number_integer()) {
    Malformed("game record needs board, n, white, black, tally, winner");
  }
  GameRecord record;
  record.board = BoardFromJson(j.at("board"));
  record.n = j.at("n").get<int>();
  record.white = PointsFromJson(j.at("white"));
  record.black = PointsFromJson(j.value("black", Json::array()));
  record.tally = {NumberAt(j.at("tally"), "white"),
                  NumberAt(j.at("tally"), "black")};
  record.winner = WinnerFromName(j.at("winner").get<std::string>());
  return record;
}

Winner WinnerFromName(const std::string& name) {
  if (name == "Wilma") return Winner::kWilma;
  if (name == "Barney") return Winner::kBarney;
  if (name == "Tie") return Winner::kTie;
  Malformed("unknown winner '" + name + "'");
}

double RoundSignificant(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

void RoundNumbers(Json& j, int digits) {
  if (j.is_number_float()) {
    j = RoundSignificant(j.get<double>(), digits);
  } else if (j.is_structured()) {
    for (Json& item : j) RoundNumbers(item, digits);
  }
}

}  // namespace vgame
