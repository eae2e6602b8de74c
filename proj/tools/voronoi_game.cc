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

// Command-line front end: outcome prediction, best responses, diagrams,
// reproduction checks and the game server.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "vgame/best_response.h"
#include "vgame/closed_forms.h"
#include "vgame/errors.h"
#include "vgame/game_rules.h"
#include "vgame/game_server.h"
#include "vgame/game_session.h"
#include "vgame/serialization.h"
#include "vgame/verification.h"

namespace {

using vgame::Json;

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void PrintJson(Json j) {
  vgame::RoundNumbers(j, 9);
  std::cout << j.dump(2) << '\n';
}

vgame::Board ParseBoard(const std::string& text) {
  const auto x = text.find_first_of("xX");
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    return vgame::Board(std::stod(text.substr(0, x)),
                        std::stod(text.substr(x + 1)));
  } catch (const std::logic_error&) {
    throw vgame::GameError(vgame::ErrorCode::kParseError,
                           "board must look like WxH, got '" + text + "'");
  }
}

vgame::SitesFile LoadSites(const std::string& path,
                           const std::optional<std::string>& board) {
  std::ifstream in(path);
  if (!in) {
    throw vgame::GameError(vgame::ErrorCode::kParseError,
                           "cannot open sites file " + path);
  }
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw vgame::GameError(vgame::ErrorCode::kParseError, e.what());
  }
  vgame::SitesFile file = vgame::SitesFileFromJson(j);
  if (board) file.board = ParseBoard(*board);
  return file;
}

int RunWinner(int n, double rho, const std::string& format) {
  if (n < 1 || !(rho > 0.0) || rho > 1.0) {
    throw vgame::GameError(vgame::ErrorCode::kInvalidConfig,
                           "need --n >= 1 and --rho in (0, 1]");
  }
  const vgame::Winner winner = vgame::PredictWinner(n, rho);
  const auto critical = vgame::CriticalRatio(n);
  const std::string name(vgame::WinnerName(winner));
  if (format == "json") {
    Json j = {{"n", n}, {"rho", rho}, {"winner", name}};
    j["critical_ratio"] = critical ? Json(*critical) : Json(nullptr);
    j["margin"] = critical ? Json(rho - *critical) : Json(nullptr);
    PrintJson(j);
  } else if (format == "csv") {
    std::cout << "n,rho,winner,critical_ratio,margin\n"
              << n << ',' << Num(rho) << ',' << name << ','
              << (critical ? Num(*critical) : "") << ','
              << (critical ? Num(rho - *critical) : "") << '\n';
  } else {
    std::cout << "winner: " << name << '\n';
    if (critical) {
      std::cout << "critical ratio: " << Num(*critical) << '\n'
                << "margin: " << Num(rho - *critical) << '\n';
    } else {
      std::cout << "critical ratio: none (Wilma always wins)\n";
    }
  }
  return 0;
}

int RunBestResponse(const vgame::SitesFile& file,
                    const vgame::BestResponseOptions& options,
                    const std::string& format) {
  const vgame::StealResult result =
      vgame::BestResponsePoint(file.sites, file.board, options);
  if (format == "text") {
    std::cout << "point: " << Num(result.point.x) << ' ' << Num(result.point.y)
              << '\n'
              << "exact area: " << Num(result.exact_area) << '\n'
              << "sampled area: " << Num(result.sampled_area) << '\n';
  } else if (format == "csv") {
    std::cout << "x,y,exact_area,sampled_area,iterations\n"
              << Num(result.point.x) << ',' << Num(result.point.y) << ','
              << Num(result.exact_area) << ',' << Num(result.sampled_area)
              << ',' << result.iterations << '\n';
  } else {
    PrintJson(vgame::ToJson(result));
  }
  return 0;
}

int RunVerify(const vgame::VerifyOptions& options, const std::string& format) {
  const auto results = vgame::RunReproductionChecks(options);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  if (format == "json") {
    PrintJson(vgame::ToJson(results));
  } else if (format == "csv") {
    std::cout << "criterion,check,expected,got,tolerance,pass\n";
    for (const auto& r : results) {
      std::cout << r.criterion << ",\"" << r.name << "\",\"" << r.expected
                << "\"," << Num(r.got) << ',' << Num(r.tolerance) << ','
                << (r.pass ? "true" : "false") << '\n';
    }
  } else {
    std::cout << vgame::FormatTable(results)
              << (all ? "all checks passed\n" : "SOME CHECKS FAILED\n");
  }
  return all ? 0 : 1;
}

int RunServe(const std::string& host, int port, const std::string& event_log,
             const vgame::BestResponseOptions& advice) {
  vgame::ServiceOptions options;
  options.advice = advice;
  options.event_log = event_log;
  vgame::SessionStore store(options);
  const size_t restored = store.LoadLog();
  vgame::GameServer server(store);
  std::cerr << "restored " << restored << " session(s); listening on " << host
            << ':' << port << '\n';
  if (!server.Listen(host, port)) {
    std::cerr << "error: cannot bind " << host << ':' << port << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-round Voronoi game on rectangular boards"};
  app.require_subcommand(1);

  std::string format = "text";

  int n = 0;
  double rho = 0.0;
  auto* winner = app.add_subcommand("winner", "Predict the winner under optimal play");
  winner->add_option("--n", n, "points per player")->required();
  winner->add_option("--rho", rho, "aspect ratio in (0, 1]")->required();
  winner->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  std::string sites_path;
  std::optional<std::string> board_arg;
  int64_t samples = 1'000'000;
  uint64_t seed = 1;
  int threads = 1;
  int grid = 32;
  double eps = 0.0;

  auto* best = app.add_subcommand("best-response",
                                  "Best single black point against a position");
  best->add_option("--sites", sites_path, "sites file (JSON)")->required();
  best->add_option("--board", board_arg, "override board, WxH");
  best->add_option("--samples", samples, "oracle samples")->check(CLI::Range(int64_t{10'000}, int64_t{1'000'000'000}));
  best->add_option("--seed", seed, "random seed");
  best->add_option("--threads", threads, "worker threads (0 = all cores)");
  best->add_option("--grid", grid, "multi-start lattice size")->check(CLI::PositiveNumber);
  best->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* diagram = app.add_subcommand("diagram", "Clipped Voronoi diagram as JSON");
  diagram->add_option("--sites", sites_path, "sites file (JSON)")->required();
  diagram->add_option("--board", board_arg, "override board, WxH");

  auto* play = app.add_subcommand("play", "Score white against black");
  play->add_option("--sites", sites_path, "sites file (JSON)")->required();
  play->add_option("--board", board_arg, "override board, WxH");

  auto* strategy = app.add_subcommand(
      "strategy", "Barney's full reply to the white sites of a position");
  strategy->add_option("--sites", sites_path, "sites file (JSON)")->required();
  strategy->add_option("--board", board_arg, "override board, WxH");
  strategy->add_option("--eps", eps, "partner distance (default 1e-4 short side)");
  strategy->add_option("--seed", seed, "random seed");
  strategy->add_option("--threads", threads, "worker threads (0 = all cores)");

  vgame::VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify-paper", "Run the reproduction checks");
  verify->add_option("--seed", verify_options.seed, "random seed");
  verify->add_option("--samples", verify_options.oracle_samples, "oracle samples per case")
      ->check(CLI::Range(int64_t{10'000}, int64_t{1'000'000'000}));
  verify->add_option("--threads", verify_options.threads, "worker threads (0 = all cores)");
  verify->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  std::string host = "127.0.0.1";
  int port = 8080;
  std::string event_log;
  auto* serve = app.add_subcommand("serve", "Start the HTTP game service");
  serve->add_option("--host", host, "bind address");
  serve->add_option("--port", port, "TCP port")->check(CLI::Range(1, 65535));
  serve->add_option("--event-log", event_log, "append-only session log");
  serve->add_option("--seed", seed, "random seed for advice");
  serve->add_option("--samples", samples, "oracle samples for advice")
      ->check(CLI::Range(int64_t{10'000}, int64_t{1'000'000'000}));

  CLI11_PARSE(app, argc, argv);

  vgame::BestResponseOptions br;
  br.seed = seed;
  br.threads = threads;
  br.grid = grid;
  br.oracle.samples = samples;
  br.oracle.seed = seed;

  try {
    if (*winner) return RunWinner(n, rho, format);
    if (*best) {
      return RunBestResponse(LoadSites(sites_path, board_arg), br,
                             best->count("--format") ? format : "json");
    }
    if (*diagram) {
      const auto file = LoadSites(sites_path, board_arg);
      PrintJson(vgame::DiagramToJson(
          file.board, vgame::ComputeVoronoi(file.sites, file.board)));
      return 0;
    }
    if (*play) {
      const auto file = LoadSites(sites_path, board_arg);
      PrintJson(vgame::ToJson(vgame::MakeGameRecord(
          file.board, file.sites.white, file.sites.black)));
      return 0;
    }
    if (*strategy) {
      const auto file = LoadSites(sites_path, board_arg);
      const double e = eps > 0.0 ? eps : vgame::DefaultEpsilon(file.board);
      PrintJson(vgame::ToJson(
          vgame::BarneyPlay(file.sites.white, file.board, e, br)));
      return 0;
    }
    if (*verify) return RunVerify(verify_options, format);
    if (*serve) return RunServe(host, port, event_log, br);
  } catch (const vgame::GameError& e) {
    std::cerr << "error: " << vgame::ErrorCodeName(e.code()) << ": " << e.what()
              << '\n';
    return 2;
  }
  return 0;
}
