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

// Single-point best response for Barney and the sampling oracle that checks
// every exact area computation.

#ifndef VGAME_BEST_RESPONSE_H_
#define VGAME_BEST_RESPONSE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "vgame/geometry.h"
#include "vgame/voronoi.h"

namespace vgame {

struct OracleConfig {
  int64_t samples = 1'000'000;
  // Jittered grid when true, plain uniform sampling otherwise.
  bool stratified = true;
  uint64_t seed = 0x5eed;
};

struct StealResult {
  Point point;
  double exact_area = 0.0;
  double sampled_area = 0.0;
  // Indices of the white sites whose cells lose area to `point`.
  std::vector<int> cells_stolen_from;
  // Nelder-Mead iterations of the winning start.
  int iterations = 0;
};

struct BestResponseOptions {
  // Starts on a grid x grid jittered lattice.
  int grid = 32;
  uint64_t seed = 1;
  // 0 selects std::thread::hardware_concurrency().
  int threads = 1;
  // Stop once the simplex diameter is below this fraction of the board
  // diameter.
  double tolerance_fraction = 1e-7;
  int max_iterations = 2000;
  OracleConfig oracle;
};

// Area of p's cell in the diagram of white + {p}. Requires p on the closed
// board; throws GameError(kCoincidentSites) if p is on a white site.
double StealAreaExact(std::span<const Point> white, const Board& board,
                      const Point& p);

// Area of each white site's current cell (in the diagram of all sites) that
// p would take over. With no black sites the pieces sum to StealAreaExact.
std::vector<double> StolenPieces(const SiteSet& sites, const Board& board,
                                 const Point& p);

// Total area a new black point adds to Barney's side.
double MarginalGain(const SiteSet& sites, const Board& board, const Point& p);

// Monte Carlo estimate of StealAreaExact; deterministic given cfg.seed.
double StealAreaSampled(std::span<const Point> white, const Board& board,
                        const Point& p, const OracleConfig& cfg);

// Monte Carlo estimate of MarginalGain.
double MarginalGainSampled(const SiteSet& sites, const Board& board,
                           const Point& p, const OracleConfig& cfg);

// Binomial standard error of a sampled area estimate.
double SamplingSigma(double area, const Board& board, int64_t samples);

// Multi-start Nelder-Mead maximisation of StealAreaExact.
StealResult BestResponsePoint(std::span<const Point> white, const Board& board,
                              const BestResponseOptions& options = {});

// Same, maximising MarginalGain against a partially played game.
StealResult BestResponsePoint(const SiteSet& sites, const Board& board,
                              const BestResponseOptions& options = {});

}  // namespace vgame

#endif  // VGAME_BEST_RESPONSE_H_
