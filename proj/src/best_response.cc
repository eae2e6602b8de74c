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

#include "vgame/best_response.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <thread>

#include "vgame/closed_forms.h"
#include "vgame/errors.h"

namespace vgame {
namespace {

double UnitDouble(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Counts samples for which p is strictly nearest and the previous nearest
// site was white.
double SampleGain(std::span<const Point> white, std::span<const Point> black,
                  const Board& board, const Point& p,
                  const OracleConfig& cfg) {
  if (cfg.samples < 10'000) {
    throw GameError(ErrorCode::kInvalidConfig, "oracle needs >= 1e4 samples");
  }
  std::mt19937_64 rng(cfg.seed);
  const double w = board.width();
  const double h = board.height();
  const double x0 = board.origin().x;
  const double y0 = board.origin().y;

  auto hit = [&](double qx, double qy) {
    const double dpx = qx - p.x;
    const double dpy = qy - p.y;
    const double dp = dpx * dpx + dpy * dpy;
    double dw = std::numeric_limits<double>::infinity();
    for (const Point& s : white) {
      const double dx = qx - s.x;
      const double dy = qy - s.y;
      dw = std::min(dw, dx * dx + dy * dy);
      if (dw <= dp) return false;
    }
    for (const Point& s : black) {
      const double dx = qx - s.x;
      const double dy = qy - s.y;
      if (dx * dx + dy * dy < dw) return false;
    }
    return true;
  };

  int64_t total = 0;
  int64_t count = 0;
  if (cfg.stratified) {
    const auto gx = std::max<int64_t>(
        1, std::llround(std::sqrt(static_cast<double>(cfg.samples) * w / h)));
    const int64_t gy = (cfg.samples + gx - 1) / gx;
    const double cw = w / static_cast<double>(gx);
    const double ch = h / static_cast<double>(gy);
    for (int64_t j = 0; j < gy; ++j) {
      for (int64_t i = 0; i < gx; ++i) {
        const double qx = x0 + (static_cast<double>(i) + UnitDouble(rng)) * cw;
        const double qy = y0 + (static_cast<double>(j) + UnitDouble(rng)) * ch;
        count += hit(qx, qy) ? 1 : 0;
      }
    }
    total = gx * gy;
  } else {
    for (int64_t k = 0; k < cfg.samples; ++k) {
      const double qx = x0 + UnitDouble(rng) * w;
      const double qy = y0 + UnitDouble(rng) * h;
      count += hit(qx, qy) ? 1 : 0;
    }
    total = cfg.samples;
  }
  return board.area() * static_cast<double>(count) / static_cast<double>(total);
}

using Objective = std::function<double(const Point&)>;

struct SearchOutcome {
  Point best;
  double value = -1.0;
  int iterations = 0;
};

bool Better(double a_value, const Point& a, double b_value, const Point& b) {
  if (a_value != b_value) return a_value > b_value;
  return LexLess(a, b);
}

SearchOutcome NelderMead(const Objective& f, const Point& start, double step,
                         double tol, int max_iterations) {
  std::array<Point, 3> x = {start, start + Point{step, 0.0},
                            start + Point{0.0, step}};
  std::array<double, 3> fx = {f(x[0]), f(x[1]), f(x[2])};
  int it = 0;
  for (; it < max_iterations; ++it) {
    std::array<int, 3> idx = {0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return Better(fx[a], x[a], fx[b], x[b]);
    });
    x = {x[idx[0]], x[idx[1]], x[idx[2]]};
    fx = {fx[idx[0]], fx[idx[1]], fx[idx[2]]};

    const double diameter = std::max(
        {Distance(x[0], x[1]), Distance(x[0], x[2]), Distance(x[1], x[2])});
    if (diameter < tol) break;

    const Point c = (x[0] + x[1]) * 0.5;
    const Point xr = c + (c - x[2]);
    const double fr = f(xr);
    if (fr > fx[0]) {
      const Point xe = c + (c - x[2]) * 2.0;
      const double fe = f(xe);
      if (fe > fr) {
        x[2] = xe;
        fx[2] = fe;
      } else {
        x[2] = xr;
        fx[2] = fr;
      }
      continue;
    }
    if (fr > fx[1]) {
      x[2] = xr;
      fx[2] = fr;
      continue;
    }
    const bool outside = fr > fx[2];
    const Point xc = outside ? c + (xr - c) * 0.5 : c + (x[2] - c) * 0.5;
    const double fc = f(xc);
    if ((outside && fc >= fr) || (!outside && fc > fx[2])) {
      x[2] = xc;
      fx[2] = fc;
      continue;
    }
    for (int i = 1; i < 3; ++i) {
      x[i] = x[0] + (x[i] - x[0]) * 0.5;
      fx[i] = f(x[i]);
    }
  }
  int best = 0;
  for (int i = 1; i < 3; ++i) {
    if (Better(fx[i], x[i], fx[best], x[best])) best = i;
  }
  return {x[best], fx[best], it};
}

// Seeds at the known optimum when white is a 1 x n grid whose cells are
// between sqrt(2) and sqrt(3) times as tall (across the strip) as half
// their width.
std::vector<Point> AnalyticSeeds(std::span<const Point> white,
                                 const Board& board) {
  std::vector<Point> seeds;
  if (white.size() < 3) return seeds;
  SiteSet sites{{white.begin(), white.end()}, {}};
  const auto cells = ComputeVoronoi(sites, board);
  const GridShape shape = IsRegularGrid(cells, DefaultGridTolerance(board));
  if (!shape.regular || (shape.rows != 1 && shape.cols != 1)) return seeds;

  const bool horizontal = shape.rows == 1;
  const double along = horizontal ? board.width() / shape.cols
                                  : board.height() / shape.rows;
  const double across = horizontal ? board.height() : board.width();
  const double r = across / along;
  if (!(r > std::sqrt(2.0)) || r > std::sqrt(3.0)) return seeds;

  // The second site along the strip has neighbours on both sides.
  std::vector<Point> ordered(white.begin(), white.end());
  std::sort(ordered.begin(), ordered.end(), [&](const Point& a, const Point& b) {
    return horizontal ? a.x < b.x : a.y < b.y;
  });
  const Point& site = ordered[1];
  const double offset = YStar(r) * along / 2.0;
  for (double sign : {1.0, -1.0}) {
    seeds.push_back(horizontal ? Point{site.x, site.y + sign * offset}
                               : Point{site.x + sign * offset, site.y});
  }
  return seeds;
}

StealResult Optimize(const Objective& objective, const Board& board,
                     std::vector<Point> seeds,
                     const BestResponseOptions& options) {
  if (options.grid < 1) {
    throw GameError(ErrorCode::kInvalidConfig, "grid must be positive");
  }
  const double margin = 1e-9 * board.long_side();
  const Point lo = board.origin() + Point{margin, margin};
  const Point hi = board.upper_right() - Point{margin, margin};
  auto clamp = [&](const Point& p) {
    return Point{std::clamp(p.x, lo.x, hi.x), std::clamp(p.y, lo.y, hi.y)};
  };

  std::vector<Point> starts;
  std::mt19937_64 rng(options.seed);
  const double cw = board.width() / options.grid;
  const double ch = board.height() / options.grid;
  for (int j = 0; j < options.grid; ++j) {
    for (int i = 0; i < options.grid; ++i) {
      const double u = UnitDouble(rng);
      const double v = UnitDouble(rng);
      starts.push_back(clamp(board.origin() + Point{(i + u) * cw, (j + v) * ch}));
    }
  }
  for (const Point& s : seeds) starts.push_back(clamp(s));

  const double step = 0.5 * std::min(cw, ch);
  const double tol = options.tolerance_fraction * board.diameter();
  std::vector<SearchOutcome> outcomes(starts.size());
  auto run = [&](size_t begin, size_t end) {
    for (size_t k = begin; k < end; ++k) {
      outcomes[k] =
          NelderMead(objective, starts[k], step, tol, options.max_iterations);
    }
  };

  size_t threads = options.threads > 0
                       ? static_cast<size_t>(options.threads)
                       : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, starts.size());
  if (threads <= 1) {
    run(0, starts.size());
  } else {
    std::vector<std::thread> pool;
    const size_t chunk = (starts.size() + threads - 1) / threads;
    for (size_t t = 0; t < threads; ++t) {
      const size_t begin = t * chunk;
      const size_t end = std::min(starts.size(), begin + chunk);
      if (begin < end) pool.emplace_back(run, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  size_t best = 0;
  for (size_t k = 1; k < outcomes.size(); ++k) {
    if (Better(outcomes[k].value, outcomes[k].best, outcomes[best].value,
               outcomes[best].best)) {
      best = k;
    }
  }
  StealResult result;
  result.point = outcomes[best].best;
  result.exact_area = outcomes[best].value;
  result.iterations = outcomes[best].iterations;
  return result;
}

bool NearAny(const Point& p, std::span<const Point> sites) {
  return std::any_of(sites.begin(), sites.end(), [&](const Point& s) {
    return Distance(p, s) <= kCoincidenceTolerance;
  });
}

std::vector<int> NonEmptyPieces(const std::vector<double>& pieces,
                                const Board& board) {
  std::vector<int> indices;
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i] > 1e-12 * board.area()) indices.push_back(static_cast<int>(i));
  }
  return indices;
}

}  // namespace

double StealAreaExact(std::span<const Point> white, const Board& board,
                      const Point& p) {
  if (!board.Contains(p)) {
    throw GameError(ErrorCode::kOutsideBoard, "point is outside the board");
  }
  if (NearAny(p, white)) {
    throw GameError(ErrorCode::kCoincidentSites, "point is on a white site");
  }
  const auto cell = ClippedCell(p, white, board);
  return cell ? cell->area() : 0.0;
}

std::vector<double> StolenPieces(const SiteSet& sites, const Board& board,
                                 const Point& p) {
  if (!board.Contains(p)) {
    throw GameError(ErrorCode::kOutsideBoard, "point is outside the board");
  }
  if (NearAny(p, sites.white) || NearAny(p, sites.black)) {
    throw GameError(ErrorCode::kCoincidentSites, "point is on an existing site");
  }
  const auto cells = ComputeVoronoi(sites, board);
  std::vector<double> pieces(sites.white.size(), 0.0);
  for (const VoronoiCell& cell : cells) {
    if (cell.owner != Owner::kWhite) continue;
    const auto piece = Clip(cell.region, BisectorHalfPlane(p, cell.site));
    if (piece) pieces[static_cast<size_t>(cell.index)] = piece->area();
  }
  return pieces;
}

double MarginalGain(const SiteSet& sites, const Board& board, const Point& p) {
  double total = 0.0;
  for (double piece : StolenPieces(sites, board, p)) total += piece;
  return total;
}

double StealAreaSampled(std::span<const Point> white, const Board& board,
                        const Point& p, const OracleConfig& cfg) {
  return SampleGain(white, {}, board, p, cfg);
}

double MarginalGainSampled(const SiteSet& sites, const Board& board,
                           const Point& p, const OracleConfig& cfg) {
  return SampleGain(sites.white, sites.black, board, p, cfg);
}

double SamplingSigma(double area, const Board& board, int64_t samples) {
  const double q = std::clamp(area / board.area(), 0.0, 1.0);
  return board.area() * std::sqrt(q * (1.0 - q) / static_cast<double>(samples));
}

StealResult BestResponsePoint(std::span<const Point> white, const Board& board,
                              const BestResponseOptions& options) {
  if (white.empty()) {
    throw GameError(ErrorCode::kInvalidConfig, "no white sites to respond to");
  }
  const double margin = 1e-9 * board.long_side();
  Objective objective = [&](const Point& p) {
    const Point lo = board.origin() + Point{margin, margin};
    const Point hi = board.upper_right() - Point{margin, margin};
    if (p.x < lo.x || p.y < lo.y || p.x > hi.x || p.y > hi.y) return -1.0;
    if (NearAny(p, white)) return -1.0;
    const auto cell = ClippedCell(p, white, board);
    return cell ? cell->area() : 0.0;
  };
  StealResult result =
      Optimize(objective, board, AnalyticSeeds(white, board), options);
  result.sampled_area =
      StealAreaSampled(white, board, result.point, options.oracle);
  SiteSet sites{{white.begin(), white.end()}, {}};
  result.cells_stolen_from =
      NonEmptyPieces(StolenPieces(sites, board, result.point), board);
  return result;
}

StealResult BestResponsePoint(const SiteSet& sites, const Board& board,
                              const BestResponseOptions& options) {
  if (sites.black.empty()) return BestResponsePoint(sites.white, board, options);
  const auto cells = ComputeVoronoi(sites, board);
  const double margin = 1e-9 * board.long_side();
  Objective objective = [&](const Point& p) {
    const Point lo = board.origin() + Point{margin, margin};
    const Point hi = board.upper_right() - Point{margin, margin};
    if (p.x < lo.x || p.y < lo.y || p.x > hi.x || p.y > hi.y) return -1.0;
    if (NearAny(p, sites.white) || NearAny(p, sites.black)) return -1.0;
    double gain = 0.0;
    for (const VoronoiCell& cell : cells) {
      if (cell.owner != Owner::kWhite) continue;
      const auto piece = Clip(cell.region, BisectorHalfPlane(p, cell.site));
      if (piece) gain += piece->area();
    }
    return gain;
  };
  StealResult result = Optimize(objective, board, {}, options);
  result.sampled_area =
      MarginalGainSampled(sites, board, result.point, options.oracle);
  result.cells_stolen_from =
      NonEmptyPieces(StolenPieces(sites, board, result.point), board);
  return result;
}

}  // namespace vgame
