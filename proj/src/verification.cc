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

#include "vgame/verification.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "vgame/best_response.h"
#include "vgame/closed_forms.h"
#include "vgame/game_rules.h"
#include "vgame/voronoi.h"

namespace vgame {
namespace {

double Uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

std::string Format(const char* fmt, double a, double b = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), fmt, a, b);
  return buf;
}

CheckResult Make(std::string criterion, std::string name, std::string expected,
                 double got, double tolerance, bool pass) {
  return {std::move(criterion), std::move(name), std::move(expected), got,
          tolerance, pass};
}

BestResponseOptions ResponseOptions(const VerifyOptions& options) {
  BestResponseOptions br;
  br.seed = options.seed;
  br.threads = options.threads;
  br.oracle.samples = options.oracle_samples;
  br.oracle.seed = options.seed;
  return br;
}

}  // namespace

void ParallelFor(int count, int threads, const std::function<void(int)>& fn) {
  int workers = threads > 0 ? threads
                            : static_cast<int>(std::max(
                                  1u, std::thread::hardware_concurrency()));
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

std::vector<CheckResult> CheckWinnerTable() {
  const std::string criterion = "winner-table";
  int mismatches = 0;
  int bad_flips = 0;
  for (int n = 1; n <= 8; ++n) {
    const auto critical = CriticalRatio(n);
    Winner previous = Winner::kWilma;
    int flips = 0;
    for (int k = 1; k <= 200; ++k) {
      const double rho = k / 200.0;
      const Winner expected =
          critical && rho > *critical ? Winner::kBarney : Winner::kWilma;
      const Winner got = PredictWinner(n, rho);
      mismatches += got != expected;
      if (k > 1 && got != previous) {
        ++flips;
        // The flip must straddle the threshold.
        if (!critical || !((k - 1) / 200.0 <= *critical && *critical < rho)) {
          ++bad_flips;
        }
      }
      previous = got;
    }
    if (flips != (critical ? 1 : 0)) ++bad_flips;
    if (critical) {
      mismatches += PredictWinner(n, *critical) != Winner::kWilma;
      mismatches += PredictWinner(n, std::nextafter(*critical, 2.0)) !=
                    Winner::kBarney;
    }
  }
  return {Make(criterion, "predictions match the threshold rule",
               "0 mismatches", mismatches, 0.0, mismatches == 0),
          Make(criterion, "single flip at the critical ratio",
               "0 misplaced flips", bad_flips, 0.0, bad_flips == 0)};
}

std::vector<CheckResult> CheckFormulaEquivalence(const VerifyOptions& options) {
  const std::string criterion = "formula-geometry";
  struct Case {
    double r;
    int n;
    double x;
    double y;
  };
  std::mt19937_64 rng(options.seed ^ 0xf0f0f0f0ULL);
  std::vector<Case> cases;
  while (static_cast<int>(cases.size()) < options.equivalence_cases) {
    Case c{Uniform(rng, 1.0, std::sqrt(3.0)), 3 + static_cast<int>(rng() % 3),
           Uniform(rng, 0.0, 1.0), 0.0};
    c.y = Uniform(rng, 0.0, c.r);
    if (!(c.y > 0.0) || !(c.y < c.r)) continue;
    if (ComputeStealBreakdown(StripFrame(c.r, c.n), c.x, c.y).out_of_regime) {
      continue;
    }
    cases.push_back(c);
  }

  std::vector<double> exact_error(cases.size());
  std::vector<char> within_sigma(cases.size());
  ParallelFor(static_cast<int>(cases.size()), options.threads, [&](int i) {
    const Case& c = cases[static_cast<size_t>(i)];
    const StripFrame frame(c.r, c.n);
    const Board board = frame.board();
    const auto white = frame.white_sites();
    const Point p{c.x, c.y};
    const double formula = ComputeStealBreakdown(frame, c.x, c.y).total;
    exact_error[static_cast<size_t>(i)] =
        std::abs(formula - StealAreaExact(white, board, p));
    OracleConfig oracle;
    oracle.samples = options.oracle_samples;
    oracle.seed = options.seed + static_cast<uint64_t>(i);
    const double sampled = StealAreaSampled(white, board, p, oracle);
    const double sigma = SamplingSigma(formula, board, oracle.samples);
    within_sigma[static_cast<size_t>(i)] =
        std::abs(formula - sampled) <= 3.0 * sigma;
  });

  const double max_error =
      *std::max_element(exact_error.begin(), exact_error.end());
  const double fraction =
      static_cast<double>(std::count(within_sigma.begin(), within_sigma.end(), 1)) /
      static_cast<double>(cases.size());
  return {Make(criterion, "max |formula - exact clipped steal|", "<= 1e-9",
               max_error, 1e-9, max_error <= 1e-9),
          Make(criterion, "fraction within 3 sigma of sampling oracle",
               ">= 0.99", fraction, 0.99, fraction >= 0.99)};
}

std::vector<CheckResult> CheckFirstPointOnTwoGrid(const VerifyOptions& options) {
  const std::string criterion = "constant-0.2548";
  const Board square(1.0, 1.0);
  const std::vector<Point> white = {{0.25, 0.5}, {0.75, 0.5}};
  const StealResult best =
      BestResponsePoint(white, square, ResponseOptions(options));
  double distance = std::numeric_limits<double>::infinity();
  for (double sx : {0.0, 1.0}) {
    for (double sy : {0.0, 1.0}) {
      const Point image{sx == 0.0 ? best.point.x : 1.0 - best.point.x,
                        sy == 0.0 ? best.point.y : 1.0 - best.point.y};
      distance = std::min(distance, Distance(image, {0.66825, 0.616}));
    }
  }
  const double area = best.exact_area;
  return {Make(criterion, "best single-point steal vs 1x2 grid",
               "in [0.2538, 0.2558]", area, 1e-3,
               area >= 0.2538 && area <= 0.2558),
          Make(criterion, "distance to (0.66825, 0.616) up to symmetry",
               "<= 5e-3", distance, 5e-3, distance <= 5e-3)};
}

std::vector<CheckResult> CheckTwoByTwoRemark(const VerifyOptions& /*options*/) {
  const std::string criterion = "constant-0.136";
  const Board square(1.0, 1.0);
  const double steal = StealAreaExact(TwoByTwoGrid(square), square, {0.5, 0.296});
  const double tally =
      TwoByTwoStrategy(square, {0.5, 0.296}, 1e-3).guaranteed_area;
  return {Make(criterion, "steal of (0.5, 0.296) vs 2x2 grid",
               "in [0.134, 0.138]", steal, 2e-3,
               steal >= 0.134 && steal <= 0.138),
          Make(criterion, "four-point tally, eps = 1e-3", "in [0.505, 0.515]",
               tally, 5e-3, tally >= 0.505 && tally <= 0.515)};
}

std::vector<CheckResult> CheckFourStonesBound() {
  const std::string criterion = "fourstones-bound";
  constexpr double kEps = 1e-3;
  std::vector<CheckResult> results;
  for (double rho : {0.6, 0.8, 1.0}) {
    const Board board(1.0, rho);
    const double first_bound = rho * (1.0 / 8.0 + 1.0 / 128.0);
    const double steal =
        StealAreaExact(TwoByTwoGrid(board), board, {0.5, rho / 4.0});
    results.push_back(Make(criterion,
                           Format("first point steal, rho = %.1f", rho),
                           Format(">= %.9g", first_bound - 1e-9), steal, 1e-9,
                           steal >= first_bound - 1e-9));
    const double total = FourStonesStrategy(board, kEps).guaranteed_area;
    const double bound = FourStonesLowerBound(rho) - 5.0 * kEps;
    results.push_back(Make(criterion,
                           Format("four-point tally, rho = %.1f", rho),
                           Format("> %.9g", bound), total, 5.0 * kEps,
                           total > bound));
  }
  return results;
}

std::vector<CheckResult> CheckWinningInterval(const VerifyOptions& options) {
  const std::string criterion = "winning-interval";
  std::vector<CheckResult> results;
  {
    const double r = 1.5;
    const StripFrame frame(r, 3);
    const double hi = 2.0 * (r - std::numbers::sqrt2);
    const double inside = ComputeStealBreakdown(frame, 0.0, 0.5 * hi).total;
    const double outside = ComputeStealBreakdown(frame, 0.0, 1.2 * hi).total;
    results.push_back(Make(criterion, "r = 1.5, y = 0.5 * 2(r - sqrt 2)",
                           "> 2r = 3", inside, 0.0, inside > 2.0 * r));
    results.push_back(Make(criterion, "r = 1.5, y = 1.2 * 2(r - sqrt 2)",
                           "<= 2r = 3", outside, 0.0, outside <= 2.0 * r));
  }
  std::mt19937_64 rng(options.seed ^ 0x5a5a5a5aULL);
  double worst_derivative = 0.0;
  int outside_interval = 0;
  for (int k = 0; k < 50; ++k) {
    // (sqrt 2, sqrt 3]
    const double r =
        std::sqrt(3.0) - Uniform(rng, 0.0, std::sqrt(3.0) - std::numbers::sqrt2);
    if (!(r > std::numbers::sqrt2)) continue;
    const StripFrame frame(r, 3);
    const double y = YStar(r);
    const double h = 1e-5;
    const double derivative = (ComputeStealBreakdown(frame, 0.0, y + h).total -
                               ComputeStealBreakdown(frame, 0.0, y - h).total) /
                              (2.0 * h);
    worst_derivative = std::max(worst_derivative, std::abs(derivative));
    const auto interval = WinningInterval(r);
    if (!interval || !(y > interval->first && y < interval->second)) {
      ++outside_interval;
    }
  }
  results.push_back(Make(criterion, "max |d total / dy| at y*, 50 random r",
                         "< 1e-6", worst_derivative, 1e-6,
                         worst_derivative < 1e-6));
  results.push_back(Make(criterion, "y* outside the winning interval",
                         "0 of 50", outside_interval, 0.0,
                         outside_interval == 0));
  return results;
}

std::vector<CheckResult> CheckAxisDegeneracy(const VerifyOptions& options) {
  const std::string criterion = "axis-degeneracy";
  std::mt19937_64 rng(options.seed ^ 0x0dd0ULL);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double r = Uniform(rng, 1.0, std::sqrt(3.0));
    double x = Uniform(rng, 0.0, 1.0);
    if (!(x > 0.0)) x = 0.5;
    const StripFrame frame(r, 3);
    const double steal =
        StealAreaExact(frame.white_sites(), frame.board(), {x, 0.0});
    worst = std::max(worst, std::abs(steal - 2.0 * r));
  }
  return {Make(criterion, "max |steal(x, 0) - 2r|, 20 random x", "<= 1e-9",
               worst, 1e-9, worst <= 1e-9)};
}

std::vector<CheckResult> CheckNonGridPunishment(const VerifyOptions& options) {
  const std::string criterion = "non-grid-punishment";
  struct Case {
    Board board;
    std::vector<Point> white;
  };
  std::mt19937_64 rng(options.seed ^ 0xabcdefULL);
  std::vector<Case> cases;
  for (int k = 0; k < options.perturbation_cases; ++k) {
    const int rows = 1 + static_cast<int>(rng() % 3);
    const int cols = 1 + static_cast<int>(rng() % 3);
    const Board board(Uniform(rng, 0.5, 2.0), Uniform(rng, 0.5, 2.0));
    const double cw = board.width() / cols;
    const double ch = board.height() / rows;
    std::vector<Point> white;
    for (int j = 0; j < rows; ++j) {
      for (int i = 0; i < cols; ++i) white.push_back({(i + 0.5) * cw, (j + 0.5) * ch});
    }
    const size_t moved = rng() % white.size();
    const double shift = Uniform(rng, 0.01, 0.1) * std::min(cw, ch);
    const double angle = Uniform(rng, 0.0, 2.0 * std::numbers::pi);
    white[moved] = white[moved] + Point{std::cos(angle), std::sin(angle)} * shift;
    cases.push_back({board, std::move(white)});
  }

  std::vector<double> excess(cases.size());
  std::vector<double> margin(cases.size());
  BestResponseOptions br = ResponseOptions(options);
  br.threads = 1;
  br.oracle.samples = 10'000;
  ParallelFor(static_cast<int>(cases.size()), options.threads, [&](int i) {
    const Case& c = cases[static_cast<size_t>(i)];
    const auto cells = ComputeVoronoi(SiteSet{c.white, {}}, c.board);
    const auto report = FindAsymmetricExploit(cells, c.board);
    excess[static_cast<size_t>(i)] = report ? report->excess : 0.0;
    const StrategyResult play =
        BarneyPlay(c.white, c.board, DefaultEpsilon(c.board), br);
    margin[static_cast<size_t>(i)] =
        play.guaranteed_area - 0.5 * c.board.area();
  });
  const double min_excess = *std::min_element(excess.begin(), excess.end());
  const double min_margin = *std::min_element(margin.begin(), margin.end());
  return {Make(criterion, "min exploit excess over perturbed grids", "> 0",
               min_excess, 0.0, min_excess > 0.0),
          Make(criterion, "min Barney margin over half the board", "> 0",
               min_margin, 0.0, min_margin > 0.0)};
}

std::vector<CheckGroup> ReproductionCheckGroups() {
  return {
      {"winner-table", [](const VerifyOptions&) { return CheckWinnerTable(); }},
      {"formula-geometry", CheckFormulaEquivalence},
      {"constant-0.2548", CheckFirstPointOnTwoGrid},
      {"constant-0.136", CheckTwoByTwoRemark},
      {"fourstones-bound",
       [](const VerifyOptions&) { return CheckFourStonesBound(); }},
      {"winning-interval", CheckWinningInterval},
      {"axis-degeneracy", CheckAxisDegeneracy},
      {"non-grid-punishment", CheckNonGridPunishment},
  };
}

std::vector<CheckResult> RunReproductionChecks(const VerifyOptions& options) {
  std::vector<CheckResult> all;
  for (const CheckGroup& group : ReproductionCheckGroups()) {
    auto results = group.run(options);
    all.insert(all.end(), results.begin(), results.end());
  }
  return all;
}

Json ToJson(const std::vector<CheckResult>& results) {
  Json out = Json::array();
  for (const CheckResult& r : results) {
    out.push_back({{"criterion", r.criterion},
                   {"name", r.name},
                   {"expected", r.expected},
                   {"got", r.got},
                   {"tolerance", r.tolerance},
                   {"pass", r.pass}});
  }
  return out;
}

std::string FormatTable(const std::vector<CheckResult>& results) {
  std::string out;
  char line[512];
  std::snprintf(line, sizeof(line), "%-4s  %-20s  %-48s  %-26s  %-16s  %s\n",
                "", "criterion", "check", "expected", "got", "tolerance");
  out += line;
  for (const CheckResult& r : results) {
    std::snprintf(line, sizeof(line), "%-4s  %-20s  %-48s  %-26s  %-16.9g  %.3g\n",
                  r.pass ? "PASS" : "FAIL", r.criterion.c_str(), r.name.c_str(),
                  r.expected.c_str(), r.got, r.tolerance);
    out += line;
  }
  return out;
}

}  // namespace vgame
