#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "fpmetric/metric.hpp"
#include "fpmetric/model.hpp"

namespace fpmetric {

/// Squared error on raw goals, the naive baseline.
inline int squared_error(const Score& actual, const Score& forecast) {
  const int d1 = actual.g1 - forecast.g1;
  const int d2 = actual.g2 - forecast.g2;
  return d1 * d1 + d2 * d2;
}

/// L1 absolute deviation on raw goals.
inline int absolute_error(const Score& actual, const Score& forecast) {
  return std::abs(actual.g1 - forecast.g1) + std::abs(actual.g2 - forecast.g2);
}

/// Observed FP range for one category-mismatch level.
struct LevelRange {
  int multiplier = 0;
  std::size_t count = 0;
  double fp_min = std::numeric_limits<double>::quiet_NaN();
  double fp_max = std::numeric_limits<double>::quiet_NaN();
};

/// FP ranges per category level over an exhaustive score grid, with
/// separation verdicts between consecutive levels. Touching ranges
/// (fp_max(k) == fp_min(k+1)) count as separated.
struct OverlapReport {
  int grid_max = 0;
  std::vector<LevelRange> levels;    // ordered by multiplier
  std::vector<bool> separated;       // separated[k]: level k vs level k+1

  bool fully_separated() const {
    for (bool s : separated)
      if (!s) return false;
    return true;
  }
};

/// Enumerates every actual/forecast pair with goals in 0..grid_max and
/// buckets FP by category-penalty level.
inline OverlapReport overlap_report(const MetricConfig& config, int grid_max = 10) {
  validate_config(config);
  OverlapReport report;
  report.grid_max = grid_max;
  const int n_levels = config.scheme == PenaltyScheme::Symmetric ? 3 : 4;
  report.levels.resize(n_levels);
  for (int m = 0; m < n_levels; ++m) report.levels[m].multiplier = m;

  for (int a1 = 0; a1 <= grid_max; ++a1)
    for (int a2 = 0; a2 <= grid_max; ++a2)
      for (int f1 = 0; f1 <= grid_max; ++f1)
        for (int f2 = 0; f2 <= grid_max; ++f2) {
          const Score actual{a1, a2};
          const Score forecast{f1, f2};
          const int m = category_multiplier(classify(actual), classify(forecast),
                                            config.scheme);
          const double fp = forecast_penalty(actual, forecast, config).fp;
          auto& level = report.levels[m];
          if (level.count == 0) {
            level.fp_min = level.fp_max = fp;
          } else {
            level.fp_min = std::min(level.fp_min, fp);
            level.fp_max = std::max(level.fp_max, fp);
          }
          ++level.count;
        }

  report.separated.resize(n_levels - 1);
  for (int m = 0; m + 1 < n_levels; ++m) {
    const auto& lo = report.levels[m];
    const auto& hi = report.levels[m + 1];
    // An empty level cannot overlap anything.
    report.separated[m] = lo.count == 0 || hi.count == 0 || lo.fp_max <= hi.fp_min;
  }
  return report;
}

/// Exhaustive metric-axiom scan of D over a score grid.
/// worst_triangle_slack = min over triples of D(a,c) + D(c,b) - D(a,b);
/// negative means the triangle inequality fails.
struct MetricAxiomReport {
  int grid_max = 0;
  long symmetry_violations = 0;
  long identity_violations = 0;
  long triangle_violations = 0;
  double worst_triangle_slack = std::numeric_limits<double>::infinity();
};

inline constexpr double kAxiomTolerance = 1e-12;

inline MetricAxiomReport metric_axiom_report(Transform t, double r, int grid_max = 5) {
  MetricAxiomReport report;
  report.grid_max = grid_max;

  const int side = grid_max + 1;
  const int n = side * side;
  std::vector<Score> scores;
  scores.reserve(n);
  for (int g1 = 0; g1 <= grid_max; ++g1)
    for (int g2 = 0; g2 <= grid_max; ++g2) scores.push_back(Score{g1, g2});

  // Precompute the pairwise distance matrix; the triple loop reads it.
  std::vector<double> dist(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      dist[static_cast<std::size_t>(i) * n + j] =
          normalized_distance(scores[i], scores[j], t, r);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double dij = dist[static_cast<std::size_t>(i) * n + j];
      if (std::abs(dij - dist[static_cast<std::size_t>(j) * n + i]) > kAxiomTolerance)
        ++report.symmetry_violations;
      const bool zero = dij <= kAxiomTolerance;
      if (zero != (scores[i] == scores[j])) ++report.identity_violations;
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double dij = dist[static_cast<std::size_t>(i) * n + j];
      for (int k = 0; k < n; ++k) {
        const double slack = dist[static_cast<std::size_t>(i) * n + k] +
                             dist[static_cast<std::size_t>(k) * n + j] - dij;
        report.worst_triangle_slack = std::min(report.worst_triangle_slack, slack);
        if (slack < -kAxiomTolerance) ++report.triangle_violations;
      }
    }
  return report;
}

/// True iff FP prefers the draw forecast (0,0) over the loss forecast
/// (0,1) for an actual win (2,1) — i.e. the config fixes the ordering
/// anomaly that plain squared error exhibits.
inline bool counterexample_check(const MetricConfig& config) {
  validate_config(config);
  const Score actual{2, 1};
  return forecast_penalty(actual, Score{0, 0}, config).fp <
         forecast_penalty(actual, Score{0, 1}, config).fp;
}

}  // namespace fpmetric
