#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fpmetric/model.hpp"

namespace fpmetric {

/// Empty or mismatched input to an aggregate operation.
struct DataError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline Outcome classify(const Score& s) {
  if (s.g1 > s.g2) return Outcome::Win;
  if (s.g1 < s.g2) return Outcome::Loss;
  return Outcome::Draw;
}

/// Category multiplier before scaling by c0. Symmetric: ordinal rank
/// distance (0 same, 1 adjacent, 2 opposite). Asymmetric: absolute
/// difference of FIFA points (W=3, D=1, L=0), giving 0/1/2/3.
inline int category_multiplier(Outcome a, Outcome f, PenaltyScheme scheme) {
  if (scheme == PenaltyScheme::Symmetric)
    return std::abs(outcome_rank(a) - outcome_rank(f));
  constexpr std::array<int, 3> points = {0, 1, 3};  // L, D, W
  return std::abs(points[outcome_rank(a)] - points[outcome_rank(f)]);
}

inline double category_penalty(Outcome a, Outcome f, PenaltyScheme scheme, double c0) {
  return category_multiplier(a, f, scheme) * c0;
}

inline double transform_goal(int g, Transform t) {
  switch (t) {
    case Transform::Anscombe: return 2.0 * std::sqrt(g + 0.375);
    case Transform::FreemanTukey: return std::sqrt(static_cast<double>(g)) + std::sqrt(g + 1.0);
    default: return static_cast<double>(g);
  }
}

inline std::array<double, 2> transform_goals(const Score& s, Transform t) {
  return {transform_goal(s.g1, t), transform_goal(s.g2, t)};
}

/// (|v1|^r + |v2|^r)^(1/r) for finite r >= 1.
inline double minkowski_norm(const std::array<double, 2>& v, double r) {
  const double a = std::abs(v[0]);
  const double b = std::abs(v[1]);
  if (a == 0.0 && b == 0.0) return 0.0;
  return std::pow(std::pow(a, r) + std::pow(b, r), 1.0 / r);
}

/// Normalized Minkowski distance between transformed scores:
/// ||t(A) - t(F)||_r / (||t(A)||_r + ||t(F)||_r), in [0, 1].
/// A zero denominator (Identity transform, both scores 0-0) yields 0:
/// the scores are identical there.
inline double normalized_distance(const Score& actual, const Score& forecast,
                                  Transform t, double r) {
  const auto ta = transform_goals(actual, t);
  const auto tf = transform_goals(forecast, t);
  const double denom = minkowski_norm(ta, r) + minkowski_norm(tf, r);
  if (denom == 0.0) return 0.0;
  const std::array<double, 2> diff = {ta[0] - tf[0], ta[1] - tf[1]};
  return minkowski_norm(diff, r) / denom;
}

/// Per-match forecasting penalty: category term plus normalized distance.
inline PenaltyBreakdown forecast_penalty(const Score& actual, const Score& forecast,
                                         const MetricConfig& config) {
  PenaltyBreakdown out;
  out.c_term = category_penalty(classify(actual), classify(forecast),
                                config.scheme, config.c0);
  out.d_term = normalized_distance(actual, forecast, config.transform, config.norm_order);
  out.fp = out.c_term + out.d_term;
  return out;
}

/// Mean penalty over a set of matches, e.g. one competition.
inline double mean_forecast_penalty(std::span<const std::pair<Score, Score>> pairs,
                                    const MetricConfig& config) {
  if (pairs.empty()) throw DataError("EmptyDataset: mean_forecast_penalty needs n >= 1");
  double sum = 0.0;
  for (const auto& [actual, forecast] : pairs)
    sum += forecast_penalty(actual, forecast, config).fp;
  return sum / static_cast<double>(pairs.size());
}

/// Symmetric mean absolute percent error, the 1-D L1 analogue of the
/// distance term. Terms with |F| + |A| = 0 contribute 0.
inline double smape(std::span<const double> actuals, std::span<const double> forecasts) {
  if (actuals.size() != forecasts.size())
    throw DataError("LengthMismatch: smape inputs differ in length");
  if (actuals.empty()) throw DataError("EmptyDataset: smape needs n >= 1");
  double sum = 0.0;
  for (std::size_t i = 0; i < actuals.size(); ++i) {
    const double denom = std::abs(forecasts[i]) + std::abs(actuals[i]);
    if (denom > 0.0) sum += std::abs(forecasts[i] - actuals[i]) / denom;
  }
  return sum / static_cast<double>(actuals.size());
}

}  // namespace fpmetric
