#pragma once

#include <cmath>
#include <cstdio>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fpmetric/analysis.hpp"
#include "fpmetric/metric.hpp"
#include "fpmetric/model.hpp"

namespace fpmetric {

struct SimError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// SplitMix64 (Steele, Lea & Flood 2014). Splittable: per-match
/// substreams are derived from (seed, match index, stream tag), so
/// parallel generation matches sequential output.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static SplitMix64 substream(std::uint64_t seed, std::uint64_t index,
                              std::uint64_t stream = 0) {
    return SplitMix64(mix(seed ^ mix(index * 0x9E3779B97F4A7C15ULL + stream + 1)));
  }

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// Uniform draw in [0, 1).
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

inline constexpr double kMaxPoissonLambda = 30.0;

/// Poisson draw via CDF inversion by sequential search on one uniform.
/// Exact for the soccer range; lambda above 30 is rejected.
inline int sample_poisson(double lambda, SplitMix64& rng) {
  if (!(lambda > 0.0) || lambda > kMaxPoissonLambda)
    throw SimError("LambdaOutOfRange: lambda must be in (0, " +
                   std::to_string(kMaxPoissonLambda) + "], got " + std::to_string(lambda));
  const double u = rng.next_double();
  double p = std::exp(-lambda);
  double cum = p;
  int k = 0;
  // u < 1, so the loop terminates; the cap guards against rounding at the
  // extreme tail.
  while (u >= cum && k < 400) {
    ++k;
    p *= lambda / k;
    cum += p;
  }
  return k;
}

struct SimConfig {
  double lambda1 = 1.5;   // team-1 goal mean
  double lambda2 = 1.1;
  int n_matches = 64;
  std::uint64_t seed = 0;
};

inline void validate_sim_config(const SimConfig& sim) {
  if (!(sim.lambda1 > 0.0) || !(sim.lambda2 > 0.0))
    throw SimError("lambda1 and lambda2 must be positive");
  if (sim.n_matches < 1) throw SimError("n_matches must be >= 1");
}

// Stream tags for substream derivation; actuals and forecasters never
// share draws.
inline constexpr std::uint64_t kStreamActual = 0;
inline constexpr std::uint64_t kStreamForecast = 1;

/// n_matches scores with components drawn independently from
/// Poisson(lambda1), Poisson(lambda2); reproducible from seed.
inline std::vector<Score> generate_matches(const SimConfig& sim) {
  validate_sim_config(sim);
  std::vector<Score> out;
  out.reserve(static_cast<std::size_t>(sim.n_matches));
  for (int i = 0; i < sim.n_matches; ++i) {
    auto rng = SplitMix64::substream(sim.seed, static_cast<std::uint64_t>(i), kStreamActual);
    const int g1 = sample_poisson(sim.lambda1, rng);
    const int g2 = sample_poisson(sim.lambda2, rng);
    out.push_back(Score{g1, g2});
  }
  return out;
}

/// Always forecasts the same score.
struct ConstantForecaster {
  Score score;
};

/// Draws each component from Poisson(lambda * exp(bias)).
struct PoissonForecaster {
  double bias1 = 0.0;
  double bias2 = 0.0;
};

/// Forecasts (round(lambda1), round(lambda2)).
struct RoundedMeanForecaster {};

using ForecasterModel =
    std::variant<ConstantForecaster, PoissonForecaster, RoundedMeanForecaster>;

inline std::string forecaster_name(const ForecasterModel& model) {
  struct Visitor {
    std::string operator()(const ConstantForecaster& f) const {
      return "constant:" + format_score(f.score);
    }
    std::string operator()(const PoissonForecaster& f) const {
      // '/' keeps the name CSV-safe.
      char buf[64];
      std::snprintf(buf, sizeof buf, "poisson:%g/%g", f.bias1, f.bias2);
      return buf;
    }
    std::string operator()(const RoundedMeanForecaster&) const { return "rounded-mean"; }
  };
  return std::visit(Visitor{}, model);
}

inline Score apply_forecaster(const ForecasterModel& model, const SimConfig& sim,
                              std::uint64_t match_index, std::uint64_t forecaster_index) {
  struct Visitor {
    const SimConfig& sim;
    std::uint64_t match_index;
    std::uint64_t forecaster_index;

    Score operator()(const ConstantForecaster& f) const { return f.score; }
    Score operator()(const PoissonForecaster& f) const {
      auto rng = SplitMix64::substream(sim.seed, match_index,
                                      kStreamForecast + forecaster_index);
      const int g1 = sample_poisson(sim.lambda1 * std::exp(f.bias1), rng);
      const int g2 = sample_poisson(sim.lambda2 * std::exp(f.bias2), rng);
      return Score{g1, g2};
    }
    Score operator()(const RoundedMeanForecaster&) const {
      return Score{static_cast<int>(std::lround(sim.lambda1)),
                   static_cast<int>(std::lround(sim.lambda2))};
    }
  };
  return std::visit(Visitor{sim, match_index, forecaster_index}, model);
}

/// Aggregate criteria for one forecaster over a simulated competition.
struct ForecasterResult {
  std::string name;
  double mfp = 0.0;
  double mean_se = 0.0;
  double mean_mad = 0.0;
  double hit_rate = 0.0;  // fraction of matches with the W/D/L category right
};

/// Simulates the matches once and scores every forecaster on them.
/// Deterministic given (sim, forecasters, config).
inline std::vector<ForecasterResult> run_experiment(
    const SimConfig& sim, const std::vector<ForecasterModel>& forecasters,
    const MetricConfig& config) {
  if (forecasters.empty()) throw SimError("run_experiment needs at least one forecaster");
  validate_config(config);
  const auto actuals = generate_matches(sim);

  std::vector<ForecasterResult> results;
  results.reserve(forecasters.size());
  for (std::size_t fi = 0; fi < forecasters.size(); ++fi) {
    ForecasterResult res;
    res.name = forecaster_name(forecasters[fi]);
    for (std::size_t mi = 0; mi < actuals.size(); ++mi) {
      const Score forecast = apply_forecaster(forecasters[fi], sim,
                                              static_cast<std::uint64_t>(mi),
                                              static_cast<std::uint64_t>(fi));
      res.mfp += forecast_penalty(actuals[mi], forecast, config).fp;
      res.mean_se += squared_error(actuals[mi], forecast);
      res.mean_mad += absolute_error(actuals[mi], forecast);
      if (classify(actuals[mi]) == classify(forecast)) res.hit_rate += 1.0;
    }
    const double n = static_cast<double>(actuals.size());
    res.mfp /= n;
    res.mean_se /= n;
    res.mean_mad /= n;
    res.hit_rate /= n;
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace fpmetric
