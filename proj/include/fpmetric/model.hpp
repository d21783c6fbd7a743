#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fpmetric {

/// Invalid metric configuration (non-positive c0, bad norm order).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Match outcome from team-1's perspective, ordinal: Win > Draw > Loss.
enum class Outcome { Loss = 0, Draw = 1, Win = 2 };

constexpr int outcome_rank(Outcome o) { return static_cast<int>(o); }

constexpr char outcome_label(Outcome o) {
  switch (o) {
    case Outcome::Win: return 'W';
    case Outcome::Draw: return 'D';
    default: return 'L';
  }
}

/// Monotone goal-count transforms. Anscombe and Freeman-Tukey stabilize
/// the variance of Poisson counts.
enum class Transform { Identity, Anscombe, FreemanTukey };

enum class PenaltyScheme { Symmetric, Asymmetric };

/// Exact score of one match; g1 is team-1 (home) goals.
struct Score {
  int g1 = 0;
  int g2 = 0;

  friend constexpr bool operator==(const Score&, const Score&) = default;
};

/// Goals above this are rejected at parse time as implausible input.
inline constexpr int kMaxParsedGoals = 99;

inline std::optional<int> parse_goals(std::string_view text) {
  if (text.empty() || text.size() > 2) return std::nullopt;
  int value = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    value = value * 10 + (c - '0');
  }
  if (value > kMaxParsedGoals) return std::nullopt;
  return value;
}

inline std::string format_score(const Score& s) {
  return std::to_string(s.g1) + "-" + std::to_string(s.g2);
}

/// Parses "G1-G2". Returns nullopt on malformed input or goals > 99.
inline std::optional<Score> parse_score(std::string_view text) {
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) return std::nullopt;
  const auto a = parse_goals(text.substr(0, dash));
  const auto b = parse_goals(text.substr(dash + 1));
  if (!a || !b) return std::nullopt;
  return Score{*a, *b};
}

/// Knobs of the penalty criterion. Defaults reproduce the reference
/// configuration: Anscombe transform, Euclidean norm, c0 = 1, symmetric
/// category penalties.
struct MetricConfig {
  double c0 = 1.0;
  double norm_order = 2.0;
  Transform transform = Transform::Anscombe;
  PenaltyScheme scheme = PenaltyScheme::Symmetric;

  friend constexpr bool operator==(const MetricConfig&, const MetricConfig&) = default;
};

/// Throws ConfigError if c0 is not positive or the norm order is not a
/// finite real >= 1. Returns the config unchanged otherwise.
inline MetricConfig validate_config(const MetricConfig& config) {
  if (!(config.c0 > 0.0) || !std::isfinite(config.c0))
    throw ConfigError("NonPositiveC0: c0 must be a positive real, got " +
                      std::to_string(config.c0));
  if (!(config.norm_order >= 1.0) || !std::isfinite(config.norm_order))
    throw ConfigError("BadNormOrder: norm order must be a finite real >= 1, got " +
                      std::to_string(config.norm_order));
  return config;
}

/// The two penalty components and their sum for one actual/forecast pair.
struct PenaltyBreakdown {
  double c_term = 0.0;  // category penalty, multiple of c0
  double d_term = 0.0;  // normalized distance, in [0, 1]
  double fp = 0.0;      // c_term + d_term
};

/// One forecast of one match; (match_id, forecaster_id) is unique
/// within a dataset.
struct MatchRecord {
  std::string match_id;
  std::string forecaster_id;
  Score actual;
  Score forecast;
};

}  // namespace fpmetric
