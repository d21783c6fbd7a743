#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fmt/format.h>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpmetric/analysis.hpp"
#include "fpmetric/dataset.hpp"
#include "fpmetric/metric.hpp"
#include "fpmetric/model.hpp"
#include "fpmetric/simulate.hpp"

namespace fpmetric {

/// Round half away from zero at the given decimal precision. Display
/// rounding only; computations stay in full precision.
inline double round_half_up(double value, int precision) {
  const double scale = std::pow(10.0, precision);
  return std::copysign(std::floor(std::abs(value) * scale + 0.5) / scale, value);
}

inline std::string format_fixed(double value, int precision) {
  return fmt::format("{:.{}f}", round_half_up(value, precision), precision);
}

// ---------------------------------------------------------------------------
// Reference table

/// The 18 canonical actual/forecast pairs, grouped by W/D/L doublet.
inline const std::vector<std::pair<Score, Score>>& reference_pairs() {
  static const std::vector<std::pair<Score, Score>> pairs = {
      {{0, 0}, {1, 1}}, {{0, 0}, {2, 2}}, {{0, 0}, {3, 3}}, {{1, 1}, {2, 2}},
      {{2, 1}, {1, 0}}, {{2, 1}, {3, 2}}, {{2, 1}, {4, 3}}, {{2, 1}, {3, 1}},
      {{2, 1}, {4, 2}}, {{2, 1}, {0, 0}}, {{2, 1}, {1, 1}}, {{2, 1}, {2, 2}},
      {{2, 1}, {0, 1}}, {{2, 1}, {1, 2}}, {{2, 1}, {2, 3}}, {{2, 1}, {1, 3}},
      {{2, 0}, {0, 2}}, {{3, 0}, {0, 3}}};
  return pairs;
}

/// Renders the canonical penalty table: Anscombe transform, c0 = 1,
/// symmetric scheme, L1 and L2 distances side by side.
inline std::string render_reference_table() {
  std::string out = fmt::format("{:>3} {:>3} {:>3} {:>3} {:>6} {:>6} {:>2} {:>6} {:>6}\n",
                                "GA1", "GA2", "GF1", "GF2", "D1", "D2", "C", "FP1", "FP2");
  const MetricConfig config{};  // defaults
  for (const auto& [actual, forecast] : reference_pairs()) {
    const double d1 = normalized_distance(actual, forecast, config.transform, 1.0);
    const double d2 = normalized_distance(actual, forecast, config.transform, 2.0);
    const int c = category_multiplier(classify(actual), classify(forecast), config.scheme);
    out += fmt::format("{:>3} {:>3} {:>3} {:>3} {:>6} {:>6} {:>2} {:>6} {:>6}\n",
                       actual.g1, actual.g2, forecast.g1, forecast.g2,
                       format_fixed(d1, 3), format_fixed(d2, 3), c,
                       format_fixed(c + d1, 3), format_fixed(c + d2, 3));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dataset evaluation

struct RowResult {
  MatchRecord record;
  Outcome wdl_actual;
  Outcome wdl_forecast;
  PenaltyBreakdown penalty;
};

struct LeaderboardEntry {
  std::string forecaster_id;
  std::size_t n = 0;
  double mfp = 0.0;
};

struct Evaluation {
  std::vector<RowResult> rows;          // input order
  std::vector<LeaderboardEntry> leaderboard;  // ascending MFP, ties by id
};

inline Evaluation evaluate_dataset(const std::vector<MatchRecord>& records,
                                   const MetricConfig& config) {
  validate_config(config);
  if (records.empty()) throw DatasetError("EmptyDataset: no records to evaluate");

  Evaluation eval;
  eval.rows.reserve(records.size());
  std::map<std::string, LeaderboardEntry> by_forecaster;
  for (const auto& rec : records) {
    RowResult row{rec, classify(rec.actual), classify(rec.forecast),
                  forecast_penalty(rec.actual, rec.forecast, config)};
    auto& entry = by_forecaster[rec.forecaster_id];
    entry.forecaster_id = rec.forecaster_id;
    entry.n += 1;
    entry.mfp += row.penalty.fp;
    eval.rows.push_back(std::move(row));
  }
  for (auto& [id, entry] : by_forecaster) {
    entry.mfp /= static_cast<double>(entry.n);
    eval.leaderboard.push_back(entry);
  }
  std::stable_sort(eval.leaderboard.begin(), eval.leaderboard.end(),
                   [](const LeaderboardEntry& a, const LeaderboardEntry& b) {
                     if (a.mfp != b.mfp) return a.mfp < b.mfp;
                     return a.forecaster_id < b.forecaster_id;
                   });
  return eval;
}

inline constexpr const char* kOutputHeader =
    "match_id,forecaster_id,ga1,ga2,gf1,gf2,wdl_actual,wdl_forecast,c,d,fp";

inline std::string render_evaluation_csv(const Evaluation& eval, int precision) {
  std::string out = std::string(kOutputHeader) + "\n";
  for (const auto& row : eval.rows) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n",
                       row.record.match_id, row.record.forecaster_id,
                       row.record.actual.g1, row.record.actual.g2,
                       row.record.forecast.g1, row.record.forecast.g2,
                       outcome_label(row.wdl_actual), outcome_label(row.wdl_forecast),
                       format_fixed(row.penalty.c_term, precision),
                       format_fixed(row.penalty.d_term, precision),
                       format_fixed(row.penalty.fp, precision));
  }
  out += "\nforecaster_id,n,mfp\n";
  for (const auto& entry : eval.leaderboard)
    out += fmt::format("{},{},{}\n", entry.forecaster_id, entry.n,
                       format_fixed(entry.mfp, precision));
  return out;
}

inline nlohmann::json evaluation_to_json(const Evaluation& eval, int precision) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : eval.rows) {
    rows.push_back({{"match_id", row.record.match_id},
                    {"forecaster_id", row.record.forecaster_id},
                    {"ga1", row.record.actual.g1},
                    {"ga2", row.record.actual.g2},
                    {"gf1", row.record.forecast.g1},
                    {"gf2", row.record.forecast.g2},
                    {"wdl_actual", std::string(1, outcome_label(row.wdl_actual))},
                    {"wdl_forecast", std::string(1, outcome_label(row.wdl_forecast))},
                    {"c", row.penalty.c_term},
                    {"d", row.penalty.d_term},
                    {"fp", row.penalty.fp},
                    {"display",
                     {{"c", format_fixed(row.penalty.c_term, precision)},
                      {"d", format_fixed(row.penalty.d_term, precision)},
                      {"fp", format_fixed(row.penalty.fp, precision)}}}});
  }
  nlohmann::json board = nlohmann::json::array();
  for (const auto& entry : eval.leaderboard)
    board.push_back({{"forecaster_id", entry.forecaster_id},
                     {"n", entry.n},
                     {"mfp", entry.mfp},
                     {"display", {{"mfp", format_fixed(entry.mfp, precision)}}}});
  return {{"rows", rows}, {"leaderboard", board}};
}

inline std::string render_evaluation_text(const Evaluation& eval, int precision) {
  const int w = precision + 3;
  std::string out =
      fmt::format("{:<12} {:<14} {:>5} {:>5} {:>3} {:>3} {:>{}} {:>{}} {:>{}}\n",
                  "match_id", "forecaster_id", "act", "fct", "wA", "wF",
                  "c", w, "d", w, "fp", w);
  for (const auto& row : eval.rows) {
    out += fmt::format("{:<12} {:<14} {:>5} {:>5} {:>3} {:>3} {:>{}} {:>{}} {:>{}}\n",
                       row.record.match_id, row.record.forecaster_id,
                       format_score(row.record.actual), format_score(row.record.forecast),
                       outcome_label(row.wdl_actual), outcome_label(row.wdl_forecast),
                       format_fixed(row.penalty.c_term, precision), w,
                       format_fixed(row.penalty.d_term, precision), w,
                       format_fixed(row.penalty.fp, precision), w);
  }
  out += fmt::format("\nLeaderboard (ascending MFP)\n{:<14} {:>6} {:>{}}\n",
                     "forecaster_id", "n", "mfp", w);
  for (const auto& entry : eval.leaderboard)
    out += fmt::format("{:<14} {:>6} {:>{}}\n", entry.forecaster_id, entry.n,
                       format_fixed(entry.mfp, precision), w);
  return out;
}

// ---------------------------------------------------------------------------
// Analysis reports

inline nlohmann::json overlap_to_json(const OverlapReport& report) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& level : report.levels) {
    nlohmann::json entry = {{"multiplier", level.multiplier}, {"count", level.count}};
    if (level.count > 0) {
      entry["fp_min"] = level.fp_min;
      entry["fp_max"] = level.fp_max;
    } else {
      entry["fp_min"] = nullptr;
      entry["fp_max"] = nullptr;
    }
    levels.push_back(std::move(entry));
  }
  return {{"grid_max", report.grid_max},
          {"levels", levels},
          {"separated", report.separated},
          {"fully_separated", report.fully_separated()}};
}

inline std::string render_overlap_text(const OverlapReport& report) {
  std::string out = fmt::format("Overlap report, grid 0..{}\n", report.grid_max);
  for (const auto& level : report.levels) {
    if (level.count == 0) {
      out += fmt::format("  level {}: empty\n", level.multiplier);
    } else {
      out += fmt::format("  level {}: fp in [{}, {}]  ({} pairs)\n", level.multiplier,
                         format_fixed(level.fp_min, 6), format_fixed(level.fp_max, 6),
                         level.count);
    }
  }
  for (std::size_t k = 0; k < report.separated.size(); ++k)
    out += fmt::format("  levels {}/{}: {}\n", k, k + 1,
                       report.separated[k] ? "separated" : "OVERLAP");
  out += fmt::format("fully separated: {}\n", report.fully_separated() ? "yes" : "no");
  return out;
}

inline nlohmann::json axiom_to_json(const MetricAxiomReport& report) {
  return {{"grid_max", report.grid_max},
          {"symmetry_violations", report.symmetry_violations},
          {"identity_violations", report.identity_violations},
          {"triangle_violations", report.triangle_violations},
          {"worst_triangle_slack", report.worst_triangle_slack}};
}

inline std::string render_axiom_text(const MetricAxiomReport& report) {
  return fmt::format(
      "Metric axiom report, grid 0..{}\n"
      "  symmetry violations: {}\n"
      "  identity violations: {}\n"
      "  triangle violations: {}\n"
      "  worst triangle slack: {:.6e}\n",
      report.grid_max, report.symmetry_violations, report.identity_violations,
      report.triangle_violations, report.worst_triangle_slack);
}

// ---------------------------------------------------------------------------
// Simulation output

inline std::string render_experiment_text(const std::vector<ForecasterResult>& results,
                                          int precision) {
  const int w = precision + 5;
  std::string out = fmt::format("{:<24} {:>{}} {:>{}} {:>{}} {:>{}}\n", "forecaster",
                                "mfp", w, "mean_se", w, "mean_mad", w, "hit_rate", w);
  for (const auto& res : results)
    out += fmt::format("{:<24} {:>{}} {:>{}} {:>{}} {:>{}}\n", res.name,
                       format_fixed(res.mfp, precision), w,
                       format_fixed(res.mean_se, precision), w,
                       format_fixed(res.mean_mad, precision), w,
                       format_fixed(res.hit_rate, precision), w);
  return out;
}

inline std::string render_experiment_csv(const std::vector<ForecasterResult>& results,
                                         int precision) {
  std::string out = "forecaster,mfp,mean_se,mean_mad,hit_rate\n";
  for (const auto& res : results)
    out += fmt::format("{},{},{},{},{}\n", res.name, format_fixed(res.mfp, precision),
                       format_fixed(res.mean_se, precision),
                       format_fixed(res.mean_mad, precision),
                       format_fixed(res.hit_rate, precision));
  return out;
}

inline nlohmann::json experiment_to_json(const std::vector<ForecasterResult>& results) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& res : results)
    out.push_back({{"forecaster", res.name},
                   {"mfp", res.mfp},
                   {"mean_se", res.mean_se},
                   {"mean_mad", res.mean_mad},
                   {"hit_rate", res.hit_rate}});
  return out;
}

}  // namespace fpmetric
