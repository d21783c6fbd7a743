// Command-line front end: reference table, dataset evaluation, overlap and
// metric-axiom reports, and a Poisson competition simulator.
//
// Exit codes: 0 success (and "separated" for overlap), 1 overlap detected,
// 2 input error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fpmetric/analysis.hpp"
#include "fpmetric/dataset.hpp"
#include "fpmetric/metric.hpp"
#include "fpmetric/model.hpp"
#include "fpmetric/report.hpp"
#include "fpmetric/simulate.hpp"

namespace {

struct MetricFlags {
  double c0 = 1.0;
  std::string transform = "anscombe";
  double norm_order = 2.0;
  std::string scheme = "symmetric";
  std::string format = "text";
  int precision = 3;
};

void add_metric_flags(CLI::App* cmd, MetricFlags& flags) {
  cmd->add_option("--c0", flags.c0, "Category penalty unit (default 1.0)");
  cmd->add_option("--transform", flags.transform, "identity|anscombe|freeman-tukey")
      ->check(CLI::IsMember({"identity", "anscombe", "freeman-tukey"}));
  cmd->add_option("--norm-order", flags.norm_order, "Minkowski norm order r (default 2.0)");
  cmd->add_option("--scheme", flags.scheme, "symmetric|asymmetric")
      ->check(CLI::IsMember({"symmetric", "asymmetric"}));
}

void add_output_flags(CLI::App* cmd, MetricFlags& flags) {
  cmd->add_option("--format", flags.format, "csv|json|text (default text)")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  cmd->add_option("--precision", flags.precision, "Display decimals (default 3)")
      ->check(CLI::Range(0, 15));
}

fpmetric::MetricConfig to_config(const MetricFlags& flags) {
  fpmetric::MetricConfig config;
  config.c0 = flags.c0;
  config.norm_order = flags.norm_order;
  if (flags.transform == "identity") config.transform = fpmetric::Transform::Identity;
  else if (flags.transform == "freeman-tukey") config.transform = fpmetric::Transform::FreemanTukey;
  else config.transform = fpmetric::Transform::Anscombe;
  config.scheme = flags.scheme == "asymmetric" ? fpmetric::PenaltyScheme::Asymmetric
                                               : fpmetric::PenaltyScheme::Symmetric;
  return fpmetric::validate_config(config);
}

// Forecaster spec strings: constant:G1-G2 | poisson[:B1,B2] | rounded-mean
fpmetric::ForecasterModel parse_forecaster(const std::string& spec) {
  if (spec == "rounded-mean") return fpmetric::RoundedMeanForecaster{};
  if (spec.rfind("constant:", 0) == 0) {
    const auto score = fpmetric::parse_score(spec.substr(9));
    if (!score) throw CLI::ValidationError("--forecaster", "bad score in `" + spec + "`");
    return fpmetric::ConstantForecaster{*score};
  }
  if (spec == "poisson") return fpmetric::PoissonForecaster{};
  if (spec.rfind("poisson:", 0) == 0) {
    const auto body = spec.substr(8);
    const auto comma = body.find(',');
    if (comma == std::string::npos)
      throw CLI::ValidationError("--forecaster", "expected poisson:B1,B2 in `" + spec + "`");
    try {
      return fpmetric::PoissonForecaster{std::stod(body.substr(0, comma)),
                                         std::stod(body.substr(comma + 1))};
    } catch (const std::exception&) {
      throw CLI::ValidationError("--forecaster", "bad bias in `" + spec + "`");
    }
  }
  throw CLI::ValidationError("--forecaster", "unknown forecaster `" + spec + "`");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-score forecast penalty toolkit"};
  app.require_subcommand(1);

  MetricFlags flags;

  auto* table1 = app.add_subcommand(
      "table1", "Print the reference penalty table (Anscombe, c0=1, symmetric)");

  auto* evaluate = app.add_subcommand("evaluate", "Score a CSV forecast dataset");
  std::string input_path;
  evaluate->add_option("input", input_path, "Dataset CSV path")->required();
  add_metric_flags(evaluate, flags);
  add_output_flags(evaluate, flags);

  auto* overlap = app.add_subcommand(
      "overlap", "Check FP separation between category levels on a score grid");
  int grid_max = 10;
  overlap->add_option("--grid-max", grid_max, "Grid bound (default 10)")
      ->check(CLI::Range(0, 50));
  add_metric_flags(overlap, flags);
  add_output_flags(overlap, flags);

  auto* axioms = app.add_subcommand(
      "axioms", "Scan metric axioms of the distance term on a score grid");
  int axiom_grid_max = 5;
  axioms->add_option("--grid-max", axiom_grid_max, "Grid bound (default 5)")
      ->check(CLI::Range(0, 8));
  add_metric_flags(axioms, flags);
  add_output_flags(axioms, flags);

  auto* simulate = app.add_subcommand(
      "simulate", "Simulate a Poisson competition and compare forecasters");
  fpmetric::SimConfig sim;
  std::vector<std::string> forecaster_specs;
  simulate->add_option("--n", sim.n_matches, "Number of matches (default 64)")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim.seed, "RNG seed (default 0)");
  simulate->add_option("--lambda1", sim.lambda1, "Team-1 goal mean (default 1.5)");
  simulate->add_option("--lambda2", sim.lambda2, "Team-2 goal mean (default 1.1)");
  simulate->add_option("--forecaster", forecaster_specs,
                       "constant:G1-G2 | poisson[:B1,B2] | rounded-mean (repeatable)");
  add_metric_flags(simulate, flags);
  add_output_flags(simulate, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (table1->parsed()) {
      std::cout << fpmetric::render_reference_table();
      return 0;
    }

    if (evaluate->parsed()) {
      const auto records = fpmetric::read_dataset_file(input_path);
      const auto eval = fpmetric::evaluate_dataset(records, to_config(flags));
      if (flags.format == "csv")
        std::cout << fpmetric::render_evaluation_csv(eval, flags.precision);
      else if (flags.format == "json")
        std::cout << fpmetric::evaluation_to_json(eval, flags.precision).dump(2) << "\n";
      else
        std::cout << fpmetric::render_evaluation_text(eval, flags.precision);
      return 0;
    }

    if (overlap->parsed()) {
      const auto report = fpmetric::overlap_report(to_config(flags), grid_max);
      if (flags.format == "json")
        std::cout << fpmetric::overlap_to_json(report).dump(2) << "\n";
      else
        std::cout << fpmetric::render_overlap_text(report);
      return report.fully_separated() ? 0 : 1;
    }

    if (axioms->parsed()) {
      const auto config = to_config(flags);
      const auto report = fpmetric::metric_axiom_report(config.transform,
                                                        config.norm_order, axiom_grid_max);
      if (flags.format == "json")
        std::cout << fpmetric::axiom_to_json(report).dump(2) << "\n";
      else
        std::cout << fpmetric::render_axiom_text(report);
      return 0;
    }

    if (simulate->parsed()) {
      std::vector<fpmetric::ForecasterModel> forecasters;
      if (forecaster_specs.empty()) {
        forecasters = {fpmetric::RoundedMeanForecaster{}, fpmetric::PoissonForecaster{},
                       fpmetric::ConstantForecaster{fpmetric::Score{1, 1}}};
      } else {
        for (const auto& spec : forecaster_specs)
          forecasters.push_back(parse_forecaster(spec));
      }
      const auto results =
          fpmetric::run_experiment(sim, forecasters, to_config(flags));
      if (flags.format == "csv")
        std::cout << fpmetric::render_experiment_csv(results, flags.precision);
      else if (flags.format == "json")
        std::cout << fpmetric::experiment_to_json(results).dump(2) << "\n";
      else
        std::cout << fpmetric::render_experiment_text(results, flags.precision);
      return 0;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
