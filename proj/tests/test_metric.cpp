#include <catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "fpmetric/metric.hpp"
#include "fpmetric/model.hpp"

using namespace fpmetric;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<Score> grid_scores(int grid_max) {
  std::vector<Score> out;
  for (int g1 = 0; g1 <= grid_max; ++g1)
    for (int g2 = 0; g2 <= grid_max; ++g2) out.push_back(Score{g1, g2});
  return out;
}

}  // namespace

TEST_CASE("classify follows the goal comparison") {
  CHECK(classify(Score{2, 1}) == Outcome::Win);
  CHECK(classify(Score{0, 0}) == Outcome::Draw);
  CHECK(classify(Score{0, 1}) == Outcome::Loss);
  CHECK(classify(Score{5, 5}) == Outcome::Draw);
}

TEST_CASE("category penalty tables") {
  CHECK(category_penalty(Outcome::Win, Outcome::Win, PenaltyScheme::Symmetric, 1.0) == 0.0);
  CHECK(category_penalty(Outcome::Win, Outcome::Draw, PenaltyScheme::Symmetric, 1.0) == 1.0);
  CHECK(category_penalty(Outcome::Win, Outcome::Loss, PenaltyScheme::Symmetric, 0.5) == 1.0);
  // Asymmetric multipliers follow the 3/1/0 point gaps.
  CHECK(category_penalty(Outcome::Win, Outcome::Loss, PenaltyScheme::Asymmetric, 1.0) == 3.0);
  CHECK(category_penalty(Outcome::Win, Outcome::Draw, PenaltyScheme::Asymmetric, 1.0) == 2.0);
  CHECK(category_penalty(Outcome::Draw, Outcome::Loss, PenaltyScheme::Asymmetric, 1.0) == 1.0);
  CHECK(category_penalty(Outcome::Draw, Outcome::Draw, PenaltyScheme::Asymmetric, 1.0) == 0.0);

  // Both schemes are symmetric in their arguments.
  for (Outcome a : {Outcome::Loss, Outcome::Draw, Outcome::Win})
    for (Outcome f : {Outcome::Loss, Outcome::Draw, Outcome::Win})
      for (PenaltyScheme s : {PenaltyScheme::Symmetric, PenaltyScheme::Asymmetric})
        CHECK(category_penalty(a, f, s, 1.3) == category_penalty(f, a, s, 1.3));
}

TEST_CASE("goal transforms") {
  const auto ans = transform_goals(Score{0, 0}, Transform::Anscombe);
  CHECK_THAT(ans[0], WithinAbs(1.224744871391589, 1e-12));  // 2*sqrt(3/8)
  CHECK_THAT(ans[1], WithinAbs(1.224744871391589, 1e-12));

  const auto ft = transform_goals(Score{0, 0}, Transform::FreemanTukey);
  CHECK_THAT(ft[0], WithinAbs(1.0, 1e-15));

  const auto id = transform_goals(Score{2, 1}, Transform::Identity);
  CHECK(id[0] == 2.0);
  CHECK(id[1] == 1.0);
}

TEST_CASE("minkowski norm") {
  CHECK_THAT(minkowski_norm({3.0, 4.0}, 2.0), WithinAbs(5.0, 1e-12));
  CHECK_THAT(minkowski_norm({3.0, 4.0}, 1.0), WithinAbs(7.0, 1e-12));
  CHECK_THAT(minkowski_norm({-1.0, 1.0}, 2.0), WithinAbs(1.4142135623730951, 1e-12));
  CHECK(minkowski_norm({0.0, 0.0}, 2.0) == 0.0);
}

TEST_CASE("normalized distance reference values") {
  CHECK_THAT(normalized_distance(Score{2, 1}, Score{0, 0}, Transform::Anscombe, 2.0),
             WithinAbs(0.387, 5e-4));
  CHECK_THAT(normalized_distance(Score{2, 1}, Score{0, 0}, Transform::Anscombe, 1.0),
             WithinAbs(0.378, 5e-4));
  CHECK_THAT(normalized_distance(Score{3, 0}, Score{0, 3}, Transform::Anscombe, 1.0),
             WithinAbs(0.500, 5e-4));
  CHECK(normalized_distance(Score{2, 1}, Score{2, 1}, Transform::Anscombe, 2.0) == 0.0);
  // Degenerate origin behavior with the identity transform.
  CHECK_THAT(normalized_distance(Score{0, 0}, Score{3, 3}, Transform::Identity, 2.0),
             WithinAbs(1.0, 1e-15));
  // Zero denominator only with identity and both scores 0-0.
  CHECK(normalized_distance(Score{0, 0}, Score{0, 0}, Transform::Identity, 2.0) == 0.0);
}

TEST_CASE("forecast penalty reference values") {
  const MetricConfig config{};
  auto pb = forecast_penalty(Score{2, 1}, Score{0, 1}, config);
  CHECK_THAT(pb.fp, WithinAbs(2.285, 5e-4));
  CHECK(pb.c_term == 2.0);
  CHECK(pb.fp == pb.c_term + pb.d_term);

  pb = forecast_penalty(Score{1, 1}, Score{2, 2}, config);
  CHECK_THAT(pb.fp, WithinAbs(0.136, 5e-4));

  MetricConfig l1 = config;
  l1.norm_order = 1.0;
  CHECK_THAT(forecast_penalty(Score{2, 1}, Score{1, 2}, l1).fp, WithinAbs(2.136, 5e-4));

  CHECK(forecast_penalty(Score{4, 2}, Score{4, 2}, config).fp == 0.0);
}

TEST_CASE("distance properties on the exhaustive grid") {
  const auto scores = grid_scores(6);
  for (Transform t : {Transform::Identity, Transform::Anscombe, Transform::FreemanTukey})
    for (double r : {1.0, 1.5, 2.0, 3.0})
      for (const auto& a : scores)
        for (const auto& f : scores) {
          const double d = normalized_distance(a, f, t, r);
          REQUIRE(d >= 0.0);
          REQUIRE(d <= 1.0);
          REQUIRE_THAT(normalized_distance(f, a, t, r), WithinAbs(d, 1e-12));
          // Identity of indiscernibles: monotone transforms make
          // transform(A) = transform(F) equivalent to A = F.
          REQUIRE((d == 0.0) == (a == f));
          // Team relabeling: swapping both scores' components leaves D alone.
          REQUIRE_THAT(normalized_distance(Score{a.g2, a.g1}, Score{f.g2, f.g1}, t, r),
                       WithinAbs(d, 1e-12));
        }
}

TEST_CASE("FP bounds and swap symmetry on the grid") {
  const auto scores = grid_scores(6);
  for (PenaltyScheme scheme : {PenaltyScheme::Symmetric, PenaltyScheme::Asymmetric})
    for (double c0 : {0.5, 1.0, 2.0}) {
      MetricConfig config{};
      config.scheme = scheme;
      config.c0 = c0;
      const double bound = (scheme == PenaltyScheme::Symmetric ? 2.0 : 3.0) * c0 + 1.0;
      for (const auto& a : scores)
        for (const auto& f : scores) {
          const auto pb = forecast_penalty(a, f, config);
          REQUIRE(pb.fp >= 0.0);
          REQUIRE(pb.fp <= bound);
          REQUIRE_THAT(forecast_penalty(f, a, config).fp, WithinAbs(pb.fp, 1e-12));
        }
    }
}

TEST_CASE("symmetric FP is invariant under simultaneous team relabeling") {
  const auto scores = grid_scores(5);
  const MetricConfig config{};
  for (const auto& a : scores)
    for (const auto& f : scores)
      REQUIRE_THAT(forecast_penalty(Score{a.g2, a.g1}, Score{f.g2, f.g1}, config).fp,
                   WithinAbs(forecast_penalty(a, f, config).fp, 1e-12));
}

TEST_CASE("origin penalty grows with the draw score under Anscombe") {
  double prev = 0.0;
  for (int x = 1; x <= 10; ++x) {
    const double d = normalized_distance(Score{0, 0}, Score{x, x}, Transform::Anscombe, 2.0);
    CHECK(d > prev);
    prev = d;
    CHECK(normalized_distance(Score{0, 0}, Score{x, x}, Transform::Identity, 2.0) == 1.0);
  }
  CHECK_THAT(normalized_distance(Score{0, 0}, Score{1, 1}, Transform::Anscombe, 2.0),
             WithinAbs(0.314, 5e-4));
  CHECK_THAT(normalized_distance(Score{0, 0}, Score{2, 2}, Transform::Anscombe, 2.0),
             WithinAbs(0.431, 5e-4));
  CHECK_THAT(normalized_distance(Score{0, 0}, Score{3, 3}, Transform::Anscombe, 2.0),
             WithinAbs(0.500, 5e-4));
}

TEST_CASE("mean forecast penalty") {
  const MetricConfig config{};
  const std::vector<std::pair<Score, Score>> pairs = {{{2, 1}, {3, 2}}, {{2, 1}, {0, 0}}};
  CHECK_THAT(mean_forecast_penalty(pairs, config), WithinAbs(0.7480334325504128, 1e-9));

  const std::vector<std::pair<Score, Score>> perfect(7, {{1, 0}, {1, 0}});
  CHECK(mean_forecast_penalty(perfect, config) == 0.0);

  CHECK_THROWS_AS(mean_forecast_penalty(std::vector<std::pair<Score, Score>>{}, config),
                  DataError);
}

TEST_CASE("MFP over concatenated datasets is the size-weighted average") {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> goals(0, 6);
  const MetricConfig config{};
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::pair<Score, Score>> a, b;
    const int na = 1 + trial, nb = 3 + 2 * trial;
    for (int i = 0; i < na; ++i)
      a.push_back({{goals(gen), goals(gen)}, {goals(gen), goals(gen)}});
    for (int i = 0; i < nb; ++i)
      b.push_back({{goals(gen), goals(gen)}, {goals(gen), goals(gen)}});
    auto both = a;
    both.insert(both.end(), b.begin(), b.end());
    const double expected = (na * mean_forecast_penalty(a, config) +
                             nb * mean_forecast_penalty(b, config)) /
                            (na + nb);
    REQUIRE_THAT(mean_forecast_penalty(both, config), WithinAbs(expected, 1e-12));
  }
}

TEST_CASE("smape reference values and errors") {
  CHECK(smape(std::vector<double>{2, 1}, std::vector<double>{2, 1}) == 0.0);
  CHECK_THAT(smape(std::vector<double>{2}, std::vector<double>{0}), WithinAbs(1.0, 1e-15));
  CHECK_THAT(smape(std::vector<double>{2, 2}, std::vector<double>{1, 3}),
             WithinAbs(0.2666666666666667, 1e-12));
  // 0/0 terms count as perfect agreement.
  CHECK(smape(std::vector<double>{0, 0}, std::vector<double>{0, 0}) == 0.0);
  CHECK_THROWS_AS(smape(std::vector<double>{}, std::vector<double>{}), DataError);
  CHECK_THROWS_AS(smape(std::vector<double>{1}, std::vector<double>{1, 2}), DataError);
}

TEST_CASE("smape matches the 1-D identity/L1 distance mean") {
  std::mt19937 gen(99);
  std::uniform_int_distribution<int> value(1, 20);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 17;
    std::vector<double> actuals, forecasts;
    double dist_mean = 0.0;
    for (int i = 0; i < n; ++i) {
      const int a = value(gen), f = value(gen);
      actuals.push_back(a);
      forecasts.push_back(f);
      // Embed each 1-D pair on one axis; r=1 identity distance reduces to
      // |a-f| / (|a|+|f|).
      dist_mean += normalized_distance(Score{a, 0}, Score{f, 0}, Transform::Identity, 1.0);
    }
    dist_mean /= n;
    REQUIRE_THAT(smape(actuals, forecasts), WithinAbs(dist_mean, 1e-12));
  }
}
