// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "ncic/channel.hpp"
#include "ncic/gdof.hpp"
#include "ncic/polytope.hpp"
#include "ncic/rates.hpp"
#include "oracles.hpp"

using namespace ncic;

TEST_CASE("exponential integral matches the independent oracle") {
  for (const double x : {1e-4, 1e-2, 0.1, 0.5, 0.999999999, 1.0, 1.000000001,
                         2.0, 5.0, 10.0, 30.0}) {
    const double mine = exp_integral_e1(x);
    const double reference = test::oracle_e1(x);
    INFO("x = ", x);
    CHECK(std::fabs(mine - reference) <= 1e-12 * std::fabs(reference));
  }
  // The scaled form never overflows and obeys the classical envelope
  // 1/(x+1) < exp(x) E1(x) < 1/x.
  for (const double x : {50.0, 1e3, 1e6}) {
    const double scaled = exp_scaled_e1(x);
    CHECK(scaled > 1.0 / (x + 1.0));
    CHECK(scaled < 1.0 / x);
  }
  // At x = 1e12 the true gap above 1/(x+1) is ~x^-3, far below one ulp of
  // the result, so only the non-strict side of the envelope is testable.
  CHECK(exp_scaled_e1(1e12) >= 1.0 / (1e12 + 1.0));
  CHECK(exp_scaled_e1(1e12) < 1.0 / 1e12);
  CHECK_THROWS_AS(exp_integral_e1(0.0), std::invalid_argument);
  CHECK_THROWS_AS(exp_integral_e1(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(exp_scaled_e1(0.0), std::invalid_argument);
}

TEST_CASE("frozen special values") {
  CHECK(exp_integral_e1(1.0) ==
        doctest::Approx(0.21938393439552027).epsilon(1e-12));
  CHECK(exp_integral_e1(0.5657) ==
        doctest::Approx(0.48725168420363961).epsilon(1e-12));
  CHECK(expected_log_closed(1.0, 1.0, 1.0) ==
        doctest::Approx(0.86034738227088681).epsilon(1e-12));
}

TEST_CASE("closed form stays inside the deterministic bracket") {
  int checked = 0;
  for (const double a : {0.0, 0.3, 1.0, 4.0}) {
    for (const double b : {0.2, 1.0, 3.0}) {
      for (const double mean : {0.5, 2.0, 10.0}) {
        const double value = expected_log_closed(a, b, mean);
        const auto [lo, hi] = fact1_bracket(a, b, mean);
        INFO("a ", a, " b ", b, " mean ", mean);
        CHECK(value >= lo - 1e-12);
        CHECK(value <= hi + 1e-12);
        CHECK(hi - lo ==
              doctest::Approx(std::numbers::egamma / std::numbers::ln2)
                  .epsilon(1e-14));
        if (a == 0.0) CHECK(value == lo);  // the bound is tight with no offset
        ++checked;
      }
    }
  }
  CHECK(checked == 36);

  CHECK(expected_log_closed(1.5, 0.0, 7.0) == std::log2(1.5));
  CHECK(expected_log_closed(2.0, 5.0, 0.0) == 1.0);
  CHECK_THROWS_AS(expected_log_closed(-1.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(expected_log_closed(0.0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(fact1_bracket(1.0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(fact1_bracket(-0.5, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("monte-carlo estimator is deterministic and converges") {
  const ExpectedLogSpec spec{2.0, {{1.0, 3.0}}};
  const McEstimate a = expected_log_mc(spec, 50'000, 42);
  const McEstimate b = expected_log_mc(spec, 50'000, 42);
  const McEstimate c = expected_log_mc(spec, 50'000, 43);
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);
  CHECK(a.value != c.value);
  CHECK(a.samples == 50'000);
  CHECK(a.seed == 42);
  CHECK(a.std_error > 0.0);

  const double closed = expected_log_closed(2.0, 1.0, 3.0);
  CHECK(std::fabs(a.value - closed) <= 4.0 * a.std_error);

  // More samples tighten the error roughly like 1/sqrt(n).
  const McEstimate fine = expected_log_mc(spec, 200'000, 42);
  CHECK(fine.std_error < a.std_error);
  CHECK(a.std_error / fine.std_error == doctest::Approx(2.0).epsilon(0.25));
}

TEST_CASE("monte-carlo estimator covers multi-component sums") {
  const ExpectedLogSpec spec{0.5, {{2.0, 1.0}, {1.0, 4.0}}};
  const McEstimate est = expected_log_mc(spec, 100'000, 7);
  // Concavity caps the mean by the log of the mean argument.
  const double hi = std::log2(0.5 + 2.0 * 1.0 + 1.0 * 4.0);
  CHECK(est.value <= hi + 3.0 * est.std_error);
  CHECK(est.value >= std::log2(0.5));
}

TEST_CASE("monte-carlo estimator rejects bad input") {
  CHECK_THROWS_AS(expected_log_mc({1.0, {{1.0, 1.0}}}, 999, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(expected_log_mc({-1.0, {{1.0, 1.0}}}, 2000, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(expected_log_mc({1.0, {{-1.0, 1.0}}}, 2000, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(expected_log_mc({0.0, {{1.0, 0.0}}}, 2000, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(expected_log_mc({0.0, {}}, 2000, 1), std::invalid_argument);
}

TEST_CASE("tdm rate agrees with its closed-form expectation") {
  const auto config = ChannelConfig::from_db(20.0, 1.0, 5, 0.1);
  const MmseModel m = mmse_model(config);
  const McEstimate rate = rate_tdm(config, 200'000, 3);
  const double expectation =
      expected_log_closed(m.noise_tdm, 1.0, m.est_var_direct);
  const double reference =
      0.5 * (1.0 - 1.0 / config.coherence) * (expectation - std::log2(m.noise_tdm));
  CHECK(std::fabs(rate.value - reference) <= 4.0 * rate.std_error);
  CHECK(rate.std_error > 0.0);
  CHECK(rate.value > 0.0);

  CHECK_THROWS_AS(rate_tdm(config, 10, 3), std::invalid_argument);
}

TEST_CASE("training rate is zero at minimum coherence and positive beyond") {
  const auto t2 = ChannelConfig::from_db(16.0, 1.0, 2, 0.1);
  const McEstimate zero = rate_training_rs(t2, 5'000, 1);
  CHECK(zero.value == 0.0);
  CHECK(zero.std_error == 0.0);
  CHECK(zero.samples == 5'000);

  const auto t5 = ChannelConfig::from_db(16.0, 1.0, 5, 0.1);
  const McEstimate split = rate_training_rs(t5, 50'000, 1);
  CHECK(split.value > 0.3);
  CHECK(split.std_error > 0.0);

  // At this operating point plain time sharing still wins.
  const McEstimate tdm = rate_tdm(t5, 50'000, 1);
  CHECK(tdm.value > split.value + 4.0 * (tdm.std_error + split.std_error));

  CHECK_THROWS_AS(rate_training_rs(t5, 999, 1), std::invalid_argument);
}

TEST_CASE("training rate is deterministic in the seed") {
  const auto config = ChannelConfig::from_db(18.0, 1.0, 6, 0.1);
  const McEstimate a = rate_training_rs(config, 20'000, 5);
  const McEstimate b = rate_training_rs(config, 20'000, 5);
  const McEstimate c = rate_training_rs(config, 20'000, 6);
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);
  CHECK(a.value != c.value);
}

TEST_CASE("finite-snr region approaches the asymptotic region") {
  const double exponent = 50.0;
  const auto config =
      ChannelConfig::from_snr_alpha(std::pow(2.0, exponent), 0.75, 5, 1.0);
  Region2D normalized = finite_snr_region_rs(config, false);
  CHECK(normalized.label == "rs-finite");
  for (auto& row : normalized.rows) row.c /= exponent;
  const Region2D limit = region(SchemeId::RsNoFb, 0.75, 5);
  CHECK(region_deviation(normalized, limit) <= 0.03);

  const Region2D fb = finite_snr_region_rs(config, true);
  CHECK(fb.label == "rs-fb-finite");
  CHECK(symmetric_max(fb).value > 0.0);
}
