// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ncic/channel.hpp"
#include "ncic/polytope.hpp"

namespace ncic {

// Expectation target E[log2(offset + sum_i coefficient_i * X_i)] where each
// X_i is an independent exponential with the given mean.
struct ExpLogComponent {
  double coefficient = 0.0;
  double mean = 0.0;
};

struct ExpectedLogSpec {
  double offset = 0.0;
  std::vector<ExpLogComponent> components;
};

// Monte-Carlo estimate in bits. std_error is the standard error of the mean
// (serialized under the column name "stderr"; the field avoids the stdio macro).
struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

// Sample mean of log2(offset + sum coefficient*X) over `samples` draws.
// Component i draws from rng stream i; deterministic for a fixed seed.
// Requires samples >= 1000 and a positive argument almost surely
// (offset > 0, or some coefficient*mean > 0).
McEstimate expected_log_mc(const ExpectedLogSpec& spec, std::size_t samples,
                           std::uint64_t seed);

// Exponential integral E1(x) = integral_x^inf exp(-t)/t dt, x > 0.
double exp_integral_e1(double x);

// exp(x) * E1(x), evaluated without overflow for large x.
double exp_scaled_e1(double x);

// Exact value of E[log2(a + b*X)] for X exponential with the given mean:
// (ln a + exp(r) E1(r)) / ln 2 with r = a/(b*mean); reduces to
// log2(b*mean) - gamma*log2(e) at a = 0 and to log2(a) at b*mean = 0.
double expected_log_closed(double a, double b, double mean);

// Deterministic bracket for E[log2(a + b*X)]: (lo, hi) with
// hi = log2(a + b*mean) and lo = hi - gamma*log2(e).
std::pair<double, double> fact1_bracket(double a, double b, double mean);

// Ergodic rate of time sharing with Gaussian codebooks after 1-symbol
// training, bits per channel use: (1/2)(1 - 1/T) E[log2(1 + X/noise_tdm)].
McEstimate rate_tdm(const ChannelConfig& config, std::size_t samples,
                    std::uint64_t seed);

// Symmetric ergodic rate of rate splitting on estimated channels after
// 2-symbol training, bits per channel use. The value is (1 - 2/T) times the
// smallest of the four sum-rate expressions of the symmetric
// common/private split; the reported std_error belongs to the binding
// expression. Returns exactly zero for T = 2. Common random numbers across
// the expressions keep the minimum well conditioned.
McEstimate rate_training_rs(const ChannelConfig& config, std::size_t samples,
                            std::uint64_t seed);

// Finite-SNR rate-splitting region (bits per symbol): the post-elimination
// region evaluated at the closed-form term bounds for this configuration,
// with negative bounds clamped to zero.
Region2D finite_snr_region_rs(const ChannelConfig& config, bool feedback);

}  // namespace ncic
