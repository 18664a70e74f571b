// SPDX-License-Identifier: Apache-2.0
#include "ncic/rates.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ncic/gdof.hpp"
#include "ncic/rng.hpp"

namespace ncic {
namespace {

constexpr std::size_t kMinSamples = 1000;
constexpr double kLog2E = 1.0 / std::numbers::ln2;

void require_min_samples(std::size_t samples) {
  if (samples < kMinSamples) {
    throw std::invalid_argument("samples must be at least 1000");
  }
}

// Truncated alternating series, accurate for 0 < x <= 1.
double e1_series(double x) {
  double term = 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 200; ++k) {
    term *= -x / k;
    const double contribution = term / k;
    sum -= contribution;
    if (std::fabs(contribution) < 1e-18) break;
  }
  return -std::numbers::egamma - std::log(x) + sum;
}

// Modified Lentz evaluation of the continued fraction for exp(x) E1(x),
// stable for x > 1; never forms exp(x) so it cannot overflow.
double e1_scaled_lentz(double x) {
  constexpr double kTiny = 1e-300;
  double f = x + 1.0;
  double c = f;
  double d = 0.0;
  for (int k = 1; k <= 10000; ++k) {
    const double a = -static_cast<double>(k) * k;
    const double b = x + 2.0 * k + 1.0;
    d = b + a * d;
    if (d == 0.0) d = kTiny;
    c = b + a / c;
    if (c == 0.0) c = kTiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-15) break;
  }
  return 1.0 / f;
}

double sample_std_error(double sum, double sum_sq, std::size_t n) {
  const double mean = sum / static_cast<double>(n);
  double variance =
      (sum_sq - static_cast<double>(n) * mean * mean) / static_cast<double>(n - 1);
  if (variance < 0.0) variance = 0.0;
  return std::sqrt(variance / static_cast<double>(n));
}

}  // namespace

double exp_integral_e1(double x) {
  if (!(x > 0.0)) {
    throw std::invalid_argument("exp_integral_e1 requires x > 0");
  }
  if (x <= 1.0) return e1_series(x);
  return std::exp(-x) * e1_scaled_lentz(x);
}

double exp_scaled_e1(double x) {
  if (!(x > 0.0)) {
    throw std::invalid_argument("exp_scaled_e1 requires x > 0");
  }
  if (x <= 1.0) return std::exp(x) * e1_series(x);
  return e1_scaled_lentz(x);
}

McEstimate expected_log_mc(const ExpectedLogSpec& spec, std::size_t samples,
                           std::uint64_t seed) {
  require_min_samples(samples);
  if (!(spec.offset >= 0.0) || !std::isfinite(spec.offset)) {
    throw std::invalid_argument("offset must be finite and nonnegative");
  }
  double scale = 0.0;
  for (const auto& component : spec.components) {
    if (!(component.coefficient >= 0.0) || !std::isfinite(component.coefficient) ||
        !(component.mean >= 0.0) || !std::isfinite(component.mean)) {
      throw std::invalid_argument("components must be finite and nonnegative");
    }
    scale += component.coefficient * component.mean;
  }
  if (spec.offset == 0.0 && scale <= 0.0) {
    throw std::invalid_argument(
        "spec must have a positive offset or a positive component");
  }

  std::vector<std::uint64_t> keys;
  keys.reserve(spec.components.size());
  for (std::size_t k = 0; k < spec.components.size(); ++k) {
    keys.push_back(rng::stream_key(seed, static_cast<std::uint64_t>(k)));
  }

  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t start = 0; start < samples; start += rng::kDefaultChunk) {
    const std::size_t stop = std::min(samples, start + rng::kDefaultChunk);
    for (std::size_t i = start; i < stop; ++i) {
      double acc = spec.offset;
      for (std::size_t k = 0; k < spec.components.size(); ++k) {
        acc += spec.components[k].coefficient *
               rng::exponential_at(keys[k], static_cast<std::uint64_t>(i),
                                   spec.components[k].mean);
      }
      const double v = std::log2(acc);
      sum += v;
      sum_sq += v * v;
    }
  }
  return {sum / static_cast<double>(samples), sample_std_error(sum, sum_sq, samples),
          samples, seed};
}

double expected_log_closed(double a, double b, double mean) {
  if (!(a >= 0.0) || !(b >= 0.0) || !(mean >= 0.0)) {
    throw std::invalid_argument("expected_log_closed requires nonnegative inputs");
  }
  const double bm = b * mean;
  if (a == 0.0) {
    if (!(bm > 0.0)) {
      throw std::invalid_argument("argument of the log is identically zero");
    }
    return std::log2(bm) - std::numbers::egamma * kLog2E;
  }
  if (bm == 0.0) return std::log2(a);
  const double r = a / bm;
  return (std::log(a) + exp_scaled_e1(r)) * kLog2E;
}

std::pair<double, double> fact1_bracket(double a, double b, double mean) {
  if (!(a >= 0.0)) {
    throw std::invalid_argument("fact1_bracket requires a >= 0");
  }
  const double bm = b * mean;
  if (!(bm > 0.0)) {
    throw std::invalid_argument("fact1_bracket requires b * mean > 0");
  }
  const double hi = std::log2(a + bm);
  return {hi - std::numbers::egamma * kLog2E, hi};
}

McEstimate rate_tdm(const ChannelConfig& config, std::size_t samples,
                    std::uint64_t seed) {
  const MmseModel model = mmse_model(config);
  ExpectedLogSpec spec;
  spec.offset = model.noise_tdm;
  spec.components = {{1.0, model.est_var_direct}};
  McEstimate est = expected_log_mc(spec, samples, seed);
  const double prefactor = 0.5 * (1.0 - 1.0 / config.coherence);
  est.value = prefactor * (est.value - std::log2(model.noise_tdm));
  est.std_error *= prefactor;
  return est;
}

McEstimate rate_training_rs(const ChannelConfig& config, std::size_t samples,
                            std::uint64_t seed) {
  require_min_samples(samples);
  if (config.coherence == 2) return {0.0, 0.0, samples, seed};

  const MmseModel model = mmse_model(config);
  const double noise = model.noise_rs;
  const double lam = model.lambda_p;
  const std::uint64_t key_direct = rng::stream_key(seed, 0);
  const std::uint64_t key_cross = rng::stream_key(seed, 1);

  // Four sum-rate expressions of the symmetric split, all per user and with
  // the residual-interference log subtracted; common draws keep their
  // differences low-variance so the minimum is stable.
  std::array<double, 4> sum{};
  std::array<double, 4> sum_sq{};
  for (std::size_t start = 0; start < samples; start += rng::kDefaultChunk) {
    const std::size_t stop = std::min(samples, start + rng::kDefaultChunk);
    for (std::size_t i = start; i < stop; ++i) {
      const double x1 = rng::exponential_at(key_direct, static_cast<std::uint64_t>(i),
                                            model.est_var_direct);
      const double x2 = rng::exponential_at(key_cross, static_cast<std::uint64_t>(i),
                                            model.est_var_cross);
      const double log_all = std::log2(noise + x1 + lam * x2);
      const double log_full = std::log2(noise + x1 + x2);
      const double log_private = std::log2(noise + lam * x1 + lam * x2);
      const double log_mixed = std::log2(noise + lam * x1 + x2);
      const double log_residual = std::log2(noise + lam * x2);
      const std::array<double, 4> combo = {
          log_all - log_residual,
          0.5 * (log_full + log_private) - log_residual,
          log_mixed - log_residual,
          (log_full + log_private + log_mixed) / 3.0 - log_residual,
      };
      for (std::size_t j = 0; j < combo.size(); ++j) {
        sum[j] += combo[j];
        sum_sq[j] += combo[j] * combo[j];
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t j = 1; j < sum.size(); ++j) {
    if (sum[j] < sum[best]) best = j;
  }
  const double scale = 1.0 - 2.0 / config.coherence;
  return {scale * sum[best] / static_cast<double>(samples),
          scale * sample_std_error(sum[best], sum_sq[best], samples), samples, seed};
}

Region2D finite_snr_region_rs(const ChannelConfig& config, bool feedback) {
  TermBounds bounds = term_bounds_at(config.snr, config.inr, config.coherence);
  for (auto& [term, bits] : bounds) {
    if (bits < 0.0) bits = 0.0;
  }
  Region2D region = postfm_region(bounds, feedback, config.coherence);
  region.label = feedback ? "rs-fb-finite" : "rs-finite";
  return region;
}

}  // namespace ncic
