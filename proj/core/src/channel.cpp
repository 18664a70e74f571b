// SPDX-License-Identifier: Apache-2.0
#include "ncic/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ncic {

namespace {

void validate_common(double alpha, int coherence, double link_gain) {
  if (!(link_gain > 0.0)) throw std::invalid_argument("link_gain must be positive");
  if (coherence < 2) throw std::invalid_argument("coherence must be at least 2");
  if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be nonnegative");
}

}  // namespace

ChannelConfig ChannelConfig::from_snr_alpha(double snr, double alpha, int coherence,
                                            double link_gain) {
  validate_common(alpha, coherence, link_gain);
  if (!(snr > 0.0)) throw std::invalid_argument("snr must be positive");
  const double effective = snr * link_gain;
  ChannelConfig config;
  config.snr = effective;
  config.alpha = alpha;
  config.coherence = coherence;
  config.link_gain = link_gain;
  if (alpha == 1.0) {
    config.inr = effective;
  } else if (alpha == 0.0) {
    config.inr = 1.0;
  } else {
    // snr^alpha is not monotone in alpha at or below unit power, so the
    // interference exponent is only meaningful above it.
    if (!(effective > 1.0)) {
      throw std::invalid_argument("snr * link_gain must exceed 1 unless alpha is 0 or 1");
    }
    config.inr = std::pow(effective, alpha);
  }
  return config;
}

ChannelConfig ChannelConfig::from_db(double snr_db, double alpha, int coherence,
                                     double link_gain) {
  return from_snr_alpha(std::pow(10.0, snr_db / 10.0), alpha, coherence, link_gain);
}

Regime regime_of(double alpha) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be nonnegative");
  if (alpha < 0.5) return Regime::Weak;
  if (alpha <= 1.0) return Regime::Moderate;
  return Regime::Strong;
}

MmseModel mmse_model(const ChannelConfig& config) {
  const double vd = config.snr;
  const double vc = config.inr;
  MmseModel model;
  model.est_gain_direct = vd / (1.0 + vd);
  model.est_gain_cross = vc / (1.0 + vc);
  model.est_var_direct = vd * vd / (1.0 + vd);
  model.est_var_cross = vc * vc / (1.0 + vc);
  model.noise_rs = model.est_gain_direct + model.est_gain_cross + 1.0;
  model.noise_tdm = model.est_gain_direct + 1.0;
  model.lambda_p = std::min(1.0 / vc, 1.0);
  return model;
}

std::vector<LinkDraw> sample_links(const ChannelConfig& config, std::uint64_t seed,
                                   std::size_t count, std::size_t chunk_size) {
  if (count == 0) throw std::invalid_argument("count must be positive");
  if (chunk_size == 0) throw std::invalid_argument("chunk_size must be positive");
  const MmseModel model = mmse_model(config);
  const std::uint64_t k11 = rng::stream_key(seed, 0);
  const std::uint64_t k21 = rng::stream_key(seed, 1);
  const std::uint64_t k22 = rng::stream_key(seed, 2);
  const std::uint64_t k12 = rng::stream_key(seed, 3);

  std::vector<LinkDraw> draws(count);
  for (std::size_t begin = 0; begin < count; begin += chunk_size) {
    const std::size_t end = std::min(count, begin + chunk_size);
    for (std::size_t i = begin; i < end; ++i) {
      draws[i].g11_sq = rng::exponential_at(k11, i, model.est_var_direct);
      draws[i].g21_sq = rng::exponential_at(k21, i, model.est_var_cross);
      draws[i].g22_sq = rng::exponential_at(k22, i, model.est_var_direct);
      draws[i].g12_sq = rng::exponential_at(k12, i, model.est_var_cross);
    }
  }
  return draws;
}

}  // namespace ncic
