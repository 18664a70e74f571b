// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "ncic/rng.hpp"

namespace ncic {

// Operating point of the two-user block-fading interference channel.
// snr and inr are linear powers; alpha is the interference exponent
// log(inr)/log(snr); coherence is the fading block length in symbols.
struct ChannelConfig {
  double snr = 1.0;
  double inr = 1.0;
  double alpha = 1.0;
  int coherence = 2;
  double link_gain = 1.0;

  // snr here is the raw power before link_gain scaling.
  static ChannelConfig from_snr_alpha(double snr, double alpha, int coherence,
                                      double link_gain);
  static ChannelConfig from_db(double snr_db, double alpha, int coherence,
                               double link_gain);
};

enum class Regime { Weak, Moderate, Strong };

// Weak: alpha < 1/2; Moderate: 1/2 <= alpha <= 1; Strong: alpha > 1.
Regime regime_of(double alpha);

// One-shot MMSE channel estimation from a single pilot symbol per link.
// est_gain_* scale the observed pilot into the estimate; est_var_* are the
// variances of the estimated link powers; noise_* fold estimation error and
// receiver noise into one effective level.
struct MmseModel {
  double est_gain_direct = 0.0;
  double est_gain_cross = 0.0;
  double est_var_direct = 0.0;
  double est_var_cross = 0.0;
  double noise_rs = 0.0;
  double noise_tdm = 0.0;
  double lambda_p = 0.0;  // private-stream power fraction, min(1/inr, 1)
};

MmseModel mmse_model(const ChannelConfig& config);

// Squared magnitudes of the four estimated link coefficients for one fading
// block, exponentially distributed with the est_var_* means.
struct LinkDraw {
  double g11_sq = 0.0;
  double g21_sq = 0.0;
  double g22_sq = 0.0;
  double g12_sq = 0.0;
};

// Deterministic in (config, seed): chunk_size never changes the values.
std::vector<LinkDraw> sample_links(const ChannelConfig& config, std::uint64_t seed,
                                   std::size_t count,
                                   std::size_t chunk_size = rng::kDefaultChunk);

}  // namespace ncic
