// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "ncic/polytope.hpp"

namespace ncic {

// Achievability schemes: rate splitting with and without feedback, treating
// interference as noise, time division, and 2-pilot training with and
// without feedback.
enum class SchemeId { RsNoFb, RsFb, Tin, Tdm, TrainNoFb, TrainFb };

// Mutual-information terms whose lower bounds build the rate-splitting
// achievability systems, one per user side.
enum class TermId {
  X1U2_Y1_GivenU1,
  X2U1_Y2_GivenU2,
  X1_Y1_GivenU1U2,
  X2_Y2_GivenU1U2,
  X2U1_Y2,
  X1U2_Y1,
  X1_Y1_GivenU2,
  X2_Y2_GivenU1,
  U2_Y1_GivenX1,
  U1_Y2_GivenX2,
};

// Term values in bits per coherence block of T symbols.
using TermBounds = std::map<TermId, double>;

std::string_view scheme_token(SchemeId scheme);
std::optional<SchemeId> scheme_from_token(std::string_view token);
const std::vector<SchemeId>& all_schemes();

std::string_view term_token(TermId term);
std::optional<TermId> term_from_token(std::string_view token);
const std::vector<TermId>& all_terms();

// Closed-form lower bound of the term in bits per block.
double term_bound(TermId term, double snr, double inr, int coherence);

// Growth rate of term_bound against log2(snr) in the regime of alpha.
double prelog_expected(TermId term, double alpha, int coherence);

// Least-squares slope of term_bound over snr = 10^e, inr = 10^(alpha*e)
// against e*log2(10). Exponents must be increasing and at least 6.
double prelog_numeric(TermId term, double alpha, int coherence,
                      const std::vector<double>& snr_exponents);

// Per-symbol gDoF region of the scheme at interference level alpha.
Region2D region(SchemeId scheme, double alpha, int coherence);

// Largest symmetric point of region(scheme, alpha, coherence).
double sym_gdof(SchemeId scheme, double alpha, int coherence);

// Joint-decoding constraints over {Rc1, Rp1, Rc2, Rp2, R1, R2} in bits per
// symbol, with coupling rows tying R1 = Rc1+Rp1 and R2 = Rc2+Rp2.
IneqSystem prefm_system(const TermBounds& bounds, bool feedback, int coherence);

// The eliminated form of the same constraints over (R1, R2) directly.
Region2D postfm_region(const TermBounds& bounds, bool feedback, int coherence);

// All term bounds at one operating point.
TermBounds term_bounds_at(double snr, double inr, int coherence);

}  // namespace ncic
