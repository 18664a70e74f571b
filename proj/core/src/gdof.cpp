// SPDX-License-Identifier: Apache-2.0
#include "ncic/gdof.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ncic/channel.hpp"

namespace ncic {
namespace {

void require_coherence(int coherence) {
  if (coherence < 2) throw std::invalid_argument("coherence must be at least 2");
}

void require_alpha(double alpha) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be nonnegative");
}

// Structural families of the term bounds; mirrored terms share a family
// because the channel statistics are symmetric.
enum class TermKind { GivenOwnCommon, GivenBothCommon, FullJoint, GivenOtherCommon, CommonGivenOwn };

TermKind kind_of(TermId term) {
  switch (term) {
    case TermId::X1U2_Y1_GivenU1:
    case TermId::X2U1_Y2_GivenU2:
      return TermKind::GivenOwnCommon;
    case TermId::X1_Y1_GivenU1U2:
    case TermId::X2_Y2_GivenU1U2:
      return TermKind::GivenBothCommon;
    case TermId::X2U1_Y2:
    case TermId::X1U2_Y1:
      return TermKind::FullJoint;
    case TermId::X1_Y1_GivenU2:
    case TermId::X2_Y2_GivenU1:
      return TermKind::GivenOtherCommon;
    case TermId::U2_Y1_GivenX1:
    case TermId::U1_Y2_GivenX2:
      return TermKind::CommonGivenOwn;
  }
  throw std::invalid_argument("unknown term");
}

double bound_at(const TermBounds& bounds, TermId term) {
  const auto it = bounds.find(term);
  if (it == bounds.end()) {
    throw std::invalid_argument(std::string("missing term bound: ") + std::string(term_token(term)));
  }
  return it->second;
}

HalfPlane row(double a, double b, double c) { return HalfPlane{a, b, std::max(c, 0.0)}; }

}  // namespace

std::string_view scheme_token(SchemeId scheme) {
  switch (scheme) {
    case SchemeId::RsNoFb: return "rs";
    case SchemeId::RsFb: return "rs-fb";
    case SchemeId::Tin: return "tin";
    case SchemeId::Tdm: return "tdm";
    case SchemeId::TrainNoFb: return "train";
    case SchemeId::TrainFb: return "train-fb";
  }
  throw std::invalid_argument("unknown scheme");
}

std::optional<SchemeId> scheme_from_token(std::string_view token) {
  for (SchemeId s : all_schemes()) {
    if (scheme_token(s) == token) return s;
  }
  return std::nullopt;
}

const std::vector<SchemeId>& all_schemes() {
  static const std::vector<SchemeId> schemes{SchemeId::RsNoFb,    SchemeId::RsFb,
                                             SchemeId::Tin,       SchemeId::Tdm,
                                             SchemeId::TrainNoFb, SchemeId::TrainFb};
  return schemes;
}

std::string_view term_token(TermId term) {
  switch (term) {
    case TermId::X1U2_Y1_GivenU1: return "IX1U2_Y1_gU1";
    case TermId::X2U1_Y2_GivenU2: return "IX2U1_Y2_gU2";
    case TermId::X1_Y1_GivenU1U2: return "IX1_Y1_gU1U2";
    case TermId::X2_Y2_GivenU1U2: return "IX2_Y2_gU1U2";
    case TermId::X2U1_Y2: return "IX2U1_Y2";
    case TermId::X1U2_Y1: return "IX1U2_Y1";
    case TermId::X1_Y1_GivenU2: return "IX1_Y1_gU2";
    case TermId::X2_Y2_GivenU1: return "IX2_Y2_gU1";
    case TermId::U2_Y1_GivenX1: return "IU2_Y1_gX1";
    case TermId::U1_Y2_GivenX2: return "IU1_Y2_gX2";
  }
  throw std::invalid_argument("unknown term");
}

std::optional<TermId> term_from_token(std::string_view token) {
  for (TermId t : all_terms()) {
    if (term_token(t) == token) return t;
  }
  return std::nullopt;
}

const std::vector<TermId>& all_terms() {
  static const std::vector<TermId> terms{
      TermId::X1U2_Y1_GivenU1, TermId::X2U1_Y2_GivenU2, TermId::X1_Y1_GivenU1U2,
      TermId::X2_Y2_GivenU1U2, TermId::X2U1_Y2,         TermId::X1U2_Y1,
      TermId::X1_Y1_GivenU2,   TermId::X2_Y2_GivenU1,   TermId::U2_Y1_GivenX1,
      TermId::U1_Y2_GivenX2};
  return terms;
}

double term_bound(TermId term, double snr, double inr, int coherence) {
  if (!(snr > 0.0) || !(inr > 0.0)) throw std::invalid_argument("snr and inr must be positive");
  require_coherence(coherence);
  const double t = coherence;
  const double low = std::min(snr, inr);
  const double ratio = snr / inr;
  switch (kind_of(term)) {
    case TermKind::GivenOwnCommon:
      return (t - 1.0) * std::log2(ratio + inr) - std::log2(low);
    case TermKind::GivenBothCommon:
      return std::log2(ratio + low) + (t - 2.0) * std::log2(1.0 + ratio) - std::log2(low);
    case TermKind::FullJoint:
      return (t - 1.0) * std::log2(snr + inr) - std::log2(low);
    case TermKind::GivenOtherCommon:
      return (t - 1.0) * std::log2(snr) - std::log2(low);
    case TermKind::CommonGivenOwn:
      return (t - 1.0) * std::log2(inr) - std::log2(low);
  }
  throw std::invalid_argument("unknown term");
}

double prelog_expected(TermId term, double alpha, int coherence) {
  require_alpha(alpha);
  require_coherence(coherence);
  const double t = coherence;
  const Regime regime = regime_of(alpha);
  switch (kind_of(term)) {
    case TermKind::GivenOwnCommon:
      switch (regime) {
        case Regime::Weak: return (t - 1.0) * (1.0 - alpha) - alpha;
        case Regime::Moderate: return (t - 2.0) * alpha;
        case Regime::Strong: return (t - 1.0) * alpha - 1.0;
      }
      break;
    case TermKind::GivenBothCommon:
      switch (regime) {
        case Regime::Weak: return (t - 1.0) * (1.0 - alpha) - alpha;
        case Regime::Moderate: return (t - 2.0) * (1.0 - alpha);
        case Regime::Strong: return 0.0;
      }
      break;
    case TermKind::FullJoint:
      switch (regime) {
        case Regime::Weak:
        case Regime::Moderate: return (t - 1.0) - alpha;
        case Regime::Strong: return (t - 1.0) * alpha - 1.0;
      }
      break;
    case TermKind::GivenOtherCommon:
      switch (regime) {
        case Regime::Weak:
        case Regime::Moderate: return (t - 1.0) - alpha;
        case Regime::Strong: return t - 2.0;
      }
      break;
    case TermKind::CommonGivenOwn:
      switch (regime) {
        case Regime::Weak:
        case Regime::Moderate: return (t - 2.0) * alpha;
        case Regime::Strong: return (t - 1.0) * alpha - 1.0;
      }
      break;
  }
  throw std::invalid_argument("unknown term");
}

double prelog_numeric(TermId term, double alpha, int coherence,
                      const std::vector<double>& snr_exponents) {
  require_alpha(alpha);
  require_coherence(coherence);
  if (snr_exponents.size() < 2) {
    throw std::invalid_argument("at least two snr exponents are required");
  }
  for (std::size_t i = 0; i < snr_exponents.size(); ++i) {
    if (snr_exponents[i] < 6.0) {
      throw std::invalid_argument("snr exponents must be at least 6");
    }
    if (i > 0 && snr_exponents[i] <= snr_exponents[i - 1]) {
      throw std::invalid_argument("snr exponents must be increasing");
    }
  }

  double sx = 0.0;
  double sy = 0.0;
  double sxx = 0.0;
  double sxy = 0.0;
  const double n = static_cast<double>(snr_exponents.size());
  for (double e : snr_exponents) {
    const double x = e * std::log2(10.0);
    const double snr = std::pow(10.0, e);
    const double inr = std::pow(10.0, alpha * e);
    const double y = term_bound(term, snr, inr, coherence);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Region2D region(SchemeId scheme, double alpha, int coherence) {
  require_alpha(alpha);
  require_coherence(coherence);
  const double t = coherence;
  const double inv = 1.0 / t;
  const Regime regime = regime_of(alpha);

  Region2D out;
  out.label = std::string(scheme_token(scheme));
  switch (scheme) {
    case SchemeId::RsNoFb:
      switch (regime) {
        case Regime::Weak: {
          const double individual = (1.0 - inv) - alpha * inv;
          out.rows.push_back(row(1, 0, individual));
          out.rows.push_back(row(0, 1, individual));
          out.rows.push_back(row(1, 1, 2.0 * (1.0 - inv) - 2.0 * alpha));
          break;
        }
        case Regime::Moderate: {
          const double skew = (2.0 - 3.0 * inv) - alpha * inv;
          out.rows.push_back(row(1, 1, (2.0 - 3.0 * inv) - alpha * (1.0 - inv)));
          out.rows.push_back(row(1, 1, 2.0 * (1.0 - 2.0 * inv) * alpha));
          out.rows.push_back(row(2, 1, skew));
          out.rows.push_back(row(1, 2, skew));
          break;
        }
        case Regime::Strong: {
          const double individual = 1.0 - 2.0 * inv;
          out.rows.push_back(row(1, 0, individual));
          out.rows.push_back(row(0, 1, individual));
          out.rows.push_back(row(1, 1, (1.0 - inv) * alpha - inv));
          break;
        }
      }
      break;
    case SchemeId::RsFb:
      switch (regime) {
        case Regime::Weak: {
          const double individual = (1.0 - inv) - 2.0 * alpha * inv;
          out.rows.push_back(row(1, 0, individual));
          out.rows.push_back(row(0, 1, individual));
          out.rows.push_back(row(1, 1, 2.0 * (1.0 - inv) - alpha * (1.0 + inv)));
          break;
        }
        case Regime::Moderate: {
          const double individual = 1.0 - 2.0 * inv;
          out.rows.push_back(row(1, 0, individual));
          out.rows.push_back(row(0, 1, individual));
          out.rows.push_back(row(1, 1, (2.0 - 3.0 * inv) - alpha * (1.0 - inv)));
          break;
        }
        case Regime::Strong:
          // The feedback table lists only the sum bound above strong
          // interference; no individual bounds are implied.
          out.rows.push_back(row(1, 1, (1.0 - inv) * alpha - inv));
          break;
      }
      break;
    case SchemeId::Tin: {
      const double individual = (1.0 - inv) * (1.0 - alpha);
      out.rows.push_back(row(1, 0, individual));
      out.rows.push_back(row(0, 1, individual));
      break;
    }
    case SchemeId::Tdm: {
      const double individual = 0.5 * (1.0 - inv);
      out.rows.push_back(row(1, 0, individual));
      out.rows.push_back(row(0, 1, individual));
      break;
    }
    case SchemeId::TrainNoFb: {
      const double scale = 1.0 - 2.0 * inv;
      const double strong = std::max(1.0, alpha);
      const double leftover = std::max(1.0 - alpha, 0.0);
      const double split = std::max(1.0 - alpha, alpha);
      out.rows.push_back(row(1, 0, scale));
      out.rows.push_back(row(0, 1, scale));
      out.rows.push_back(row(1, 1, scale * (strong + leftover)));
      out.rows.push_back(row(1, 1, 2.0 * scale * split));
      out.rows.push_back(row(2, 1, scale * (strong + split + leftover)));
      out.rows.push_back(row(1, 2, scale * (strong + split + leftover)));
      break;
    }
    case SchemeId::TrainFb: {
      const double scale = 1.0 - 2.0 * inv;
      const double strong = std::max(1.0, alpha);
      const double leftover = std::max(1.0 - alpha, 0.0);
      out.rows.push_back(row(1, 0, scale * strong));
      out.rows.push_back(row(0, 1, scale * strong));
      out.rows.push_back(row(1, 1, scale * (strong + leftover)));
      break;
    }
  }
  return out;
}

double sym_gdof(SchemeId scheme, double alpha, int coherence) {
  return symmetric_max(region(scheme, alpha, coherence)).value;
}

IneqSystem prefm_system(const TermBounds& bounds, bool feedback, int coherence) {
  require_coherence(coherence);
  const double t = coherence;

  IneqSystem system;
  system.vars = {"Rc1", "Rp1", "Rc2", "Rp2", "R1", "R2"};
  system.nonneg = {true, true, true, true, false, false};

  // Variable order: Rc1, Rp1, Rc2, Rp2, R1, R2.
  const auto add = [&](std::initializer_list<double> coeff, double rhs_bits) {
    LinearRow r;
    r.coeff = coeff;
    r.rhs = rhs_bits / t;
    system.rows.push_back(std::move(r));
  };

  if (!feedback) {
    add({1, 1, 1, 0, 0, 0}, bound_at(bounds, TermId::X1U2_Y1));
    add({1, 1, 0, 0, 0, 0}, bound_at(bounds, TermId::X1_Y1_GivenU2));
    add({0, 1, 0, 0, 0, 0}, bound_at(bounds, TermId::X1_Y1_GivenU1U2));
    add({0, 1, 1, 0, 0, 0}, bound_at(bounds, TermId::X1U2_Y1_GivenU1));
    add({1, 0, 1, 1, 0, 0}, bound_at(bounds, TermId::X2U1_Y2));
    add({0, 0, 1, 1, 0, 0}, bound_at(bounds, TermId::X2_Y2_GivenU1));
    add({0, 0, 0, 1, 0, 0}, bound_at(bounds, TermId::X2_Y2_GivenU1U2));
    add({1, 0, 0, 1, 0, 0}, bound_at(bounds, TermId::X2U1_Y2_GivenU2));
  } else {
    add({0, 0, 1, 0, 0, 0}, bound_at(bounds, TermId::U2_Y1_GivenX1));
    add({0, 1, 0, 0, 0, 0}, bound_at(bounds, TermId::X1_Y1_GivenU1U2));
    add({1, 1, 1, 0, 0, 0}, bound_at(bounds, TermId::X1U2_Y1));
    add({1, 0, 0, 0, 0, 0}, bound_at(bounds, TermId::U1_Y2_GivenX2));
    add({0, 0, 0, 1, 0, 0}, bound_at(bounds, TermId::X2_Y2_GivenU1U2));
    add({1, 0, 1, 1, 0, 0}, bound_at(bounds, TermId::X2U1_Y2));
  }

  // R1 = Rc1 + Rp1 and R2 = Rc2 + Rp2 as paired inequalities.
  add({-1, -1, 0, 0, 1, 0}, 0.0);
  add({1, 1, 0, 0, -1, 0}, 0.0);
  add({0, 0, -1, -1, 0, 1}, 0.0);
  add({0, 0, 1, 1, 0, -1}, 0.0);
  return system;
}

Region2D postfm_region(const TermBounds& bounds, bool feedback, int coherence) {
  require_coherence(coherence);
  const double t = coherence;
  Region2D out;
  out.label = feedback ? "postfm-fb" : "postfm";
  const auto add = [&](double a, double b, double rhs_bits) {
    out.rows.push_back(HalfPlane{a, b, rhs_bits / t});
  };

  if (!feedback) {
    add(1, 0, bound_at(bounds, TermId::X1_Y1_GivenU2));
    add(0, 1, bound_at(bounds, TermId::X2_Y2_GivenU1));
    add(1, 1, bound_at(bounds, TermId::X2U1_Y2) + bound_at(bounds, TermId::X1_Y1_GivenU1U2));
    add(1, 1, bound_at(bounds, TermId::X1U2_Y1) + bound_at(bounds, TermId::X2_Y2_GivenU1U2));
    add(1, 1,
        bound_at(bounds, TermId::X1U2_Y1_GivenU1) + bound_at(bounds, TermId::X2U1_Y2_GivenU2));
    add(2, 1,
        bound_at(bounds, TermId::X1U2_Y1) + bound_at(bounds, TermId::X1_Y1_GivenU1U2) +
            bound_at(bounds, TermId::X2U1_Y2_GivenU2));
    add(1, 2,
        bound_at(bounds, TermId::X2U1_Y2) + bound_at(bounds, TermId::X2_Y2_GivenU1U2) +
            bound_at(bounds, TermId::X1U2_Y1_GivenU1));
  } else {
    add(1, 0, bound_at(bounds, TermId::X1U2_Y1));
    add(1, 0, bound_at(bounds, TermId::U1_Y2_GivenX2) + bound_at(bounds, TermId::X1_Y1_GivenU1U2));
    add(0, 1, bound_at(bounds, TermId::X2U1_Y2));
    add(0, 1, bound_at(bounds, TermId::U2_Y1_GivenX1) + bound_at(bounds, TermId::X2_Y2_GivenU1U2));
    add(1, 1, bound_at(bounds, TermId::X1_Y1_GivenU1U2) + bound_at(bounds, TermId::X2U1_Y2));
    add(1, 1, bound_at(bounds, TermId::X2_Y2_GivenU1U2) + bound_at(bounds, TermId::X1U2_Y1));
  }
  return out;
}

TermBounds term_bounds_at(double snr, double inr, int coherence) {
  TermBounds bounds;
  for (TermId term : all_terms()) {
    bounds[term] = term_bound(term, snr, inr, coherence);
  }
  return bounds;
}

}  // namespace ncic
