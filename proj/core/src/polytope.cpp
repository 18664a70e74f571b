// SPDX-License-Identifier: Apache-2.0
#include "ncic/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace ncic {
namespace {

constexpr double kZeroTol = 1e-12;
constexpr double kRayTol = 1e-12;

void require_finite(const IneqSystem& system) {
  for (const auto& row : system.rows) {
    if (!std::isfinite(row.rhs)) throw std::invalid_argument("row rhs must be finite");
    if (row.coeff.size() != system.vars.size()) {
      throw std::invalid_argument("row width must match variable count");
    }
    for (double c : row.coeff) {
      if (!std::isfinite(c)) throw std::invalid_argument("row coefficients must be finite");
    }
  }
  if (!system.nonneg.empty() && system.nonneg.size() != system.vars.size()) {
    throw std::invalid_argument("nonneg mask must match variable count");
  }
}

std::size_t var_index(const IneqSystem& system, const std::string& var) {
  for (std::size_t i = 0; i < system.vars.size(); ++i) {
    if (system.vars[i] == var) return i;
  }
  throw std::invalid_argument("unknown variable: " + var);
}

LinearRow drop_column(const LinearRow& row, std::size_t j) {
  LinearRow out;
  out.coeff.reserve(row.coeff.size() - 1);
  for (std::size_t k = 0; k < row.coeff.size(); ++k) {
    if (k != j) out.coeff.push_back(row.coeff[k]);
  }
  out.rhs = row.rhs;
  return out;
}

void normalize_max_abs(LinearRow& row) {
  double m = 0.0;
  for (double c : row.coeff) m = std::max(m, std::abs(c));
  if (m > kZeroTol) {
    for (double& c : row.coeff) c /= m;
    row.rhs /= m;
  }
}

bool is_zero_row(const LinearRow& row) {
  for (double c : row.coeff) {
    if (std::abs(c) > kZeroTol) return false;
  }
  return true;
}

// Drops vacuous rows and keeps only the tightest of exactly parallel rows.
// Returns false if an always-false row proves the system infeasible.
bool prune(IneqSystem& system) {
  std::vector<LinearRow> kept;
  for (auto& row : system.rows) {
    if (is_zero_row(row)) {
      if (row.rhs < -kGeomTol) return false;
      continue;
    }
    double norm = 0.0;
    for (double c : row.coeff) norm += c * c;
    norm = std::sqrt(norm);
    bool dominated = false;
    for (auto& other : kept) {
      double onorm = 0.0;
      for (double c : other.coeff) onorm += c * c;
      onorm = std::sqrt(onorm);
      bool parallel = true;
      for (std::size_t k = 0; k < row.coeff.size(); ++k) {
        if (std::abs(row.coeff[k] / norm - other.coeff[k] / onorm) > 1e-9) {
          parallel = false;
          break;
        }
      }
      if (parallel) {
        other.rhs = std::min(other.rhs, onorm * (row.rhs / norm));
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(row);
  }
  system.rows = std::move(kept);
  return true;
}

Region2D infeasible_region(std::string label) {
  Region2D out;
  out.rows.push_back(HalfPlane{0.0, 0.0, -1.0});
  out.label = std::move(label);
  return out;
}

std::vector<HalfPlane> with_quadrant(const Region2D& region) {
  std::vector<HalfPlane> rows = region.rows;
  rows.push_back(HalfPlane{-1.0, 0.0, 0.0});
  rows.push_back(HalfPlane{0.0, -1.0, 0.0});
  return rows;
}

bool zero_plane(const HalfPlane& r) {
  return std::abs(r.a) <= kZeroTol && std::abs(r.b) <= kZeroTol;
}

// Intersections of all boundary-line pairs. Any vertex of the region (which
// lies in the quadrant and therefore has at least two active constraints
// among rows + axes) appears in this list.
std::vector<Point2D> candidate_points(const std::vector<HalfPlane>& rows) {
  std::vector<Point2D> pts;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (zero_plane(rows[i])) continue;
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (zero_plane(rows[j])) continue;
      const double det = rows[i].a * rows[j].b - rows[j].a * rows[i].b;
      if (std::abs(det) <= kZeroTol) continue;
      pts.push_back(Point2D{(rows[i].c * rows[j].b - rows[j].c * rows[i].b) / det,
                            (rows[i].a * rows[j].c - rows[j].a * rows[i].c) / det});
    }
  }
  return pts;
}

bool has_infeasible_constant_row(const Region2D& region) {
  for (const auto& r : region.rows) {
    if (zero_plane(r) && r.c < -kGeomTol) return true;
  }
  return false;
}

// Unit recession directions of the feasible cone, if any. In 2D every
// nontrivial recession cone has an extreme ray perpendicular to some row
// normal, so checking those perpendiculars is exhaustive.
bool has_recession_ray(const std::vector<HalfPlane>& rows, double obj_x, double obj_y,
                       bool require_positive_objective) {
  for (const auto& r : rows) {
    if (zero_plane(r)) continue;
    const double norm = std::hypot(r.a, r.b);
    for (int sign : {1, -1}) {
      const double dx = sign * (-r.b / norm);
      const double dy = sign * (r.a / norm);
      bool feasible_dir = true;
      for (const auto& other : rows) {
        if (zero_plane(other)) continue;
        if (other.a * dx + other.b * dy > kRayTol * (std::abs(other.a) + std::abs(other.b))) {
          feasible_dir = false;
          break;
        }
      }
      if (!feasible_dir) continue;
      if (!require_positive_objective) return true;
      if (obj_x * dx + obj_y * dy > kRayTol) return true;
    }
  }
  return false;
}

struct LpResult {
  double value = 0.0;
  bool unbounded = false;
  bool feasible = false;
};

// Maximum of obj over the region, via candidate vertices plus recession rays.
LpResult lp_max_2d(double obj_x, double obj_y, const Region2D& region, double tol) {
  LpResult result;
  if (has_infeasible_constant_row(region)) return result;
  const auto rows = with_quadrant(region);
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& p : candidate_points(rows)) {
    if (!contains(region, p, tol)) continue;
    result.feasible = true;
    best = std::max(best, obj_x * p.x + obj_y * p.y);
  }
  if (!result.feasible) return result;
  if (has_recession_ray(rows, obj_x, obj_y, true)) {
    result.unbounded = true;
    result.value = std::numeric_limits<double>::infinity();
    return result;
  }
  result.value = best;
  return result;
}

double point_distance(Point2D a, Point2D b) { return std::hypot(a.x - b.x, a.y - b.y); }

double segment_distance(Point2D p, Point2D u, Point2D v) {
  const double vx = v.x - u.x;
  const double vy = v.y - u.y;
  const double len2 = vx * vx + vy * vy;
  if (len2 <= kZeroTol * kZeroTol) return point_distance(p, u);
  double t = ((p.x - u.x) * vx + (p.y - u.y) * vy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return point_distance(p, Point2D{u.x + t * vx, u.y + t * vy});
}

double distance_to_polygon(Point2D p, const Region2D& region,
                           const std::vector<Point2D>& verts) {
  if (contains(region, p, kGeomTol)) return 0.0;
  if (verts.empty()) return std::numeric_limits<double>::infinity();
  if (verts.size() == 1) return point_distance(p, verts.front());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    best = std::min(best, segment_distance(p, verts[i], verts[(i + 1) % verts.size()]));
  }
  return best;
}

}  // namespace

IneqSystem fm_eliminate(const IneqSystem& system, const std::string& var) {
  require_finite(system);
  const std::size_t j = var_index(system, var);
  const std::size_t n = system.vars.size();

  std::vector<LinearRow> uppers;
  std::vector<LinearRow> lowers;
  IneqSystem out;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == j) continue;
    out.vars.push_back(system.vars[k]);
    if (!system.nonneg.empty()) out.nonneg.push_back(system.nonneg[k]);
  }

  for (const auto& row : system.rows) {
    const double a = row.coeff[j];
    if (std::abs(a) <= kZeroTol) {
      out.rows.push_back(drop_column(row, j));
    } else {
      LinearRow scaled = row;
      const double factor = 1.0 / std::abs(a);
      for (double& c : scaled.coeff) c *= factor;
      scaled.rhs *= factor;
      (a > 0 ? uppers : lowers).push_back(std::move(scaled));
    }
  }
  if (!system.nonneg.empty() && system.nonneg[j]) {
    LinearRow bound;
    bound.coeff.assign(n, 0.0);
    bound.coeff[j] = -1.0;
    lowers.push_back(std::move(bound));
  }

  for (const auto& u : uppers) {
    for (const auto& l : lowers) {
      LinearRow combined;
      combined.coeff.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) combined.coeff.push_back(u.coeff[k] + l.coeff[k]);
      }
      combined.rhs = u.rhs + l.rhs;
      normalize_max_abs(combined);
      out.rows.push_back(std::move(combined));
    }
  }
  return out;
}

Region2D project(const IneqSystem& system, const std::string& keep_x,
                 const std::string& keep_y, std::string label) {
  require_finite(system);
  if (keep_x == keep_y) throw std::invalid_argument("projection axes must differ");
  var_index(system, keep_x);
  var_index(system, keep_y);

  IneqSystem work = system;
  for (;;) {
    std::string next;
    for (const auto& v : work.vars) {
      if (v != keep_x && v != keep_y) {
        next = v;
        break;
      }
    }
    if (next.empty()) break;
    work = fm_eliminate(work, next);
    if (!prune(work)) return infeasible_region(std::move(label));
  }

  const std::size_t ix = var_index(work, keep_x);
  const std::size_t iy = var_index(work, keep_y);
  Region2D out;
  out.label = std::move(label);
  for (const auto& row : work.rows) {
    out.rows.push_back(HalfPlane{row.coeff[ix], row.coeff[iy], row.rhs});
  }
  return out;
}

bool contains(const Region2D& region, Point2D point, double tol) {
  if (point.x < -tol || point.y < -tol) return false;
  for (const auto& r : region.rows) {
    if (r.a * point.x + r.b * point.y > r.c + tol) return false;
  }
  return true;
}

Region2D remove_redundant(const Region2D& region) {
  Region2D out;
  out.label = region.label;
  if (has_infeasible_constant_row(region)) return infeasible_region(out.label);

  // Parallel-row dominance first; it also drops vacuous constant rows.
  std::vector<HalfPlane> active;
  for (const auto& r : region.rows) {
    if (zero_plane(r)) continue;
    const double norm = std::hypot(r.a, r.b);
    bool merged = false;
    for (auto& other : active) {
      const double onorm = std::hypot(other.a, other.b);
      if (std::abs(r.a / norm - other.a / onorm) <= 1e-9 &&
          std::abs(r.b / norm - other.b / onorm) <= 1e-9) {
        other.c = std::min(other.c, onorm * (r.c / norm));
        merged = true;
        break;
      }
    }
    if (!merged) active.push_back(r);
  }

  Region2D probe;
  probe.rows = active;
  if (!lp_max_2d(0.0, 0.0, probe, kGeomTol).feasible) return infeasible_region(out.label);

  // A row is droppable when maximizing its normal over the remaining rows
  // cannot exceed its bound; removals are permanent so later tests run
  // against the already-reduced set.
  for (std::size_t i = 0; i < active.size();) {
    Region2D rest;
    rest.rows.reserve(active.size() - 1);
    for (std::size_t k = 0; k < active.size(); ++k) {
      if (k != i) rest.rows.push_back(active[k]);
    }
    const LpResult lp = lp_max_2d(active[i].a, active[i].b, rest, kGeomTol);
    if (lp.feasible && !lp.unbounded && lp.value <= active[i].c + kGeomTol) {
      active.erase(active.begin() + i);
    } else {
      ++i;
    }
  }
  out.rows = std::move(active);
  return out;
}

std::vector<Point2D> vertices_2d(const Region2D& region) {
  if (has_infeasible_constant_row(region)) return {};
  const auto rows = with_quadrant(region);

  std::vector<Point2D> feasible;
  for (const auto& p : candidate_points(rows)) {
    if (contains(region, p, kGeomTol)) feasible.push_back(p);
  }
  if (feasible.empty()) return {};
  if (has_recession_ray(rows, 0.0, 0.0, false)) {
    throw std::domain_error("region is unbounded");
  }

  std::vector<Point2D> unique;
  for (const auto& p : feasible) {
    bool seen = false;
    for (const auto& q : unique) {
      if (std::abs(p.x - q.x) <= kGeomTol && std::abs(p.y - q.y) <= kGeomTol) {
        seen = true;
        break;
      }
    }
    if (!seen) unique.push_back(p);
  }
  if (unique.size() == 1) return unique;

  double cx = 0.0;
  double cy = 0.0;
  for (const auto& p : unique) {
    cx += p.x;
    cy += p.y;
  }
  cx /= static_cast<double>(unique.size());
  cy /= static_cast<double>(unique.size());
  std::sort(unique.begin(), unique.end(), [&](const Point2D& p, const Point2D& q) {
    return std::atan2(p.y - cy, p.x - cx) < std::atan2(q.y - cy, q.x - cx);
  });

  std::size_t start = 0;
  for (std::size_t i = 1; i < unique.size(); ++i) {
    if (unique[i].x < unique[start].x - kGeomTol ||
        (std::abs(unique[i].x - unique[start].x) <= kGeomTol && unique[i].y < unique[start].y)) {
      start = i;
    }
  }
  std::rotate(unique.begin(), unique.begin() + static_cast<std::ptrdiff_t>(start),
              unique.end());
  return unique;
}

SymMax symmetric_max(const Region2D& region) {
  SymMax result;
  double hi = std::numeric_limits<double>::infinity();
  double lo = 0.0;  // implicit quadrant
  bool infeasible = false;
  for (const auto& r : region.rows) {
    const double s = r.a + r.b;
    if (s > kZeroTol) {
      hi = std::min(hi, r.c / s);
    } else if (s < -kZeroTol) {
      lo = std::max(lo, r.c / s);
    } else if (r.c < -kGeomTol) {
      // Diagonal-neutral row that no symmetric point satisfies.
      infeasible = true;
    }
  }
  if (infeasible || hi < lo - kZeroTol || hi < 0.0) {
    result.value = 0.0;
  } else if (!std::isfinite(hi)) {
    throw std::domain_error("region is unbounded along the symmetric direction");
  } else {
    result.value = hi;
  }
  result.empty = result.value <= kGeomTol;
  return result;
}

bool regions_equal(const Region2D& lhs, const Region2D& rhs, double tol) {
  const auto va = vertices_2d(lhs);
  const auto vb = vertices_2d(rhs);
  if (va.empty() != vb.empty()) return false;
  for (const auto& p : va) {
    if (!contains(rhs, p, tol)) return false;
  }
  for (const auto& p : vb) {
    if (!contains(lhs, p, tol)) return false;
  }
  return std::abs(symmetric_max(lhs).value - symmetric_max(rhs).value) <= tol;
}

double region_deviation(const Region2D& lhs, const Region2D& rhs) {
  const auto va = vertices_2d(lhs);
  const auto vb = vertices_2d(rhs);
  if (va.empty() && vb.empty()) return 0.0;
  if (va.empty() || vb.empty()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const auto& p : va) worst = std::max(worst, distance_to_polygon(p, rhs, vb));
  for (const auto& p : vb) worst = std::max(worst, distance_to_polygon(p, lhs, va));
  return worst;
}

}  // namespace ncic
