// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace ncic {

inline constexpr double kGeomTol = 1e-9;

// One inequality: coeff . x <= rhs.
struct LinearRow {
  std::vector<double> coeff;
  double rhs = 0.0;
};

// Inequality system over named variables. nonneg marks variables that are
// additionally constrained to be >= 0; it aligns with vars when non-empty.
struct IneqSystem {
  std::vector<std::string> vars;
  std::vector<LinearRow> rows;
  std::vector<bool> nonneg;
};

// Half-plane a*x + b*y <= c.
struct HalfPlane {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

// Planar region: intersection of rows with the closed nonnegative quadrant.
// The quadrant is implicit; rows never need to restate x >= 0 or y >= 0.
struct Region2D {
  std::vector<HalfPlane> rows;
  std::string label;
};

struct Point2D {
  double x = 0.0;
  double y = 0.0;
};

// Largest t with (t, t) feasible. empty means the region admits no strictly
// positive symmetric point.
struct SymMax {
  double value = 0.0;
  bool empty = false;
};

// Eliminates var by pairing each upper bound with each lower bound
// (nonnegativity of var acts as the lower bound row -var <= 0). Emitted rows
// are normalized by their largest coefficient magnitude but otherwise kept
// verbatim: redundant and vacuous rows survive until remove_redundant.
IneqSystem fm_eliminate(const IneqSystem& system, const std::string& var);

// Projects onto (keep_x, keep_y) by repeated elimination, pruning dominated
// rows between steps to control growth. An infeasible input yields a region
// whose contains() is false everywhere.
Region2D project(const IneqSystem& system, const std::string& keep_x,
                 const std::string& keep_y, std::string label = "");

bool contains(const Region2D& region, Point2D point, double tol = kGeomTol);

// Minimal row list describing the same feasible set: exact duplicates and
// rows implied by the others (including the implicit quadrant) are dropped.
Region2D remove_redundant(const Region2D& region);

// Vertices in counterclockwise order, starting from the lexicographically
// smallest. Empty region gives an empty list. Throws std::domain_error if the
// region is unbounded.
std::vector<Point2D> vertices_2d(const Region2D& region);

SymMax symmetric_max(const Region2D& region);

// Equality of feasible sets: mutual vertex containment plus agreement of the
// symmetric maximum, all within tol.
bool regions_equal(const Region2D& lhs, const Region2D& rhs, double tol = kGeomTol);

// Symmetric vertex-to-boundary gap between two bounded regions: the largest
// distance from a vertex of either region to the other region. Zero when the
// regions coincide; infinity if exactly one is empty.
double region_deviation(const Region2D& lhs, const Region2D& rhs);

}  // namespace ncic
