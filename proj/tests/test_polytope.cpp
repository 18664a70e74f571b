// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "ncic/polytope.hpp"

using namespace ncic;

namespace {

// Feasibility of a one-variable reduced system at x, honoring nonneg.
bool feasible_1d(const IneqSystem& sys, double x) {
  REQUIRE(sys.vars.size() == 1);
  if (!sys.nonneg.empty() && sys.nonneg[0] && x < -kGeomTol) return false;
  for (const auto& row : sys.rows) {
    if (row.coeff[0] * x > row.rhs + kGeomTol) return false;
  }
  return true;
}

bool near(Point2D p, double x, double y, double tol = 1e-12) {
  return std::fabs(p.x - x) <= tol && std::fabs(p.y - y) <= tol;
}

}  // namespace

TEST_CASE("elimination pairs upper bounds with lower bounds") {
  IneqSystem sys;
  sys.vars = {"x", "y"};
  sys.rows = {{{1.0, 2.0}, 6.0}, {{-1.0, 1.0}, 1.0}};
  sys.nonneg = {false, true};

  const IneqSystem reduced = fm_eliminate(sys, "y");
  CHECK(reduced.vars == std::vector<std::string>{"x"});
  CHECK(reduced.nonneg == std::vector<bool>{false});
  // The shadow of the triangle on x is exactly [-1, 6].
  CHECK(feasible_1d(reduced, -1.0));
  CHECK(feasible_1d(reduced, 0.0));
  CHECK(feasible_1d(reduced, 6.0));
  CHECK_FALSE(feasible_1d(reduced, -1.01));
  CHECK_FALSE(feasible_1d(reduced, 6.01));
}

TEST_CASE("elimination keeps rows that never mention the variable") {
  IneqSystem sys;
  sys.vars = {"x", "y"};
  sys.rows = {{{1.0, 0.0}, 2.0}, {{0.0, 1.0}, 9.0}};
  sys.nonneg = {true, true};
  const IneqSystem reduced = fm_eliminate(sys, "y");
  REQUIRE(reduced.rows.size() == 2);
  CHECK(feasible_1d(reduced, 2.0));
  CHECK_FALSE(feasible_1d(reduced, 2.01));
  CHECK_FALSE(feasible_1d(reduced, -0.01));
}

TEST_CASE("elimination validates its input") {
  IneqSystem sys;
  sys.vars = {"x", "y"};
  sys.rows = {{{1.0, 1.0}, 1.0}};
  CHECK_THROWS_AS(fm_eliminate(sys, "z"), std::invalid_argument);

  IneqSystem ragged = sys;
  ragged.rows.push_back({{1.0}, 1.0});
  CHECK_THROWS_AS(fm_eliminate(ragged, "y"), std::invalid_argument);

  IneqSystem masked = sys;
  masked.nonneg = {true};
  CHECK_THROWS_AS(fm_eliminate(masked, "y"), std::invalid_argument);
}

TEST_CASE("projection reproduces the simplex shadow") {
  IneqSystem sys;
  sys.vars = {"x", "y", "z"};
  sys.rows = {{{1.0, 1.0, 1.0}, 1.0}};
  sys.nonneg = {true, true, true};
  const Region2D shadow = project(sys, "x", "y", "simplex");
  CHECK(shadow.label == "simplex");
  const auto verts = vertices_2d(shadow);
  REQUIRE(verts.size() == 3);
  CHECK(near(verts[0], 0.0, 0.0));
  CHECK(near(verts[1], 1.0, 0.0));
  CHECK(near(verts[2], 0.0, 1.0));
  CHECK(contains(shadow, {0.5, 0.49}));
  CHECK_FALSE(contains(shadow, {0.5, 0.51}));
}

TEST_CASE("projection of an infeasible system contains nothing") {
  IneqSystem sys;
  sys.vars = {"x", "y", "z"};
  // z >= 2 (as -z <= -2) conflicts with x + z <= 1 under nonnegativity.
  sys.rows = {{{0.0, 0.0, -1.0}, -2.0}, {{1.0, 0.0, 1.0}, 1.0}};
  sys.nonneg = {true, true, true};
  const Region2D shadow = project(sys, "x", "y");
  CHECK_FALSE(contains(shadow, {0.0, 0.0}));
  CHECK(vertices_2d(shadow).empty());
}

TEST_CASE("projection rejects identical axes") {
  IneqSystem sys;
  sys.vars = {"x", "y"};
  sys.rows = {{{1.0, 1.0}, 1.0}};
  CHECK_THROWS_AS(project(sys, "x", "x"), std::invalid_argument);
}

TEST_CASE("vertex walk is counterclockwise from the origin corner") {
  const Region2D pentagon{{{1.0, 0.0, 2.0}, {0.0, 1.0, 1.0}, {1.0, 1.0, 2.5}}, ""};
  const auto verts = vertices_2d(pentagon);
  REQUIRE(verts.size() == 5);
  CHECK(near(verts[0], 0.0, 0.0));
  CHECK(near(verts[1], 2.0, 0.0));
  CHECK(near(verts[2], 2.0, 0.5));
  CHECK(near(verts[3], 1.5, 1.0));
  CHECK(near(verts[4], 0.0, 1.0));

  // Row order cannot change the walk.
  const Region2D permuted{{{1.0, 1.0, 2.5}, {1.0, 0.0, 2.0}, {0.0, 1.0, 1.0}}, ""};
  const auto verts2 = vertices_2d(permuted);
  REQUIRE(verts2.size() == 5);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    CHECK(near(verts2[i], verts[i].x, verts[i].y));
  }
}

TEST_CASE("degenerate regions") {
  // A single point.
  const Region2D origin_only{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}, ""};
  const auto verts = vertices_2d(origin_only);
  REQUIRE(verts.size() == 1);
  CHECK(near(verts[0], 0.0, 0.0));
  CHECK(symmetric_max(origin_only).empty);

  // Constant false row: empty region, no vertices.
  const Region2D empty{{{0.0, 0.0, -1.0}}, ""};
  CHECK(vertices_2d(empty).empty());
  CHECK_FALSE(contains(empty, {0.0, 0.0}));

  // Unbounded along an axis or a diagonal.
  CHECK_THROWS_AS(vertices_2d(Region2D{{{1.0, 0.0, 1.0}}, ""}), std::domain_error);
  CHECK_THROWS_AS(vertices_2d(Region2D{{}, ""}), std::domain_error);
  CHECK_THROWS_AS(symmetric_max(Region2D{{{1.0, -1.0, 0.0}}, ""}), std::domain_error);
}

TEST_CASE("redundant rows are dropped without changing the region") {
  const Region2D crowded{{{1.0, 1.0, 2.0},
                          {1.0, 0.0, 5.0},
                          {0.0, 1.0, 5.0},
                          {1.0, 1.0, 3.0},
                          {0.0, 0.0, 4.0}},
                         "crowded"};
  const Region2D minimal = remove_redundant(crowded);
  REQUIRE(minimal.rows.size() == 1);
  CHECK(minimal.rows[0].a == doctest::Approx(1.0));
  CHECK(minimal.rows[0].b == doctest::Approx(1.0));
  CHECK(minimal.rows[0].c == doctest::Approx(2.0));
  CHECK(minimal.label == "crowded");
  CHECK(region_deviation(minimal, crowded) <= 1e-12);

  // Binding rows survive.
  const Region2D pentagon{{{1.0, 0.0, 2.0}, {0.0, 1.0, 1.0}, {1.0, 1.0, 2.5}}, ""};
  CHECK(remove_redundant(pentagon).rows.size() == 3);

  // Infeasibility is preserved canonically.
  const Region2D empty = remove_redundant(Region2D{{{0.0, 0.0, -1.0}}, ""});
  CHECK(vertices_2d(empty).empty());
}

TEST_CASE("symmetric maximum handles all boundary shapes") {
  // Bounded from above only.
  const Region2D box{{{1.0, 0.0, 2.0}, {0.0, 1.0, 1.0}, {1.0, 1.0, 2.5}}, ""};
  CHECK(symmetric_max(box).value == doctest::Approx(1.0));
  CHECK_FALSE(symmetric_max(box).empty);

  // A lower bound on the diagonal does not move the maximum.
  const Region2D ring{{{-1.0, -1.0, -0.4}, {1.0, 0.0, 1.0}, {0.0, 1.0, 1.0}}, ""};
  CHECK(symmetric_max(ring).value == doctest::Approx(1.0));

  // Lower bound above the upper bound: nothing symmetric is feasible.
  const Region2D squeezed{{{-1.0, -1.0, -3.0}, {1.0, 0.0, 1.0}, {0.0, 1.0, 1.0}}, ""};
  CHECK(symmetric_max(squeezed).value == 0.0);
  CHECK(symmetric_max(squeezed).empty);

  // Sum bound through the origin.
  const Region2D pinched{{{1.0, 1.0, 0.0}}, ""};
  CHECK(symmetric_max(pinched).value == 0.0);
  CHECK(symmetric_max(pinched).empty);
}

TEST_CASE("region comparison quantifies mismatch") {
  const Region2D triangle{{{1.0, 1.0, 1.0}}, ""};
  const Region2D same{{{2.0, 2.0, 2.0}}, ""};
  const Region2D bigger{{{1.0, 1.0, 1.2}}, ""};

  CHECK(regions_equal(triangle, same));
  CHECK(region_deviation(triangle, same) <= 1e-12);

  CHECK_FALSE(regions_equal(triangle, bigger, 1e-3));
  const double gap = region_deviation(triangle, bigger);
  // Corner (1.2, 0) sits exactly 0.2 outside the smaller triangle.
  CHECK(gap == doctest::Approx(0.2).epsilon(1e-9));

  const Region2D empty{{{0.0, 0.0, -1.0}}, ""};
  CHECK(std::isinf(region_deviation(triangle, empty)));
  CHECK(region_deviation(empty, empty) == 0.0);
  CHECK_FALSE(regions_equal(triangle, empty));
}

TEST_CASE("containment honors the implicit quadrant") {
  const Region2D open{{}, ""};
  CHECK(contains(open, {5.0, 7.0}));
  CHECK_FALSE(contains(open, {-0.1, 0.5}));
  CHECK_FALSE(contains(open, {0.5, -0.1}));
  CHECK(contains(open, {-0.5e-10, 0.0}));  // within tolerance of the axis
}
