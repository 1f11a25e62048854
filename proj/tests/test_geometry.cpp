#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "kansa/geometry.hpp"

using namespace kansa;

TEST_CASE("tensor_grid node layout and counts") {
  for (int n : {3, 5, 11}) {
    CAPTURE(n);
    const CollocationSet grid = tensor_grid(n);
    CHECK(grid.size() == n * n);
    CHECK(grid.interior_count() == (n - 2) * (n - 2));
    CHECK(grid.boundary_count() == 4 * (n - 1));
    CHECK_FALSE(grid.tagged());

    // Lexicographic order: index i*n + j holds (i/(n-1), j/(n-1)) exactly.
    const double h = 1.0 / (n - 1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Vec2& p = grid.points[i * n + j];
        CHECK(p.x() == i * h);
        CHECK(p.y() == j * h);
      }
    }

    // interior/boundary form a partition of all indices.
    std::set<int> seen(grid.interior.begin(), grid.interior.end());
    seen.insert(grid.boundary.begin(), grid.boundary.end());
    CHECK(static_cast<int>(seen.size()) == n * n);
    for (int idx : grid.interior) {
      const Vec2& p = grid.points[idx];
      CHECK(p.x() > 0.0);
      CHECK(p.x() < 1.0);
      CHECK(p.y() > 0.0);
      CHECK(p.y() < 1.0);
    }
    for (int idx : grid.boundary) {
      const Vec2& p = grid.points[idx];
      CHECK((p.x() == 0.0 || p.x() == 1.0 || p.y() == 0.0 || p.y() == 1.0));
    }
  }
}

TEST_CASE("tensor_grid edge coordinates are exact and nodes are distinct") {
  const int n = 5;
  const CollocationSet grid = tensor_grid(n);
  double min_dist = 1e300;
  for (int u = 0; u < grid.size(); ++u) {
    for (int v = u + 1; v < grid.size(); ++v) {
      min_dist = std::min(min_dist, (grid.points[u] - grid.points[v]).norm());
    }
  }
  // Closest neighbors are one mesh width apart, so no duplicates.
  CHECK(min_dist == 0.25);
}

TEST_CASE("tensor_grid rejects grids without interior") {
  CHECK_THROWS_AS(tensor_grid(2), std::invalid_argument);
  CHECK_THROWS_AS(tensor_grid(1), std::invalid_argument);
  CHECK_THROWS_AS(tensor_grid(0), std::invalid_argument);
  CHECK_THROWS_AS(tensor_grid(-4), std::invalid_argument);
}

TEST_CASE("classify with the all-Dirichlet partition") {
  const CollocationSet grid = classify(tensor_grid(5), all_dirichlet_square());
  CHECK(grid.tagged());
  for (int idx : grid.boundary) {
    CHECK(grid.tags[idx] == BoundaryTag::Dirichlet);
    CHECK_FALSE(grid.normals[idx].has_value());
  }
  for (int idx : grid.interior) {
    CHECK(grid.tags[idx] == BoundaryTag::Interior);
    CHECK_FALSE(grid.normals[idx].has_value());
  }
}

TEST_CASE("classify with the mixed partition tags edges and corners") {
  const int n = 6;
  const CollocationSet grid = classify(tensor_grid(n), mixed_square());
  int dirichlet = 0, neumann = 0;
  for (int idx : grid.boundary) {
    const Vec2& q = grid.points[idx];
    if (grid.tags[idx] == BoundaryTag::Dirichlet) {
      ++dirichlet;
      // Dirichlet portion is the two x1 edges, corners included.
      CHECK((q.x() == 0.0 || q.x() == 1.0));
      CHECK_FALSE(grid.normals[idx].has_value());
    } else {
      ++neumann;
      CHECK(grid.tags[idx] == BoundaryTag::Neumann);
      CHECK((q.y() == 0.0 || q.y() == 1.0));
      CHECK(q.x() > 0.0);
      CHECK(q.x() < 1.0);
      REQUIRE(grid.normals[idx].has_value());
      const Vec2 nu = *grid.normals[idx];
      CHECK(nu.x() == 0.0);
      CHECK(nu.y() == (q.y() == 0.0 ? -1.0 : 1.0));
    }
  }
  CHECK(dirichlet == 2 * n);
  CHECK(neumann == 2 * (n - 2));
}

TEST_CASE("classify is idempotent") {
  const CollocationSet once = classify(tensor_grid(5), mixed_square());
  const CollocationSet twice = classify(once, mixed_square());
  REQUIRE(twice.tags.size() == once.tags.size());
  for (int idx = 0; idx < once.size(); ++idx) {
    CHECK(once.tags[idx] == twice.tags[idx]);
    CHECK(once.normals[idx].has_value() == twice.normals[idx].has_value());
    if (once.normals[idx]) CHECK(*once.normals[idx] == *twice.normals[idx]);
  }
}

TEST_CASE("classify rejects inconsistent partitions") {
  BoundaryPartitionSpec gap;  // leaves three edges unclaimed
  gap.on_dirichlet = [](const Vec2& q) { return q.x() == 0.0; };
  gap.on_neumann = [](const Vec2&) { return false; };
  gap.outward_normal = square_outward_normal;
  CHECK_THROWS_AS(classify(tensor_grid(4), gap), std::invalid_argument);

  BoundaryPartitionSpec overlap;  // claims the whole boundary twice
  overlap.on_dirichlet = [](const Vec2&) { return true; };
  overlap.on_neumann = [](const Vec2&) { return true; };
  overlap.outward_normal = square_outward_normal;
  CHECK_THROWS_AS(classify(tensor_grid(4), overlap), std::invalid_argument);
}

TEST_CASE("Neumann normals point out of the square") {
  const CollocationSet grid = classify(tensor_grid(7), mixed_square());
  const double eps = 1e-6;
  for (int idx : grid.boundary) {
    if (!grid.normals[idx]) continue;
    const Vec2 outside = grid.points[idx] + eps * *grid.normals[idx];
    const bool left = outside.x() < 0.0 || outside.x() > 1.0 || outside.y() < 0.0 ||
                      outside.y() > 1.0;
    CHECK(left);
  }
}

TEST_CASE("square_outward_normal covers edges and rejects interior points") {
  CHECK(square_outward_normal({0.0, 0.4}) == Vec2(-1.0, 0.0));
  CHECK(square_outward_normal({1.0, 0.7}) == Vec2(1.0, 0.0));
  CHECK(square_outward_normal({0.3, 0.0}) == Vec2(0.0, -1.0));
  CHECK(square_outward_normal({0.6, 1.0}) == Vec2(0.0, 1.0));
  // Corners resolve to the x-edge normal.
  CHECK(square_outward_normal({0.0, 0.0}) == Vec2(-1.0, 0.0));
  CHECK(square_outward_normal({1.0, 1.0}) == Vec2(1.0, 0.0));
  CHECK_THROWS_AS(square_outward_normal({0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("hand-built single-node set satisfies the accessors") {
  CollocationSet one;
  one.points = {Vec2(0.3, 0.0)};
  one.boundary = {0};
  one.tags = {BoundaryTag::Dirichlet};
  one.normals = {std::nullopt};
  CHECK(one.size() == 1);
  CHECK(one.interior_count() == 0);
  CHECK(one.boundary_count() == 1);
  CHECK(one.tagged());
  CHECK(one.boundary_point(0) == Vec2(0.3, 0.0));
}
