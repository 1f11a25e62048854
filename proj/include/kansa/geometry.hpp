#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "kansa/point.hpp"

namespace kansa {

enum class BoundaryTag { Interior, Dirichlet, Neumann };

// Splits the boundary into a Dirichlet portion and a Neumann portion via
// membership predicates, plus the outward unit normal on the Neumann part.
// Every boundary node must satisfy exactly one of the two predicates.
struct BoundaryPartitionSpec {
  std::function<bool(const Vec2&)> on_dirichlet;
  std::function<bool(const Vec2&)> on_neumann;
  std::function<Vec2(const Vec2&)> outward_normal;
};

// Collocation nodes in a fixed global order. interior/boundary hold global
// node indices, so interior node h sits at points[interior[h]]. tags and
// normals stay empty until classify() has run.
struct CollocationSet {
  std::vector<Vec2> points;
  std::vector<int> interior;
  std::vector<int> boundary;
  std::vector<BoundaryTag> tags;
  std::vector<std::optional<Vec2>> normals;

  int size() const { return static_cast<int>(points.size()); }
  int interior_count() const { return static_cast<int>(interior.size()); }
  int boundary_count() const { return static_cast<int>(boundary.size()); }
  bool tagged() const { return !tags.empty(); }

  const Vec2& interior_point(int h) const { return points[interior[h]]; }
  const Vec2& boundary_point(int k) const { return points[boundary[k]]; }
};

// Uniform n x n grid on the unit square, nodes (i/(n-1), j/(n-1)) listed
// lexicographically (i slow, j fast). Needs n >= 3 so the interior is
// nonempty; boundary membership is decided from the grid indices, so edge
// coordinates are exact 0.0 / 1.0.
CollocationSet tensor_grid(int n);

// Returns a copy of `nodes` with every boundary node tagged Dirichlet or
// Neumann and outward normals attached to the Neumann ones. Throws if some
// boundary node matches neither portion (or both); interior nodes keep the
// Interior tag. Already-tagged input is retagged from scratch, so the call
// is idempotent.
CollocationSet classify(const CollocationSet& nodes,
                        const BoundaryPartitionSpec& partition);

// Outward unit normal of the unit square at a boundary point; corners
// resolve to the x-edge normal. Helper for the partitions below and for
// writing custom ones.
Vec2 square_outward_normal(const Vec2& q);

// The whole boundary is Dirichlet.
BoundaryPartitionSpec all_dirichlet_square();

// The x1 = 0 and x1 = 1 edges (corners included) are Dirichlet; the open
// x2 = 0 and x2 = 1 edges are Neumann with normals (0,-1) and (0,1).
BoundaryPartitionSpec mixed_square();

}  // namespace kansa
