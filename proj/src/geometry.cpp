#include "kansa/geometry.hpp"

#include <stdexcept>
#include <string>

namespace kansa {

CollocationSet tensor_grid(int n) {
  if (n < 3) {
    throw std::invalid_argument("tensor_grid: need n >= 3, got " +
                                std::to_string(n));
  }
  CollocationSet grid;
  grid.points.reserve(n * n);
  const double h = 1.0 / (n - 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      grid.points.emplace_back(i * h, j * h);
      const int idx = i * n + j;
      if (i == 0 || i == n - 1 || j == 0 || j == n - 1) {
        grid.boundary.push_back(idx);
      } else {
        grid.interior.push_back(idx);
      }
    }
  }
  return grid;
}

CollocationSet classify(const CollocationSet& nodes,
                        const BoundaryPartitionSpec& partition) {
  CollocationSet out = nodes;
  out.tags.assign(out.points.size(), BoundaryTag::Interior);
  out.normals.assign(out.points.size(), std::nullopt);
  for (int idx : out.boundary) {
    const Vec2& q = out.points[idx];
    const bool dir = partition.on_dirichlet(q);
    const bool neu = partition.on_neumann(q);
    if (dir == neu) {
      throw std::invalid_argument(
          "classify: boundary node (" + std::to_string(q.x()) + ", " +
          std::to_string(q.y()) +
          (dir ? ") lies on both boundary portions"
               : ") lies on neither boundary portion"));
    }
    if (dir) {
      out.tags[idx] = BoundaryTag::Dirichlet;
    } else {
      out.tags[idx] = BoundaryTag::Neumann;
      out.normals[idx] = partition.outward_normal(q);
    }
  }
  return out;
}

Vec2 square_outward_normal(const Vec2& q) {
  if (q.x() == 0.0) return {-1.0, 0.0};
  if (q.x() == 1.0) return {1.0, 0.0};
  if (q.y() == 0.0) return {0.0, -1.0};
  if (q.y() == 1.0) return {0.0, 1.0};
  throw std::invalid_argument("square_outward_normal: point is not on the boundary");
}

BoundaryPartitionSpec all_dirichlet_square() {
  BoundaryPartitionSpec spec;
  spec.on_dirichlet = [](const Vec2&) { return true; };
  spec.on_neumann = [](const Vec2&) { return false; };
  spec.outward_normal = square_outward_normal;
  return spec;
}

BoundaryPartitionSpec mixed_square() {
  BoundaryPartitionSpec spec;
  // Corners belong to the (closed) Dirichlet edges, keeping the two
  // portions disjoint.
  spec.on_dirichlet = [](const Vec2& q) { return q.x() == 0.0 || q.x() == 1.0; };
  spec.on_neumann = [](const Vec2& q) {
    return (q.y() == 0.0 || q.y() == 1.0) && q.x() > 0.0 && q.x() < 1.0;
  };
  spec.outward_normal = square_outward_normal;
  return spec;
}

}  // namespace kansa
