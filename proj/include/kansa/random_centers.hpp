#pragma once

#include <cstdint>
#include <vector>

#include "kansa/geometry.hpp"
#include "kansa/point.hpp"

namespace kansa {

// Recipe for one draw of fictitious centers: each grid node is shifted by
// an independent per-coordinate offset uniform on (-delta, delta). The
// (seed, stream_id) pair fully determines the draw, bit for bit, on any
// platform; experiments use stream_id = trial index so trials can run in
// any order or in parallel. delta = 0 returns the grid nodes unchanged.
struct CenterGenerator {
  double delta = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

std::vector<Vec2> perturb_centers(const CollocationSet& grid,
                                  const CenterGenerator& gen);

}  // namespace kansa
