#include "kansa/random_centers.hpp"

#include <stdexcept>

namespace kansa {

namespace {

// splitmix64: tiny counter-based generator with full 64-bit avalanche.
// Chosen over std::mt19937 so streams keyed by (seed, stream_id) are cheap
// to construct and the byte-exact output does not depend on any library's
// distribution internals.
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    return mix64(state);
  }
};

// Uniform on the open interval (0, 1): top 53 bits, offset half a step.
inline double unit_open(std::uint64_t bits) {
  return ((bits >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

std::vector<Vec2> perturb_centers(const CollocationSet& grid,
                                  const CenterGenerator& gen) {
  if (!(gen.delta >= 0.0)) {
    throw std::invalid_argument("perturb_centers: delta must be >= 0");
  }
  SplitMix64 rng{mix64(mix64(gen.seed) ^ (gen.stream_id + 0x632BE59BD9B4E019ULL))};
  std::vector<Vec2> centers;
  centers.reserve(grid.points.size());
  for (const Vec2& y : grid.points) {
    // x offset first, then y, in node order; delta = 0 yields exact zeros.
    const double ux = gen.delta * (2.0 * unit_open(rng.next()) - 1.0);
    const double uy = gen.delta * (2.0 * unit_open(rng.next()) - 1.0);
    centers.emplace_back(y.x() + ux, y.y() + uy);
  }
  return centers;
}

}  // namespace kansa
