#pragma once

#include <Eigen/Core>

namespace kansa {

// Planar point / direction. The shipped geometry and experiments are 2D.
using Vec2 = Eigen::Vector2d;

inline constexpr int kDim = 2;

}  // namespace kansa
