#include "kansa/polyharmonic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kansa {

namespace {

// r^e by repeated multiplication; exponents here are tiny (k <= ~10) and
// std::pow would dominate the assembly cost.
double ipow(double r, int e) {
  double v = 1.0;
  for (int i = 0; i < e; ++i) v *= r;
  return v;
}

}  // namespace

RadialKernel::RadialKernel(RadialFamily family, int exponent)
    : family_(family), exponent_(exponent) {
  if (family == RadialFamily::TPS) {
    if (exponent < 4 || exponent % 2 != 0) {
      throw std::invalid_argument("TPS exponent must be even and >= 4, got " +
                                  std::to_string(exponent));
    }
  } else {
    if (exponent < 3 || exponent % 2 == 0) {
      throw std::invalid_argument("RP exponent must be odd and >= 3, got " +
                                  std::to_string(exponent));
    }
  }
}

const char* to_string(RadialFamily family) {
  return family == RadialFamily::TPS ? "TPS" : "RP";
}

RadialFamily radial_family_from_string(const std::string& name) {
  if (name == "TPS") return RadialFamily::TPS;
  if (name == "RP") return RadialFamily::RP;
  throw std::invalid_argument("unknown radial family '" + name + "' (expected TPS or RP)");
}

const char* RadialKernel::family_name() const { return to_string(family_); }

RadialParts radial_parts(const RadialKernel& kernel, double r) {
  if (r == 0.0) return {0.0, 0.0, 0.0};
  const int k = kernel.exponent();
  const double rk2 = ipow(r, k - 2);
  if (kernel.family() == RadialFamily::TPS) {
    const double lr = std::log(r);
    return {rk2 * r * r * lr,
            rk2 * (k * lr + 1.0),
            rk2 * (k * (k - 2) * lr + 2 * k - 2)};
  }
  return {rk2 * r * r,
          k * rk2,
          k * (k - 2) * rk2};
}

double phi(const RadialKernel& kernel, double r) {
  return radial_parts(kernel, r).value;
}

double phi_prime_over_r(const RadialKernel& kernel, double r) {
  return radial_parts(kernel, r).slope_over_r;
}

double phi_dd_minus_phi_prime_over_r(const RadialKernel& kernel, double r) {
  return radial_parts(kernel, r).hess_tail;
}

double hessian_entry(const RadialKernel& kernel, const Vec2& p, const Vec2& a,
                     int i, int j) {
  if (i < 0 || i >= kDim || j < 0 || j >= kDim) {
    throw std::out_of_range("hessian_entry: index out of range");
  }
  const Vec2 diff = p - a;
  const double r = diff.norm();
  return hessian_entry_from_parts(radial_parts(kernel, r), diff, r, i, j);
}

Vec2 gradient(const RadialKernel& kernel, const Vec2& p, const Vec2& a) {
  const Vec2 diff = p - a;
  const double r = diff.norm();
  // slope_over_r is exactly 0 at r = 0, so no separate branch is needed.
  return diff * radial_parts(kernel, r).slope_over_r;
}

double normal_derivative(const RadialKernel& kernel, const Vec2& q, const Vec2& a,
                         const Vec2& nu) {
  if (std::abs(nu.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("normal_derivative: nu must be a unit vector");
  }
  const Vec2 diff = q - a;
  const double r = diff.norm();
  return diff.dot(nu) * radial_parts(kernel, r).slope_over_r;
}

}  // namespace kansa
