#pragma once

#include <string>

#include "kansa/point.hpp"

namespace kansa {

enum class RadialFamily { TPS, RP };

const char* to_string(RadialFamily family);            // "TPS" / "RP"
RadialFamily radial_family_from_string(const std::string& name);

// Polyharmonic spline basis function centered at a point A:
//
//   TPS:  phi(r) = r^k log r,  k even, k >= 4
//   RP :  phi(r) = r^k,        k odd,  k >= 3
//
// The exponent bounds keep phi twice continuously differentiable across
// r = 0, which is what the second-order collocation rows need. The
// constructor rejects any other (family, k) combination.
class RadialKernel {
 public:
  RadialKernel(RadialFamily family, int exponent);

  RadialFamily family() const { return family_; }
  int exponent() const { return exponent_; }
  const char* family_name() const;  // "TPS" or "RP"

 private:
  RadialFamily family_;
  int exponent_;
};

// The three radial factors every derived quantity is built from, evaluated
// together so the hot assembly loop pays for one log and one power per
// (point, center) pair:
//
//   value        = phi(r)
//   slope_over_r = phi'(r) / r
//   hess_tail    = phi''(r) - phi'(r) / r
//
// All three tend to 0 as r -> 0 for admissible exponents, and radial_parts
// returns exact zeros there, so coincident point/center pairs are safe.
struct RadialParts {
  double value;
  double slope_over_r;
  double hess_tail;
};

RadialParts radial_parts(const RadialKernel& kernel, double r);

double phi(const RadialKernel& kernel, double r);
double phi_prime_over_r(const RadialKernel& kernel, double r);
double phi_dd_minus_phi_prime_over_r(const RadialKernel& kernel, double r);

// Second partial d^2/dx_i dx_j of phi(||p - a||) with respect to p, built
// from precomputed radial parts:
//
//   H_ij = delta_ij phi'/r + (p_i - a_i)(p_j - a_j) / r^2 * hess_tail
//
// The direction cosines are formed as (diff_i / r)(diff_j / r) so the
// expression stays finite for denormal r; below 1e-300 the entry is the
// analytic limit 0.
inline double hessian_entry_from_parts(const RadialParts& parts, const Vec2& diff,
                                       double r, int i, int j) {
  if (r < 1e-300) return 0.0;
  const double qi = diff[i] / r;
  const double qj = diff[j] / r;
  const double kron = (i == j) ? 1.0 : 0.0;
  return kron * parts.slope_over_r + qi * qj * parts.hess_tail;
}

// Standalone versions of the derived quantities. i, j are 0-based.
double hessian_entry(const RadialKernel& kernel, const Vec2& p, const Vec2& a,
                     int i, int j);
Vec2 gradient(const RadialKernel& kernel, const Vec2& p, const Vec2& a);

// <q - a, nu> phi'(r)/r for a unit direction nu (checked to 1e-12).
double normal_derivative(const RadialKernel& kernel, const Vec2& q, const Vec2& a,
                         const Vec2& nu);

}  // namespace kansa
