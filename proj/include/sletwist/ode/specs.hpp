#pragma once

// Coefficient functions of the hypergeometric-type equations satisfied by
// the closed forms, as callable specs for finite-difference residual checks
// and contour continuation.

#include <complex>
#include <functional>
#include <string>

#include "sletwist/cft/params.hpp"

namespace sletwist {

// F'' + p F' + q F = 0
struct OdeSpec {
  std::string label;
  std::function<cplx(cplx)> p, q;
};

// F''' + p2 F'' + p1 F' + p0 F = 0
struct Ode3Spec {
  std::string label;
  std::function<cplx(cplx)> p2, p1, p0;
};

// equation for the bulk twist-pair blocks F11 / F31:
//   F'' + [(8-2k)-(8-k)x] / (4x(1-x)) F' - k(8-k) / (64(1-x)^2) F = 0
inline OdeSpec bulk_block_ode(double kappa) {
  check_kappa_range(kappa);
  return OdeSpec{
      "bulk-twist-block",
      [kappa](cplx x) {
        return ((8.0 - 2.0 * kappa) - (8.0 - kappa) * x) /
               (4.0 * x * (1.0 - x));
      },
      [kappa](cplx x) {
        const cplx w = 1.0 - x;
        return -kappa * (8.0 - kappa) / (64.0 * w * w);
      }};
}

// the two equations with common solution (2-x)/(2 sqrt(1-x))
inline OdeSpec single_twist_ode_a(double kappa) {
  check_kappa_range(kappa);
  return OdeSpec{
      "single-twist-a",
      [kappa](cplx x) {
        return (2.0 * (4.0 - kappa) - (8.0 - kappa) * x) /
               (4.0 * x * (1.0 - x));
      },
      [kappa](cplx x) {
        const cplx w = 1.0 - x;
        return -(6.0 - kappa) / (8.0 * w * w);
      }};
}

inline OdeSpec single_twist_ode_b(double kappa) {
  check_kappa_range(kappa);
  return OdeSpec{
      "single-twist-b",
      [kappa](cplx x) {
        return -(2.0 * (4.0 - kappa) - (4.0 - 2.0 * kappa) * x) /
               (kappa * x * (1.0 - x));
      },
      [kappa](cplx x) {
        const cplx w = 1.0 - x;
        return -(3.0 * kappa - 8.0) / (4.0 * kappa * w * w);
      }};
}

// second-order member of the double-twist pair
inline OdeSpec double_twist_ode_2(double kappa) {
  check_kappa_range(kappa);
  return OdeSpec{
      "double-twist-2nd",
      [kappa](cplx x) {
        return (2.0 * (4.0 - kappa) - (8.0 - kappa) * x) /
               (4.0 * x * (1.0 - x));
      },
      [kappa](cplx x) {
        const cplx w = 1.0 - x;
        return -(8.0 - kappa) / (4.0 * w * w);
      }};
}

// third-order member of the double-twist pair
inline Ode3Spec double_twist_ode_3(double kappa) {
  check_kappa_range(kappa);
  return Ode3Spec{
      "double-twist-3rd",
      [kappa](cplx x) {
        return -2.0 * (16.0 - 3.0 * kappa + (3.0 * kappa - 8.0) * x) /
               (kappa * x * (1.0 - x));
      },
      [kappa](cplx x) {
        const cplx w = x * (1.0 - x);
        return (6.0 * (8.0 - kappa) * (4.0 - kappa) +
                4.0 * (6.0 - kappa) * (3.0 * kappa - 8.0) * x -
                (8.0 - kappa) * (3.0 * kappa - 8.0) * x * x) /
               (kappa * kappa * w * w);
      },
      [kappa](cplx x) {
        const cplx w = 1.0 - x;
        return (3.0 * kappa - 8.0) * (8.0 - kappa) * (2.0 - x) /
               (kappa * kappa * x * w * w * w);
      }};
}

}   // namespace sletwist
