#pragma once

// Boundary correlators in the chordal geometry: a single bulk twist with two
// boundary 1-leg operators, and with two boundary 2-leg operators (double
// curve).  Strip forms are the canonical real expressions.

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "sletwist/cft/params.hpp"
#include "sletwist/correlators/blocks.hpp"
#include "sletwist/errors.hpp"

namespace sletwist {

namespace detail {

inline void check_strip_angle(double v, bool closed, const char* who) {
  const bool ok = closed ? (v >= 0.0 && v <= std::numbers::pi)
                         : (v > 0.0 && v < std::numbers::pi);
  if (!ok) {
    std::ostringstream os;
    os << who << ": strip angle v=" << v << " outside "
       << (closed ? "[0,pi]" : "(0,pi)");
    throw domain_error(os.str());
  }
}

}   // namespace detail

// < phi21 phi12 phi12 > reduced function: F(x) = (2-x) / (2 sqrt(1-x))
inline cplx boundary_single_twist(cplx x) {
  x = detail::nudge_off_cut(x);
  return (2.0 - x) / (2.0 * std::sqrt(detail::one_minus(x)));
}

// strip form: cos(v), independent of kappa
inline double boundary_single_twist_strip(double v) {
  detail::check_strip_angle(v, /*closed=*/false, "boundary_single_twist_strip");
  return std::cos(v);
}

// < phi21 phi13 phi13 > reduced function:
//   F(x) = 1 + (8-k)/(6-k) * x^2 / (4(1-x))
inline cplx boundary_double_twist(cplx x, double kappa) {
  check_kappa_range(kappa);
  if (std::abs(kappa - 6.0) < 1e-12)
    throw domain_error("boundary_double_twist: kappa=6 pole in (8-k)/(6-k)");
  x = detail::nudge_off_cut(x);
  return 1.0 + (8.0 - kappa) / (6.0 - kappa) * x * x /
                   (4.0 * detail::one_minus(x));
}

// strip form: 1 - ((8-k)/(6-k)) sin^2(v)
inline double boundary_double_twist_strip(double v, double kappa) {
  check_kappa_range(kappa);
  if (std::abs(kappa - 6.0) < 1e-12)
    throw domain_error("boundary_double_twist_strip: kappa=6 pole");
  detail::check_strip_angle(v, /*closed=*/false, "boundary_double_twist_strip");
  const double s = std::sin(v);
  return 1.0 - (8.0 - kappa) / (6.0 - kappa) * s * s;
}

// P_n(u) = Z_n/Z = (4/5) sin^2(v): chance the twist point lies between the
// two curves of a double SLE_{8/3}
inline double double_twist_between_prob(double v) {
  detail::check_strip_angle(v, /*closed=*/false, "double_twist_between_prob");
  const double s = std::sin(v);
  return 0.8 * s * s;
}

// P_p(v) = (1+cos v)/2 = cos^2(v/2): left-passage probability at kappa=8/3
inline double schramm_left_passage(double v) {
  detail::check_strip_angle(v, /*closed=*/true, "schramm_left_passage");
  const double c = std::cos(0.5 * v);
  return c * c;
}

}   // namespace sletwist
