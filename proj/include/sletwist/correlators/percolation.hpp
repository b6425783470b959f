#pragma once

// Percolation six-point function: four boundary SLE_6 operators and one bulk
// 4-leg operator, in the B2 fusion channel.

#include <cmath>
#include <complex>
#include <sstream>

#include "sletwist/errors.hpp"
#include "sletwist/geom/conformal.hpp"

namespace sletwist {

// Im(z)^{3/4} prod_{i<j}(x_j-x_i)^{1/3} / prod_i |z-x_i|
inline double percolation_6pt(cplx z, double x1, double x2, double x3,
                              double x4) {
  detail::check_interior(z, "percolation_6pt");
  if (!(x1 < x2 && x2 < x3 && x3 < x4)) {
    std::ostringstream os;
    os << "percolation_6pt: boundary points must satisfy x1<x2<x3<x4, got ("
       << x1 << ", " << x2 << ", " << x3 << ", " << x4 << ")";
    throw domain_error(os.str());
  }
  const double xs[4] = {x1, x2, x3, x4};
  double gaps = 1.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) gaps *= std::cbrt(xs[j] - xs[i]);
  double dist = 1.0;
  for (double xi : xs) dist *= std::abs(z - xi);
  return std::pow(z.imag(), 0.75) * gaps / dist;
}

}   // namespace sletwist
