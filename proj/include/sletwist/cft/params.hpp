#pragma once

// Model constants for the O(n)/SLE dictionary: kappa <-> n map, central
// charge, Kac weights and the named operator weights.

#include <cmath>
#include <numbers>
#include <sstream>

#include "sletwist/errors.hpp"

namespace sletwist {

inline void check_kappa_range(double kappa) {
  if (!(kappa > 0.0 && kappa < 8.0)) {
    std::ostringstream os;
    os << "kappa must lie in (0,8), got " << kappa;
    throw domain_error(os.str());
  }
}

inline double n_from_kappa(double kappa) {
  check_kappa_range(kappa);
  return 2.0 * std::cos((kappa - 4.0) * std::numbers::pi / kappa);
}

inline double c_from_kappa(double kappa) {
  check_kappa_range(kappa);
  return (6.0 - kappa) * (3.0 * kappa - 8.0) / (2.0 * kappa);
}

// h_{2,1} = (3 kappa - 8)/16, weight of the one-leg twist operator
inline double twist_weight(double kappa) {
  check_kappa_range(kappa);
  return (3.0 * kappa - 8.0) / 16.0;
}

// h_{0,1} = (8 - kappa)/16, bulk two-leg weight
inline double two_leg_weight(double kappa) {
  check_kappa_range(kappa);
  return (8.0 - kappa) / 16.0;
}

// h_{1,N+1} = N(4 + 2N - kappa)/(2 kappa), boundary N-leg weight
inline double boundary_nleg_weight(double kappa, int N) {
  check_kappa_range(kappa);
  if (N < 1) throw domain_error("boundary_nleg_weight: N must be >= 1");
  return N * (4.0 + 2.0 * N - kappa) / (2.0 * kappa);
}

struct ModelParams {
  double kappa;   // primary parameter; n and c are always derived from it
  double n;
  double c;
  bool dilute;    // kappa in (2,4)

  explicit ModelParams(double kappa_)
      : kappa(kappa_),
        n(n_from_kappa(kappa_)),
        c(c_from_kappa(kappa_)),
        dilute(kappa_ > 2.0 && kappa_ < 4.0) {}
};

// h_{r,s} = ((kappa r - 4s)^2 - (kappa-4)^2) / (16 kappa); r, s may be
// non-integer (the h_{0,1} and h_{1/2,0} entries of the extended table)
inline double kac_weight(double kappa, double r, double s) {
  check_kappa_range(kappa);
  const double u = kappa * r - 4.0 * s;
  const double v = kappa - 4.0;
  return (u * u - v * v) / (16.0 * kappa);
}

inline double kac_weight(const ModelParams& p, double r, double s) {
  return kac_weight(p.kappa, r, s);
}

}   // namespace sletwist
