#pragma once

// Winding distribution of a chordal SLE_{8/3} with respect to two marked
// interior points, in strip variables (vA, vB, sigma).  Half-plane entry
// points convert first.  Also the two-block solution space H(sigma,tau) and
// the sigma=0 / sigma=1 block frames of the crossing identity.

#include <cmath>
#include <complex>
#include <sstream>

#include "sletwist/correlators/boundary.hpp"
#include "sletwist/errors.hpp"
#include "sletwist/geom/conformal.hpp"
#include "sletwist/special/gamma.hpp"
#include "sletwist/special/hyp2f1.hpp"

namespace sletwist {

namespace detail {

inline const Hyp2F1Params& winding_2f1_params() {
  static const Hyp2F1Params p(1.0, 4.0 / 3.0, 5.0 / 3.0);
  return p;
}

inline void check_sigma_range(double sigma, const char* who) {
  if (!(sigma >= 0.0 && sigma <= 1.0)) {
    std::ostringstream os;
    os << who << ": sigma=" << sigma << " outside [0,1]";
    throw domain_error(os.str());
  }
}

// G(5/3)G(2/3)/G(4/3), coefficient of the sigma^{1/3} block
inline double winding_b2_coefficient() {
  static const double c = gamma_real(5.0 / 3.0) * gamma_real(2.0 / 3.0) /
                          gamma_real(4.0 / 3.0);
  return c;
}

}   // namespace detail

// W(sigma) = 1 - sigma 2F1(1,4/3;5/3;1-sigma).  For sigma <= 1/2 the
// crossing-transformed form 1 + sigma 2F1(1,4/3;5/3;sigma)
//   - G(5/3)G(2/3)/G(4/3) sigma^{1/3}(1-sigma)^{-2/3}
// keeps the argument of the series small on both sides.
inline double winding_w(double sigma) {
  detail::check_sigma_range(sigma, "winding_w");
  const Hyp2F1Params& p = detail::winding_2f1_params();
  if (sigma <= 0.5) {
    const double f = hyp2f1(p, cplx(sigma)).real();
    return 1.0 + sigma * f -
           detail::winding_b2_coefficient() * std::cbrt(sigma) *
               std::pow(1.0 - sigma, -2.0 / 3.0);
  }
  return 1.0 - sigma * hyp2f1(p, cplx(1.0 - sigma)).real();
}

// ---------------------------------------------------------------------------
// four-state winding distribution
// ---------------------------------------------------------------------------

struct WindingDistribution {
  double p_ab;   // curve passes below both A and B
  double p_a;    // below A only
  double p_b;    // below B only
  double p_o;    // below neither
};

inline WindingDistribution winding_probs(double vA, double vB, double sigma) {
  detail::check_strip_angle(vA, /*closed=*/true, "winding_probs (vA)");
  detail::check_strip_angle(vB, /*closed=*/true, "winding_probs (vB)");
  detail::check_sigma_range(sigma, "winding_probs");
  const double cA = std::cos(vA), cB = std::cos(vB);
  const double sA = std::sin(vA), sB = std::sin(vB);
  const double cross = sA * sB * winding_w(sigma);
  return WindingDistribution{
      0.25 * ((1.0 + cA) * (1.0 + cB) + cross),
      0.25 * ((1.0 + cA) * (1.0 - cB) - cross),
      0.25 * ((1.0 - cA) * (1.0 + cB) - cross),
      0.25 * ((1.0 - cA) * (1.0 - cB) + cross)};
}

// sigma = (zB-zA)(conj zB - conj zA) / ((zB - conj zA)(conj zB - zA))
inline double winding_sigma_halfplane(cplx zA, cplx zB) {
  detail::check_interior(zA, "winding_sigma_halfplane (zA)");
  detail::check_interior(zB, "winding_sigma_halfplane (zB)");
  return std::norm(zB - zA) / std::norm(zB - std::conj(zA));
}

// distribution for a half-plane curve from 0 to infinity; v = arg z
inline WindingDistribution winding_probs_halfplane(cplx zA, cplx zB) {
  const double sigma = winding_sigma_halfplane(zA, zB);
  return winding_probs(std::arg(zA), std::arg(zB), sigma);
}

// double left-passage probability with respect to zA, zB
inline double pll_halfplane(cplx zA, cplx zB) {
  return winding_probs_halfplane(zA, zB).p_ab;
}

// ---------------------------------------------------------------------------
// solution space H(sigma,tau) and crossing-frame blocks
// ---------------------------------------------------------------------------

// H = c1 (1 + tau W(sigma)) + c2 tau (sigma/(1-sigma)^2)^{1/3}, evaluated
// through rho*H with tau = rho_tau/rho so the tan-product never overflows
inline double h_general(double sigma, double rho, double rho_tau, double c1,
                        double c2) {
  detail::check_sigma_range(sigma, "h_general");
  if (rho == 0.0)
    throw domain_error("h_general: rho=0 (tau undefined; use block frame)");
  if (sigma == 1.0 && c2 != 0.0)
    throw domain_error(
        "h_general: second block diverges at sigma=1 with c2 != 0");
  double rho_h = c1 * (rho + rho_tau * winding_w(sigma));
  if (c2 != 0.0)
    rho_h += c2 * rho_tau * std::cbrt(sigma / ((1.0 - sigma) * (1.0 - sigma)));
  return rho_h / rho;
}

// sigma=1 frame: B1 = rho + rho tau W(sigma)
inline double winding_block_b1(double rho, double rho_tau, double sigma) {
  detail::check_sigma_range(sigma, "winding_block_b1");
  return rho + rho_tau * winding_w(sigma);
}

// sigma=0 frame: B2 = G(5/3)G(2/3)/G(4/3) rho tau sigma^{1/3}(1-sigma)^{-2/3}
inline double winding_block_b2(double rho, double rho_tau, double sigma) {
  detail::check_sigma_range(sigma, "winding_block_b2");
  (void)rho;
  return detail::winding_b2_coefficient() * rho_tau * std::cbrt(sigma) *
         std::pow(1.0 - sigma, -2.0 / 3.0);
}

// sigma=0 frame: B3 = rho + rho tau (1 + sigma 2F1(1,4/3;5/3;sigma))
inline double winding_block_b3(double rho, double rho_tau, double sigma) {
  detail::check_sigma_range(sigma, "winding_block_b3");
  const double f = hyp2f1(detail::winding_2f1_params(), cplx(sigma)).real();
  return rho + rho_tau * (1.0 + sigma * f);
}

}   // namespace sletwist
