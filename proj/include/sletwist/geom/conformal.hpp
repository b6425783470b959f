#pragma once

// Coordinate plumbing: half-plane <-> strip map anchored at the curve
// endpoints, and the winding coordinate systems (lambda,mu,nu) / (rho,sigma,tau).
//
// Strip convention: s = u + iv = log((z-x1)/(x2-z)) (plain log(z-x1) when x2
// is at infinity), so v in (0,pi) with v -> 0 on the boundary between the
// anchors and cos v reproducing the lambda/mu cross-ratio expressions.

#include <cmath>
#include <complex>
#include <sstream>

#include "sletwist/errors.hpp"

namespace sletwist {

using cplx = std::complex<double>;

struct Anchors {
  double x1 = 0.0;
  double x2 = 0.0;
  bool at_infinity = false;   // x2 is the point at infinity

  static Anchors finite(double x1, double x2) { return {x1, x2, false}; }
  static Anchors half_line(double x1) { return {x1, 0.0, true}; }
};

namespace detail {

inline void check_interior(cplx z, const char* who) {
  if (!(z.imag() > 0.0)) {
    std::ostringstream os;
    os << who << ": point must lie in the open upper half-plane, got "
       << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    throw domain_error(os.str());
  }
}

inline void check_anchors(const Anchors& a) {
  if (!a.at_infinity && a.x1 == a.x2)
    throw domain_error("anchors: x1 and x2 must be distinct");
}

// image of z under the anchor-normalizing Moebius map (x1 -> 0, x2 -> inf)
inline cplx anchor_map(cplx z, const Anchors& a) {
  return a.at_infinity ? z - a.x1 : (z - a.x1) / (a.x2 - z);
}

}   // namespace detail

inline cplx strip_from_halfplane(cplx z, const Anchors& a) {
  detail::check_interior(z, "strip_from_halfplane");
  detail::check_anchors(a);
  const cplx s = std::log(detail::anchor_map(z, a));
  return {s.real(), std::abs(s.imag())};   // v in (0,pi) for either anchor order
}

struct WindingCoords {
  double lambda, mu, nu;    // cos v_A, cos v_B, cosh(u_B - u_A)
  double rho, sigma, tau;   // lambda*mu, crossing coordinate, tan v_A tan v_B
  double rho_tau;           // sin v_A sin v_B = sqrt((1-l^2)(1-m^2)) >= 0;
                            // the (rho, rho_tau) pair stays finite at v = pi/2
};

inline WindingCoords winding_coords(cplx zA, cplx zB, const Anchors& a) {
  detail::check_interior(zA, "winding_coords");
  detail::check_interior(zB, "winding_coords");
  detail::check_anchors(a);
  const cplx wA = detail::anchor_map(zA, a);
  const cplx wB = detail::anchor_map(zB, a);
  const double rA = std::abs(wA), rB = std::abs(wB);

  WindingCoords wc{};
  wc.lambda = wA.real() / rA;
  wc.mu = wB.real() / rB;
  wc.nu = std::cosh(std::log(rB) - std::log(rA));
  wc.rho = wc.lambda * wc.mu;
  wc.rho_tau = (wA.imag() / rA) * (wB.imag() / rB);
  wc.tau = wc.rho_tau / wc.rho;
  // Moebius-invariant half-plane form |wB-wA|^2 / |wB-conj(wA)|^2: exact zero
  // at coincident points, no cancellation for nearby ones
  const double num = std::norm(wB - wA);
  const double den = std::norm(wB - std::conj(wA));
  wc.sigma = num / den;
  return wc;
}

}   // namespace sletwist
