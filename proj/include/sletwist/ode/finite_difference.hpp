#pragma once

// Finite-difference residuals: do claimed closed forms actually satisfy
// their equations?  Central stencils with one level of Richardson
// extrapolation; the caller supplies the base step (1e-4 x characteristic
// scale is the intended regime).

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <sstream>
#include <vector>

#include "sletwist/errors.hpp"
#include "sletwist/ode/specs.hpp"

namespace sletwist {

using CplxFn = std::function<cplx(cplx)>;

namespace detail {

struct Jet2 {
  cplx f, d1, d2;
};
struct Jet3 {
  cplx f, d1, d2, d3;
};

// 5-point central first/second derivatives, O(h^4)
inline Jet2 stencil5(const CplxFn& f, cplx x, double h) {
  const cplx fm2 = f(x - 2.0 * h), fm1 = f(x - h), f0 = f(x), fp1 = f(x + h),
             fp2 = f(x + 2.0 * h);
  Jet2 j;
  j.f = f0;
  j.d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
  j.d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
  return j;
}

// 7-point central derivatives: d1,d2 are O(h^6), d3 is O(h^4)
inline Jet3 stencil7(const CplxFn& f, cplx x, double h) {
  const cplx fm3 = f(x - 3.0 * h), fm2 = f(x - 2.0 * h), fm1 = f(x - h),
             f0 = f(x), fp1 = f(x + h), fp2 = f(x + 2.0 * h),
             fp3 = f(x + 3.0 * h);
  Jet3 j;
  j.f = f0;
  j.d1 = (-fm3 + 9.0 * fm2 - 45.0 * fm1 + 45.0 * fp1 - 9.0 * fp2 + fp3) /
         (60.0 * h);
  j.d2 = (2.0 * fm3 - 27.0 * fm2 + 270.0 * fm1 - 490.0 * f0 + 270.0 * fp1 -
          27.0 * fp2 + 2.0 * fp3) /
         (180.0 * h * h);
  j.d3 = (fm3 - 8.0 * fm2 + 13.0 * fm1 - 13.0 * fp1 + 8.0 * fp2 - fp3) /
         (8.0 * h * h * h);
  return j;
}

// one Richardson level for an O(h^n) estimate
inline cplx richardson(cplx coarse, cplx fine, int order) {
  const double w = std::pow(2.0, order);
  return (w * fine - coarse) / (w - 1.0);
}

inline void check_fd_domain(cplx x, double h, const char* who) {
  if (std::abs(x) <= 10.0 * h || std::abs(x - 1.0) <= 10.0 * h) {
    std::ostringstream os;
    os << who << ": x=(" << x.real() << "," << x.imag()
       << ") within 10h of a singular point (h=" << h << ")";
    throw domain_error(os.str());
  }
}

}   // namespace detail

// |F'' + pF' + qF| / max term magnitude.  Richardson pairs (2h, h): the
// coarser pair keeps the subtractive rounding noise of the h-stencil from
// being amplified, which matters once f is accurate to machine precision.
inline double ode_residual(const OdeSpec& spec, const CplxFn& f, cplx x,
                           double h) {
  detail::check_fd_domain(x, h, "ode_residual");
  const auto coarse = detail::stencil5(f, x, 2.0 * h);
  const auto fine = detail::stencil5(f, x, h);
  const cplx d1 = detail::richardson(coarse.d1, fine.d1, 4);
  const cplx d2 = detail::richardson(coarse.d2, fine.d2, 4);
  const cplx t2 = d2, t1 = spec.p(x) * d1, t0 = spec.q(x) * coarse.f;
  const double scale =
      std::max({std::abs(t2), std::abs(t1), std::abs(t0)});
  if (scale == 0.0) return 0.0;
  return std::abs(t2 + t1 + t0) / scale;
}

inline double ode_residual(const Ode3Spec& spec, const CplxFn& f, cplx x,
                           double h) {
  detail::check_fd_domain(x, h, "ode_residual");
  const auto coarse = detail::stencil7(f, x, 2.0 * h);
  const auto fine = detail::stencil7(f, x, h);
  const cplx d1 = detail::richardson(coarse.d1, fine.d1, 6);
  const cplx d2 = detail::richardson(coarse.d2, fine.d2, 6);
  const cplx d3 = detail::richardson(coarse.d3, fine.d3, 4);
  const cplx t3 = d3, t2 = spec.p2(x) * d2, t1 = spec.p1(x) * d1,
             t0 = spec.p0(x) * coarse.f;
  const double scale =
      std::max({std::abs(t3), std::abs(t2), std::abs(t1), std::abs(t0)});
  if (scale == 0.0) return 0.0;
  return std::abs(t3 + t2 + t1 + t0) / scale;
}

// ---------------------------------------------------------------------------
// reduced PDE residuals for H(sigma,tau)
// ---------------------------------------------------------------------------

// max residuals over a (sigma,tau) grid of
//   r1:  d^2 H / d tau^2 = 0
//   r2:  (1-s)t H - t(1+t+s-st) dH/dt + 3s(1-s) dH/ds = 0
inline std::pair<double, double> pde_residuals_sigma_tau(
    const std::function<double(double, double)>& H) {
  const std::vector<double> sigmas = {0.1, 0.2, 0.3, 0.4, 0.5,
                                      0.6, 0.7, 0.8, 0.9};
  const std::vector<double> taus = {0.25, 0.5, 1.0, 2.0};
  const double hs = 1e-3, ht = 1e-3;
  const auto d5 = [](double fm2, double fm1, double fp1, double fp2,
                     double h) {
    return (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
  };
  double r1 = 0.0, r2 = 0.0;
  for (double s : sigmas)
    for (double t : taus) {
      const double h0 = H(s, t);
      const double dtt =
          (H(s, t + ht) - 2.0 * h0 + H(s, t - ht)) / (ht * ht);
      const double dt = d5(H(s, t - 2.0 * ht), H(s, t - ht), H(s, t + ht),
                           H(s, t + 2.0 * ht), ht);
      const double ds = d5(H(s - 2.0 * hs, t), H(s - hs, t), H(s + hs, t),
                           H(s + 2.0 * hs, t), hs);
      const double a = (1.0 - s) * t * h0;
      const double b = t * (1.0 + t + s - s * t) * dt;
      const double c = 3.0 * s * (1.0 - s) * ds;
      const double scale1 = std::max(1.0, std::abs(h0));
      const double scale2 =
          std::max({1.0, std::abs(a), std::abs(b), std::abs(c)});
      r1 = std::max(r1, std::abs(dtt) / scale1);
      r2 = std::max(r2, std::abs(a - b + c) / scale2);
    }
  return {r1, r2};
}

}   // namespace sletwist
