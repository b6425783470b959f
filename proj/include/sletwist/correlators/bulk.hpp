#pragma once

// Bulk four-point functions: twist pair + 2-leg pair at general dilute kappa,
// and the kappa = 8/3 specializations (anchored self-avoiding-loop separation
// probability, twist partition function, magnetization complement).

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "sletwist/correlators/blocks.hpp"
#include "sletwist/errors.hpp"
#include "sletwist/special/gamma.hpp"
#include "sletwist/special/hyp2f1.hpp"

namespace sletwist {

namespace detail {

inline void check_distinct4(cplx z1, cplx z2, cplx z3, cplx z4) {
  const cplx zs[] = {z1, z2, z3, z4};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (zs[i] == zs[j]) {
        std::ostringstream os;
        os << "coincident insertion points z" << i + 1 << " = z" << j + 1
           << " (correlator diverges)";
        throw domain_error(os.str());
      }
}

inline cplx cross_ratio_4pt(cplx z1, cplx z2, cplx z3, cplx z4) {
  return ((z2 - z1) * (z4 - z3)) / ((z3 - z1) * (z4 - z2));
}

}   // namespace detail

// < phi21 phi21 phi01 phi01 >: |z21/z43|^2 |z43 z31 z42 / (z21^3 z32 z41)|^{k/4}
//   [ |2F1(-k/4,(4-k)/4;(4-k)/2;x)|^2 - C(k) |x|^{k-2} |2F1((k-4)/4,k/4;k/2;x)|^2 ]
// with C(k) = k^2 G(k/4)^4 G((4-k)/2)^2 / ((4-k)^2 G(k/2)^2 G((4-k)/4)^4)
inline double bulk_twist_4pt(cplx z1, cplx z2, cplx z3, cplx z4,
                             double kappa) {
  if (!(kappa > 2.0 && kappa < 4.0)) {
    std::ostringstream os;
    os << "bulk_twist_4pt: kappa must lie in the dilute range (2,4), got "
       << kappa;
    throw domain_error(os.str());
  }
  detail::check_distinct4(z1, z2, z3, z4);
  const cplx z21 = z2 - z1, z43 = z4 - z3, z31 = z3 - z1, z42 = z4 - z2,
             z32 = z3 - z2, z41 = z4 - z1;
  const cplx x = detail::nudge_off_cut(z21 * z43 / (z31 * z42));

  const double g14 = gamma_real(kappa / 4.0);
  const double g12 = gamma_real(kappa / 2.0);
  const double gm2 = gamma_real((4.0 - kappa) / 2.0);
  const double gm4 = gamma_real((4.0 - kappa) / 4.0);
  const double coef = kappa * kappa * std::pow(g14, 4) * gm2 * gm2 /
                      ((4.0 - kappa) * (4.0 - kappa) * g12 * g12 *
                       std::pow(gm4, 4));

  const Hyp2F1Params p1(-kappa / 4.0, (4.0 - kappa) / 4.0,
                        (4.0 - kappa) / 2.0);
  const Hyp2F1Params p2((kappa - 4.0) / 4.0, kappa / 4.0, kappa / 2.0);
  const double bracket =
      std::norm(hyp2f1(p1, x)) -
      coef * std::pow(std::abs(x), kappa - 2.0) * std::norm(hyp2f1(p2, x));

  const double lead = std::norm(z21 / z43) *
                      std::pow(std::abs(z43 * z31 * z42 /
                                        (z21 * z21 * z21 * z32 * z41)),
                               kappa / 4.0);
  return lead * bracket;
}

namespace detail {

// 4 G(2/3)^6 / (G(4/3)^2 G(1/3)^4), the kappa = 8/3 bracket coefficient
inline double sal_coefficient() {
  static const double c = [] {
    const double g23 = gamma_real(2.0 / 3.0), g43 = gamma_real(4.0 / 3.0),
                 g13 = gamma_real(1.0 / 3.0);
    return 4.0 * std::pow(g23, 6) / (g43 * g43 * std::pow(g13, 4));
  }();
  return c;
}

}   // namespace detail

// P_n as a function of the cross-ratio x = z21 z43 / (z31 z42), using
// |z31 z42 / (z32 z41)| = |1/(1-x)| and |z21 z43 / (z32 z41)| = |x/(1-x)|
inline double sal_separation_prob_from_x(cplx x) {
  x = detail::nudge_off_cut(x);
  const cplx w = detail::one_minus(x);
  const Hyp2F1Params p1(-2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0);
  const Hyp2F1Params p2(-1.0 / 3.0, 2.0 / 3.0, 4.0 / 3.0);
  const double aw = std::pow(std::abs(w), 2.0 / 3.0);
  return 0.5 * (1.0 - std::norm(hyp2f1(p1, x)) / aw +
                detail::sal_coefficient() *
                    std::pow(std::abs(x), 2.0 / 3.0) / aw *
                    std::norm(hyp2f1(p2, x)));
}

// probability that a self-avoiding loop through z3, z4 separates z1 from z2
inline double sal_separation_prob(cplx z1, cplx z2, cplx z3, cplx z4) {
  detail::check_distinct4(z1, z2, z3, z4);
  const cplx z21 = z2 - z1, z43 = z4 - z3, z31 = z3 - z1, z42 = z4 - z2,
             z32 = z3 - z2, z41 = z4 - z1;
  const cplx x = detail::nudge_off_cut(z21 * z43 / (z31 * z42));
  const Hyp2F1Params p1(-2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0);
  const Hyp2F1Params p2(-1.0 / 3.0, 2.0 / 3.0, 4.0 / 3.0);
  const double m1 = std::pow(std::abs(z31 * z42 / (z32 * z41)), 2.0 / 3.0);
  const double m2 = std::pow(std::abs(z21 * z43 / (z32 * z41)), 2.0 / 3.0);
  return 0.5 * (1.0 - m1 * std::norm(hyp2f1(p1, x)) +
                detail::sal_coefficient() * m2 * std::norm(hyp2f1(p2, x)));
}

// Z_twist = |z31 z42 / (z43^2 z32 z41)|^{2/3} [ |F1|^2 - C |x|^{2/3} |F2|^2 ]
inline double sal_twist_partition(cplx z1, cplx z2, cplx z3, cplx z4) {
  detail::check_distinct4(z1, z2, z3, z4);
  const cplx z21 = z2 - z1, z43 = z4 - z3, z31 = z3 - z1, z42 = z4 - z2,
             z32 = z3 - z2, z41 = z4 - z1;
  const cplx x = detail::nudge_off_cut(z21 * z43 / (z31 * z42));
  const Hyp2F1Params p1(-2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0);
  const Hyp2F1Params p2(-1.0 / 3.0, 2.0 / 3.0, 4.0 / 3.0);
  const double lead =
      std::pow(std::abs(z31 * z42 / (z43 * z43 * z32 * z41)), 2.0 / 3.0);
  return lead * (std::norm(hyp2f1(p1, x)) -
                 detail::sal_coefficient() *
                     std::pow(std::abs(x), 2.0 / 3.0) *
                     std::norm(hyp2f1(p2, x)));
}

// magnetization four-point value (same-cluster weight Z_p/Z); equals 1 - P_n
inline double magnetization_same_cluster(cplx x) {
  x = detail::nudge_off_cut(x);
  const cplx w = detail::one_minus(x);
  const Hyp2F1Params p1(-2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0);
  const Hyp2F1Params p2(-1.0 / 3.0, 2.0 / 3.0, 4.0 / 3.0);
  const double aw = std::pow(std::abs(w), 2.0 / 3.0);
  return 0.5 + 0.5 * std::norm(hyp2f1(p1, x)) / aw -
         0.5 * detail::sal_coefficient() *
             std::pow(std::abs(x), 2.0 / 3.0) / aw * std::norm(hyp2f1(p2, x));
}

// P_n at the x = 2 configuration: 1/2 + 9 G(5/6)^6 / (4 pi^3)
inline double sal_prob_max() {
  const double g56 = gamma_real(5.0 / 6.0);
  return 0.5 + 9.0 * std::pow(g56, 6) /
                   (4.0 * std::pow(std::numbers::pi, 3));
}

}   // namespace sletwist
