#pragma once

// Conformal blocks of the bulk twist/2-leg four-point function: the x ~ 0
// basis (F11, F31), the x ~ 1 basis (G11, Gm11) with its staggered-module
// mixing parameter A, calligraphic normalizations, crossing combinations and
// the logarithmic split of G11 used by the monodromy bookkeeping.

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <utility>

#include "sletwist/cft/params.hpp"
#include "sletwist/errors.hpp"
#include "sletwist/special/hyp2f1.hpp"

namespace sletwist {

enum class FBlockKind { F11, F31 };
enum class GBlockKind { G11, Gm11 };

namespace detail {

// Gamma factor appearing verbatim in a normalization: numerator poles are
// hard errors naming the factor, denominator poles are legitimate zeros.
inline double gamma_named(double x, const char* factor, double kappa) {
  if (is_nonpositive_integer(x)) {
    std::ostringstream os;
    os << "normalization factor " << factor << " hits a Gamma pole at kappa="
       << kappa;
    throw domain_error(os.str());
  }
  return gamma_real(x);
}

}   // namespace detail

// ---------------------------------------------------------------- raw blocks

// F11(x) = (1-x)^{-k/8} 2F1(-k/4, 1-k/4; 2-k/2; x)
inline cplx block_f11(cplx x, double kappa) {
  check_kappa_range(kappa);
  const Hyp2F1Params p(-kappa / 4.0, 1.0 - kappa / 4.0, 2.0 - kappa / 2.0);
  return std::pow(detail::one_minus(x), cplx(-kappa / 8.0)) * hyp2f1(p, x);
}

// F31(x) = x^{k/2-1} (1-x)^{-k/8} 2F1(k/4-1, k/4; k/2; x)
inline cplx block_f31(cplx x, double kappa) {
  check_kappa_range(kappa);
  const Hyp2F1Params p(kappa / 4.0 - 1.0, kappa / 4.0, kappa / 2.0);
  return std::pow(x, cplx(kappa / 2.0 - 1.0)) *
         std::pow(detail::one_minus(x), cplx(-kappa / 8.0)) * hyp2f1(p, x);
}

// G11(w) = A G(1-k/4)G(2-k/4)/G(2-k/2) F11(1-w)
//        + (1-A) G(1+k/4)G(k/4)/G(k/2) F31(1-w),   w = 1-x
inline cplx block_g11(cplx one_minus_x, double kappa, double A) {
  check_kappa_range(kappa);
  const double c1 = detail::gamma_named(1.0 - kappa / 4.0,
                                        "Gamma(1-kappa/4)", kappa) *
                    detail::gamma_named(2.0 - kappa / 4.0,
                                        "Gamma(2-kappa/4)", kappa) *
                    rgamma_real(2.0 - kappa / 2.0);
  const double c3 = detail::gamma_named(1.0 + kappa / 4.0,
                                        "Gamma(1+kappa/4)", kappa) *
                    detail::gamma_named(kappa / 4.0, "Gamma(kappa/4)", kappa) *
                    rgamma_real(kappa / 2.0);
  const cplx x = detail::one_minus(one_minus_x);
  return A * c1 * block_f11(x, kappa) + (1.0 - A) * c3 * block_f31(x, kappa);
}

// Gm11(w) = w^{1-k/8} 2F1(1-k/4, 2-k/4; 2; w).  The second parameter is fixed
// by the Frobenius recursion of the hypergeometric equation at w = 0 together
// with the Wronskian pairing against G11.
inline cplx block_gm11(cplx one_minus_x, double kappa) {
  check_kappa_range(kappa);
  const Hyp2F1Params p(1.0 - kappa / 4.0, 2.0 - kappa / 4.0, 2.0);
  return std::pow(one_minus_x, cplx(1.0 - kappa / 8.0)) *
         hyp2f1(p, one_minus_x);
}

// -------------------------------------------------------------- calligraphic

inline double norm_f31(double kappa) {
  using detail::gamma_named;
  return gamma_named((4.0 + kappa) / 4.0, "Gamma((4+kappa)/4)", kappa) *
         gamma_named(kappa / 4.0, "Gamma(kappa/4)", kappa) *
         gamma_named((4.0 - kappa) / 2.0, "Gamma((4-kappa)/2)", kappa) *
         rgamma_real(kappa / 2.0) * rgamma_real((4.0 - kappa) / 4.0) *
         rgamma_real((8.0 - kappa) / 4.0);
}

inline double norm_g11(double kappa) {
  return detail::gamma_named((4.0 - kappa) / 2.0, "Gamma((4-kappa)/2)",
                             kappa) *
         rgamma_real((4.0 - kappa) / 4.0) * rgamma_real((8.0 - kappa) / 4.0);
}

inline double norm_gm11(double kappa) {
  using detail::gamma_named;
  return gamma_named((4.0 + kappa) / 4.0, "Gamma((4+kappa)/4)", kappa) *
         gamma_named(kappa / 4.0, "Gamma(kappa/4)", kappa) *
         rgamma_real((kappa - 2.0) / 2.0);
}

inline cplx block_F(FBlockKind kind, cplx x, double kappa) {
  return kind == FBlockKind::F11 ? block_f11(x, kappa) : block_f31(x, kappa);
}

inline cplx block_G(GBlockKind kind, cplx one_minus_x, double kappa,
                    double A) {
  return kind == GBlockKind::G11 ? block_g11(one_minus_x, kappa, A)
                                 : block_gm11(one_minus_x, kappa);
}

// script-F / script-G variants
inline cplx block_F_normalized(FBlockKind kind, cplx x, double kappa) {
  return kind == FBlockKind::F11 ? block_f11(x, kappa)
                                 : norm_f31(kappa) * block_f31(x, kappa);
}

inline cplx block_G_normalized(GBlockKind kind, cplx one_minus_x, double kappa,
                               double A) {
  return kind == GBlockKind::G11
             ? norm_g11(kappa) * block_g11(one_minus_x, kappa, A)
             : norm_gm11(kappa) * block_gm11(one_minus_x, kappa);
}

// ------------------------------------------------------- physical assemblies

namespace detail {

// blocks jump across the [1,inf) cut individually, physical combinations do
// not: nudge exactly-real x > 1 to the upper side
inline cplx nudge_off_cut(cplx x) {
  if (x.imag() == 0.0 && x.real() > 1.0) return {x.real(), 1e-8};
  return x;
}

}   // namespace detail

// |scriptF11|^2 - |scriptF31|^2, the single-valued bulk combination
inline double physical_bulk_block(cplx x, double kappa) {
  x = detail::nudge_off_cut(x);
  const cplx f1 = block_F_normalized(FBlockKind::F11, x, kappa);
  const cplx f3 = block_F_normalized(FBlockKind::F31, x, kappa);
  return std::norm(f1) - std::norm(f3);
}

// same quantity assembled on the G side; must be A-independent
inline double physical_bulk_block_from_G(cplx x, double kappa, double A) {
  x = detail::nudge_off_cut(x);
  const cplx w = detail::one_minus(x);
  const cplx g = block_G_normalized(GBlockKind::G11, w, kappa, A);
  const cplx gm = block_G_normalized(GBlockKind::Gm11, w, kappa, A);
  const double cross = 2.0 * (g * std::conj(gm)).real();
  return cross + (1.0 - 2.0 * A) * std::norm(gm);
}

// scriptG11(w) = w^{-k/8} S(w) + (1/2pi) tan(pi k/4) log(w) scriptGm11(w):
// returns (S, log coefficient).  The log coefficient is reconstructed from
// the hypergeometric splits and must match the closed form A-independently.
inline std::pair<cplx, cplx> g11_log_split(cplx one_minus_x, double kappa,
                                           double A) {
  check_kappa_range(kappa);
  const cplx w = one_minus_x;
  const cplx x = detail::one_minus(w);
  const double c1 = detail::gamma_named(1.0 - kappa / 4.0,
                                        "Gamma(1-kappa/4)", kappa) *
                    detail::gamma_named(2.0 - kappa / 4.0,
                                        "Gamma(2-kappa/4)", kappa) *
                    rgamma_real(2.0 - kappa / 2.0);
  const double c3 = detail::gamma_named(1.0 + kappa / 4.0,
                                        "Gamma(1+kappa/4)", kappa) *
                    detail::gamma_named(kappa / 4.0, "Gamma(kappa/4)", kappa) *
                    rgamma_real(kappa / 2.0);
  const Hyp2F1Params p11(-kappa / 4.0, 1.0 - kappa / 4.0, 2.0 - kappa / 2.0);
  const Hyp2F1Params p31(kappa / 4.0 - 1.0, kappa / 4.0, kappa / 2.0);
  auto [r1, l1] = hyp2f1_log_connection(p11, w);
  auto [r3, l3] = hyp2f1_log_connection(p31, w);
  const cplx xpow = std::pow(x, cplx(kappa / 2.0 - 1.0));
  const double ng = norm_g11(kappa);
  const cplx S = ng * (A * c1 * r1 + (1.0 - A) * c3 * xpow * r3);
  const cplx logcoef = ng * (A * c1 * l1 + (1.0 - A) * c3 * xpow * l3) *
                       std::pow(w, cplx(-kappa / 8.0));
  return {S, logcoef};
}

// closed form of the same log coefficient
inline cplx g11_log_coefficient_closed(cplx one_minus_x, double kappa) {
  return std::tan(std::numbers::pi * kappa / 4.0) / (2.0 * std::numbers::pi) *
         norm_gm11(kappa) * block_gm11(one_minus_x, kappa);
}

}   // namespace sletwist
