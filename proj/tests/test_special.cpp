#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "reference_values.hpp"
#include "sletwist/special/gamma.hpp"
#include "sletwist/special/hyp2f1.hpp"

using namespace sletwist;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("gamma_real against frozen references") {
  CHECK_THAT(gamma_real(5.0 / 6.0), WithinRel(refvals::gamma_5_6, 1e-14));
  CHECK_THAT(gamma_real(1.0 / 3.0), WithinRel(refvals::gamma_1_3, 1e-14));
  CHECK_THAT(gamma_real(2.0 / 3.0), WithinRel(refvals::gamma_2_3, 1e-14));
  CHECK_THAT(gamma_real(4.0 / 3.0), WithinRel(refvals::gamma_4_3, 1e-14));
  CHECK_THAT(gamma_real(5.0 / 3.0), WithinRel(refvals::gamma_5_3, 1e-14));
  CHECK_THAT(gamma_real(1.0 / 6.0), WithinRel(refvals::gamma_1_6, 1e-14));
  CHECK_THAT(gamma_real(-19.5), WithinRel(refvals::gamma_at_m19_5, 1e-12));
  CHECK_THAT(gamma_real(-7.3), WithinRel(refvals::gamma_at_m7_3, 1e-13));
  CHECK_THAT(gamma_real(-0.7), WithinRel(refvals::gamma_at_m0_7, 1e-14));
  CHECK_THAT(gamma_real(0.1), WithinRel(refvals::gamma_at_0_1, 1e-14));
  CHECK_THAT(gamma_real(3.7), WithinRel(refvals::gamma_at_3_7, 1e-14));
  CHECK_THAT(gamma_real(12.34), WithinRel(refvals::gamma_at_12_34, 1e-14));
  CHECK_THAT(gamma_real(27.5), WithinRel(refvals::gamma_at_27_5, 1e-14));
  CHECK_THAT(gamma_real(49.9), WithinRel(refvals::gamma_at_49_9, 1e-13));
}

TEST_CASE("gamma_real poles are hard errors, rgamma_real zeros") {
  CHECK_THROWS_AS(gamma_real(0.0), domain_error);
  CHECK_THROWS_AS(gamma_real(-3.0), domain_error);
  CHECK(rgamma_real(0.0) == 0.0);
  CHECK(rgamma_real(-7.0) == 0.0);
  CHECK_THAT(rgamma_real(0.5) * gamma_real(0.5), WithinAbs(1.0, 1e-15));
}

TEST_CASE("digamma recurrence and reflection") {
  // psi(1) = -EulerGamma
  CHECK_THAT(digamma_real(1.0), WithinAbs(-0.57721566490153286, 1e-11));
  // psi(x+1) = psi(x) + 1/x
  CHECK_THAT(digamma_real(4.2) - digamma_real(3.2), WithinAbs(1.0 / 3.2, 1e-14));
  // reflection at a negative argument: psi(1-x)-psi(x) = pi cot(pi x)
  const double x = -2.3;
  CHECK_THAT(digamma_real(1.0 - x) - digamma_real(x),
             WithinAbs(M_PI / std::tan(M_PI * x), 1e-11));
  CHECK_THROWS_AS(digamma_real(-2.0), domain_error);
}

// ---------------------------------------------------------------- hyp2f1 --

namespace {
cplx f21(double a, double b, double c, cplx z) { return hyp2f1(Hyp2F1Params(a, b, c), z); }
}  // namespace

TEST_CASE("hyp2f1 direct series region") {
  CHECK_THAT(f21(-2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0, cplx(0.999, 0.0)).real(),
             WithinRel(refvals::hyp2f1_sal_0p999, 1e-13));
  const cplx v = f21(0.3, 1.7, 2.9, cplx(0.45, 0.30));
  CHECK_THAT(v.real(), WithinRel(refvals::hyp2f1_generic_inside_re, 1e-14));
  CHECK_THAT(v.imag(), WithinRel(refvals::hyp2f1_generic_inside_im, 1e-13));
}

TEST_CASE("hyp2f1 connection at 1, generic and logarithmic") {
  const cplx g = f21(0.3, 1.7, 2.9, cplx(0.92, 0.08));
  CHECK_THAT(g.real(), WithinRel(refvals::hyp2f1_generic_near1_re, 1e-13));
  CHECK_THAT(g.imag(), WithinRel(refvals::hyp2f1_generic_near1_im, 1e-12));
  const cplx l = f21(-2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0, cplx(0.92, 0.08));
  CHECK_THAT(l.real(), WithinRel(refvals::hyp2f1_log_near1_re, 1e-13));
  CHECK_THAT(l.imag(), WithinRel(refvals::hyp2f1_log_near1_im, 1e-12));
  // c-a-b = -2/3 < 0: divergent at 1, still finite just below
  CHECK_THAT(f21(1.0, 4.0 / 3.0, 5.0 / 3.0, cplx(0.995, 0.0)).real(),
             WithinRel(refvals::hyp2f1_below1, 1e-12));
}

TEST_CASE("hyp2f1 connection at infinity, generic and logarithmic") {
  const cplx g = f21(1.0, 4.0 / 3.0, 5.0 / 3.0, cplx(3.0, 2.0));
  CHECK_THAT(g.real(), WithinRel(refvals::hyp2f1_invz_generic_re, 1e-13));
  CHECK_THAT(g.imag(), WithinRel(refvals::hyp2f1_invz_generic_im, 1e-13));
  const double k = 3.3;
  const cplx l = f21(k / 4.0 - 1.0, k / 4.0, k / 2.0, cplx(-5.0, 0.0));
  CHECK_THAT(l.real(), WithinRel(refvals::hyp2f1_invz_log_re, 1e-13));
  CHECK_THAT(l.imag(), WithinAbs(refvals::hyp2f1_invz_log_im, 1e-13));
  const cplx l2 = f21(-2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0, cplx(-3.0, 4.0));
  CHECK_THAT(l2.real(), WithinRel(refvals::hyp2f1_invz_log2_re, 1e-13));
  CHECK_THAT(l2.imag(), WithinRel(refvals::hyp2f1_invz_log2_im, 1e-13));
}

TEST_CASE("hyp2f1 branch cut side on [1, inf)") {
  const cplx above = f21(-2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0, cplx(2.0, 1e-8));
  CHECK_THAT(above.real(), WithinRel(refvals::hyp2f1_above_cut_re, 1e-7));
  CHECK_THAT(above.imag(), WithinRel(refvals::hyp2f1_above_cut_im, 1e-7));
  // signed zero keeps the side: +0 imag matches the upper approach,
  // -0 imag the conjugate
  const cplx plus = f21(-2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0, cplx(2.0, +0.0));
  const cplx minus = f21(-2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0, cplx(2.0, -0.0));
  CHECK_THAT(plus.real(), WithinAbs(minus.real(), 1e-14));
  CHECK_THAT(plus.imag(), WithinAbs(-minus.imag(), 1e-14));
  CHECK(plus.imag() < 0.0);  // upper side of the cut for this parameter set
  CHECK_THAT(plus.real(), WithinRel(refvals::hyp2f1_above_cut_re, 1e-7));
}

TEST_CASE("hyp2f1 conjugation and parameter symmetry") {
  const cplx z(0.82, 0.31);
  const cplx v = f21(0.3, 1.7, 2.9, z);
  const cplx vb = f21(0.3, 1.7, 2.9, std::conj(z));
  CHECK(v == std::conj(vb));  // real parameters: Schwarz reflection, bitwise
  CHECK(f21(1.7, 0.3, 2.9, z) == v);  // a<->b stored canonically
}

TEST_CASE("hyp2f1 polynomial cases ignore region routing") {
  // a = -2: quadratic in z, valid everywhere including |z| >> 1
  const double a = -2.0, b = 0.7, c = 1.9;
  const cplx z(14.0, -9.0);
  const cplx expect = 1.0 + a * b / c * z
      + a * (a + 1.0) * b * (b + 1.0) / (c * (c + 1.0)) / 2.0 * z * z;
  const cplx got = f21(a, b, c, z);
  CHECK_THAT(std::abs(got - expect), WithinAbs(0.0, 1e-10 * std::abs(expect)));
}

TEST_CASE("hyp2f1 rejects degenerate c and uncovered z") {
  CHECK_THROWS_AS(Hyp2F1Params(0.5, 1.5, 0.0), domain_error);
  CHECK_THROWS_AS(Hyp2F1Params(0.5, 1.5, -2.0), domain_error);
  // z = e^{i pi/3}: equidistant from 0, 1 and the unit circle at infinity
  CHECK_THROWS_AS(f21(0.3, 1.7, 2.9, std::polar(1.0, M_PI / 3.0)), numeric_error);
}

TEST_CASE("hyp2f1_log_connection splits into regular and log parts") {
  {
    const Hyp2F1Params p(-2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0);
    REQUIRE(p.log_case);
    const auto [reg, lc] = hyp2f1_log_connection(p, cplx(0.5, 0.0));
    CHECK_THAT(reg.real(), WithinRel(refvals::logconn_sal_regular, 1e-13));
    CHECK_THAT(lc.real(), WithinRel(refvals::logconn_sal_logcoef, 1e-13));
    // recombination reproduces the plain evaluation at z = 0.5
    const cplx whole = f21(-2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0, cplx(0.5, 0.0));
    CHECK_THAT(std::abs(reg + lc * std::log(cplx(0.5, 0.0)) - whole),
               WithinAbs(0.0, 1e-13));
  }
  {
    const Hyp2F1Params p(-0.75, 0.25, 0.5);  // kappa=3 block parameters
    const auto [reg, lc] = hyp2f1_log_connection(p, cplx(0.3, 0.0));
    CHECK_THAT(reg.real(), WithinRel(refvals::logconn_k3_regular, 1e-13));
    CHECK_THAT(lc.real(), WithinRel(refvals::logconn_k3_logcoef, 1e-13));
  }
  CHECK_THROWS_AS(hyp2f1_log_connection(Hyp2F1Params(0.3, 1.7, 2.9), cplx(0.5, 0.0)),
                  contract_error);
  CHECK_THROWS_AS(
      hyp2f1_log_connection(Hyp2F1Params(-2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0), cplx(1.2, 0.0)),
      domain_error);
}
