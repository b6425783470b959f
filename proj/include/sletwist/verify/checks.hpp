#pragma once

// Self-verification suites: every closed form is checked against the
// structure that defines it (its ODE/PDE, the basis-change relations between
// the x=0 and x=1 block bases, closed-form monodromy matrices, and the
// probability identities of the winding distribution). The CLI `verify`
// subcommand, the acceptance runner and the unit tests all call these.

#include <cmath>
#include <complex>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "sletwist/correlators/blocks.hpp"
#include "sletwist/correlators/boundary.hpp"
#include "sletwist/correlators/bulk.hpp"
#include "sletwist/correlators/winding.hpp"
#include "sletwist/geom/conformal.hpp"
#include "sletwist/ode/finite_difference.hpp"
#include "sletwist/ode/monodromy.hpp"
#include "sletwist/ode/specs.hpp"

namespace sletwist {

struct Check {
  std::string name;
  double residual = 0.0;
  double bound = 0.0;
  bool pass = false;
};

namespace detail {

inline void push_check(std::vector<Check>& out, std::string name, double residual, double bound) {
  const bool ok = std::isfinite(residual) && residual <= bound;
  out.push_back({std::move(name), residual, bound, ok});
}

inline std::string with_kappa(const char* base, double kappa) {
  std::ostringstream os;
  os << base << " kappa=" << kappa;
  return os.str();
}

inline const std::vector<double>& verify_kappas() {
  static const std::vector<double> ks = {2.5, 3.0, 3.7};
  return ks;
}

// interior evaluation points, clear of both singularities and the FD stencil
inline const std::vector<cplx>& verify_points() {
  static const std::vector<cplx> xs = {
      cplx(0.15, 0.0), cplx(0.3, 0.0),  cplx(0.45, 0.0),  cplx(0.6, 0.0),
      cplx(0.75, 0.0), cplx(0.25, 0.1), cplx(0.4, 0.2),
  };
  return xs;
}

inline double mat2_max_abs_diff(const Mat2& a, const Mat2& b) {
  double d = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) d = std::max(d, std::abs(a.m[i][j] - b.m[i][j]));
  return d;
}

}  // namespace detail

// ------------------------------------------------------------- ODE suite --

inline std::vector<Check> verify_ode() {
  std::vector<Check> out;
  const double h2 = 1e-4;  // 5-point stencils + Richardson
  const double h3 = 5e-3;  // 7-point stencils (third-order system)

  for (const double k : detail::verify_kappas()) {
    const OdeSpec bulk = bulk_block_ode(k);
    const CplxFn f11 = [k](cplx x) { return block_f11(x, k); };
    const CplxFn f31 = [k](cplx x) { return block_f31(x, k); };
    double r11 = 0.0, r31 = 0.0;
    for (const cplx x : detail::verify_points()) {
      r11 = std::max(r11, ode_residual(bulk, f11, x, h2));
      r31 = std::max(r31, ode_residual(bulk, f31, x, h2));
    }
    detail::push_check(out, detail::with_kappa("bulk-block-f11", k), r11, 1e-6);
    detail::push_check(out, detail::with_kappa("bulk-block-f31", k), r31, 1e-6);

    const CplxFn single = [](cplx x) { return boundary_single_twist(x); };
    const OdeSpec sa = single_twist_ode_a(k);
    const OdeSpec sb = single_twist_ode_b(k);
    double ra = 0.0, rb = 0.0;
    for (const cplx x : detail::verify_points()) {
      ra = std::max(ra, ode_residual(sa, single, x, h2));
      rb = std::max(rb, ode_residual(sb, single, x, h2));
    }
    detail::push_check(out, detail::with_kappa("single-twist-a", k), ra, 1e-6);
    detail::push_check(out, detail::with_kappa("single-twist-b", k), rb, 1e-6);

    const CplxFn dbl = [k](cplx x) { return boundary_double_twist(x, k); };
    const OdeSpec d2 = double_twist_ode_2(k);
    const Ode3Spec d3 = double_twist_ode_3(k);
    double r2 = 0.0, r3 = 0.0;
    for (const cplx x : detail::verify_points()) {
      r2 = std::max(r2, ode_residual(d2, dbl, x, h3));
      r3 = std::max(r3, ode_residual(d3, dbl, x, h3));
    }
    detail::push_check(out, detail::with_kappa("double-twist-2nd", k), r2, 1e-6);
    detail::push_check(out, detail::with_kappa("double-twist-3rd", k), r3, 1e-6);
  }
  return out;
}

// ------------------------------------------------------- monodromy suite --

inline std::vector<Check> verify_monodromy() {
  std::vector<Check> out;
  for (const double k : detail::verify_kappas()) {
    const OdeSpec spec = bulk_block_ode(k);
    const CplxFn f1 = [k](cplx x) { return block_F_normalized(FBlockKind::F11, x, k); };
    const CplxFn f3 = [k](cplx x) { return block_F_normalized(FBlockKind::F31, x, k); };
    const cplx base(0.4, 0.0);

    const MonodromyResult r0 = monodromy(spec, f1, f3, cplx(0.0), base);
    const MonodromyResult r1 = monodromy(spec, f1, f3, cplx(1.0), base);
    detail::push_check(out, detail::with_kappa("monodromy-zero", k),
                       detail::mat2_max_abs_diff(r0.mat, block_monodromy_zero(k)), 1e-6);
    detail::push_check(out, detail::with_kappa("monodromy-one", k),
                       detail::mat2_max_abs_diff(r1.mat, block_monodromy_one(k)), 1e-6);
    detail::push_check(out, detail::with_kappa("monodromy-det-zero", k),
                       std::abs(r0.det - r0.det_expected), 1e-9);
    detail::push_check(out, detail::with_kappa("monodromy-det-one", k),
                       std::abs(r1.det - r1.det_expected), 1e-9);

    // the physical combination |F11|^2 - |F31|^2 is invariant under
    // continuation: M^T diag(1,-1) conj(M) = diag(1,-1)
    double inv = 0.0;
    for (const Mat2* m : {&r0.mat, &r1.mat}) {
      const double D[2] = {1.0, -1.0};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          cplx g(0.0);
          for (int l = 0; l < 2; ++l) g += m->m[l][i] * D[l] * std::conj(m->m[l][j]);
          inv = std::max(inv, std::abs(g - cplx(i == j ? D[i] : 0.0)));
        }
    }
    detail::push_check(out, detail::with_kappa("monodromy-invariance", k), inv, 1e-9);

    // loop around both singular points = product of the single loops
    const cplx base2(0.5, -0.9);
    const Mat2 m0 = monodromy(spec, f1, f3, cplx(0.0), base2).mat;
    const Mat2 m1 = monodromy(spec, f1, f3, cplx(1.0), base2).mat;
    const Mat2 both = continue_basis_loop(spec, f1, f3, cplx(0.5, 0.0), 0.7, base2);
    detail::push_check(out, detail::with_kappa("monodromy-composition", k),
                       detail::mat2_max_abs_diff(both, mat2_mul(m0, m1)), 1e-9);
  }
  return out;
}

// -------------------------------------------------------- crossing suite --

inline std::vector<Check> verify_crossing() {
  std::vector<Check> out;
  static const std::vector<cplx> xs = {cplx(0.1, 0.0),  cplx(0.25, 0.0), cplx(0.4, 0.0),
                                       cplx(0.55, 0.0), cplx(0.7, 0.0),  cplx(0.85, 0.0),
                                       cplx(0.3, 0.2),  cplx(0.6, -0.15)};
  static const std::vector<double> As = {0.0, 0.5, 1.7};

  for (const double k : detail::verify_kappas()) {
    double fg = 0.0, gf = 0.0, phys = 0.0, logsplit = 0.0;
    for (const cplx x : xs) {
      const cplx w = cplx(1.0) - x;
      const cplx F11 = block_F_normalized(FBlockKind::F11, x, k);
      const cplx F31 = block_F_normalized(FBlockKind::F31, x, k);
      const cplx Gm = block_G_normalized(GBlockKind::Gm11, w, k, 0.0);
      for (const double A : As) {
        const cplx G11 = block_G_normalized(GBlockKind::G11, w, k, A);
        // x=0 basis from the x=1 basis and back
        fg = std::max(fg, std::abs(F11 - (G11 + (1.0 - A) * Gm)));
        fg = std::max(fg, std::abs(F31 - (G11 - A * Gm)));
        gf = std::max(gf, std::abs(G11 - (A * F11 + (1.0 - A) * F31)));
        gf = std::max(gf, std::abs(Gm - (F11 - F31)));
        // physical combination, expressed in either basis
        const double lhs = std::norm(F11) - std::norm(F31);
        const double rhs =
            2.0 * (G11 * std::conj(Gm)).real() + (1.0 - 2.0 * A) * std::norm(Gm);
        phys = std::max(phys, std::abs(lhs - rhs));
        // log/regular split of G11 near x=1
        const auto [S, logcoef] = g11_log_split(w, k, A);
        const cplx rebuilt = std::pow(w, -k / 8.0) * S + logcoef * std::log(w);
        logsplit = std::max(logsplit, std::abs(rebuilt - G11));
      }
      logsplit = std::max(
          logsplit, std::abs(g11_log_coefficient_closed(w, k) -
                             std::tan(std::numbers::pi * k / 4.0) /
                                 (2.0 * std::numbers::pi) * norm_gm11(k) * block_gm11(w, k)));
    }
    detail::push_check(out, detail::with_kappa("crossing-f-from-g", k), fg, 1e-9);
    detail::push_check(out, detail::with_kappa("crossing-g-from-f", k), gf, 1e-9);
    detail::push_check(out, detail::with_kappa("crossing-physical", k), phys, 1e-9);
    detail::push_check(out, detail::with_kappa("crossing-log-split", k), logsplit, 1e-9);
  }

  // winding block symmetry: B1 = B3 - B2 at rho = rho_tau = 1
  double xing = 0.0;
  for (int i = 1; i <= 9; ++i) {
    const double s = 0.1 * i;
    xing = std::max(xing, std::abs(winding_block_b1(1.0, 1.0, s) -
                                   (winding_block_b3(1.0, 1.0, s) -
                                    winding_block_b2(1.0, 1.0, s))));
  }
  detail::push_check(out, "winding-block-symmetry", xing, 1e-9);
  return out;
}

// ------------------------------------------------------------- PDE suite --

inline std::vector<Check> verify_pde() {
  std::vector<Check> out;
  const auto probe = [&out](const char* name, double c1, double c2) {
    const auto H = [c1, c2](double s, double t) { return h_general(s, 1.0, t, c1, c2); };
    const auto [r1, r2] = pde_residuals_sigma_tau(H);
    std::string n(name);
    detail::push_check(out, n + "-tau2", r1, 1e-6);
    detail::push_check(out, n + "-sigma-tau", r2, 1e-6);
  };
  probe("pde-winding-block", 1.0, 0.0);
  probe("pde-power-block", 0.0, 1.0);
  probe("pde-mixed", 1.3, 0.7);
  return out;
}

// -------------------------------------------------------- identity suite --

inline std::vector<Check> verify_identities() {
  std::vector<Check> out;
  const double pi = std::numbers::pi;

  // winding distribution: sum to one, marginalization to the left-passage law
  {
    double sum1 = 0.0, marg = 0.0;
    for (int a = 1; a <= 20; ++a)
      for (int b = 1; b <= 20; ++b)
        for (int s = 0; s <= 10; ++s) {
          const double vA = pi * a / 21.0;
          const double vB = pi * b / 21.0;
          const double sig = s / 10.0;
          const WindingDistribution p = winding_probs(vA, vB, sig);
          sum1 = std::max(sum1, std::abs(p.p_ab + p.p_a + p.p_b + p.p_o - 1.0));
          marg = std::max(marg, std::abs(p.p_ab + p.p_a - schramm_left_passage(vA)));
        }
    detail::push_check(out, "winding-sum-to-one", sum1, 1e-12);
    detail::push_check(out, "winding-marginalization", marg, 1e-12);
  }

  // sigma -> 1: distant points decide independently
  {
    double fac = 0.0;
    for (int a = 1; a <= 9; ++a)
      for (int b = 1; b <= 9; ++b) {
        const double vA = pi * a / 10.0;
        const double vB = pi * b / 10.0;
        const WindingDistribution p = winding_probs(vA, vB, 1.0 - 1e-8);
        fac = std::max(fac, std::abs(p.p_ab - schramm_left_passage(vA) *
                                                  schramm_left_passage(vB)));
      }
    detail::push_check(out, "winding-sigma1-factorization", fac, 1e-8);
  }

  // sigma = 0 with vB = vA: coincident points share a side
  {
    double coin = 0.0;
    for (int a = 1; a <= 19; ++a) {
      const double v = pi * a / 20.0;
      const WindingDistribution p = winding_probs(v, v, 0.0);
      const double pl = schramm_left_passage(v);
      coin = std::max({coin, std::abs(p.p_ab - pl), std::abs(p.p_a), std::abs(p.p_b),
                       std::abs(p.p_o - (1.0 - pl))});
    }
    detail::push_check(out, "winding-coincident-reduction", coin, 1e-8);
  }

  // boundary limits: v -> 0 pins every law to its boundary value
  {
    const double v = 1e-6;
    double lim = std::abs(schramm_left_passage(v) - 1.0);
    lim = std::max(lim, std::abs(schramm_left_passage(pi - v)));
    lim = std::max(lim, std::abs(boundary_single_twist_strip(v) - 1.0));
    const WindingDistribution p = winding_probs(v, 0.5, 0.3);
    lim = std::max(lim, std::abs(p.p_ab + p.p_a - 1.0));
    detail::push_check(out, "boundary-limits", lim, 1e-5);
  }

  // the physical bulk combination must not depend on the mixing parameter A
  {
    double dev = 0.0;
    for (const double k : detail::verify_kappas())
      for (const cplx x : detail::verify_points()) {
        const double ref = physical_bulk_block(x, k);
        for (const double A : {0.0, 0.5, 1.7}) {
          dev = std::max(dev, std::abs(physical_bulk_block_from_G(x, k, A) - ref));
        }
      }
    detail::push_check(out, "physical-block-A-independence", dev, 1e-10);
  }

  // magnetization / separation-probability complement, 50 spread-out x
  {
    double dev = 0.0;
    for (int i = 0; i < 50; ++i) {
      const cplx x(-1.5 + 4.0 * i / 49.0, 0.05 + 1.25 * ((i * 37) % 50) / 49.0);
      dev = std::max(dev,
                     std::abs(magnetization_same_cluster(x) +
                              sal_separation_prob_from_x(x) - 1.0));
    }
    detail::push_check(out, "mag-sal-complement", dev, 1e-10);
  }

  // separation probability stays in [0,1] and respects pair exchange
  {
    double range = 0.0, sym = 0.0;
    for (int i = 0; i < 1000; ++i) {
      // deterministic low-discrepancy-ish scatter in H^4
      const auto pt = [i](int j) {
        const double a = std::fmod(0.37 + 0.631 * i + 0.217 * j, 1.0);
        const double b = std::fmod(0.11 + 0.419 * i + 0.353 * j, 1.0);
        return cplx(-2.0 + 4.0 * a, 0.1 + 1.8 * b);
      };
      const cplx z1 = pt(0), z2 = pt(1), z3 = pt(2), z4 = pt(3);
      const double p = sal_separation_prob(z1, z2, z3, z4);
      range = std::max({range, -p, p - 1.0});
      sym = std::max(sym, std::abs(p - sal_separation_prob(z2, z1, z3, z4)));
      sym = std::max(sym, std::abs(p - sal_separation_prob(z1, z2, z4, z3)));
    }
    detail::push_check(out, "sal-prob-range", range, 1e-12);
    detail::push_check(out, "sal-prob-pair-exchange", sym, 1e-10);
  }

  // half-plane reduction agrees with the strip coordinates
  {
    double dev = 0.0;
    for (int i = 0; i < 20; ++i) {
      const cplx zA(-1.0 + 0.15 * i, 0.3 + 0.05 * i);
      const cplx zB(0.5 + 0.1 * i, 1.4 - 0.04 * i);
      const WindingCoords wc = winding_coords(zA, zB, Anchors::half_line(0.0));
      dev = std::max(dev, std::abs(winding_sigma_halfplane(zA, zB) - wc.sigma));
    }
    detail::push_check(out, "winding-sigma-halfplane", dev, 1e-12);
  }

  return out;
}

inline std::vector<Check> verify_all() {
  std::vector<Check> out = verify_ode();
  const auto append = [&out](std::vector<Check> v) {
    out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  };
  append(verify_monodromy());
  append(verify_crossing());
  append(verify_pde());
  append(verify_identities());
  return out;
}

}  // namespace sletwist
