#pragma once

// Observables on top of the Loewner engine: single-point left-passage
// probability, the four-bin two-point winding distribution, the driving-law
// variance self-test, and a step-halving probe for discretization drift.
//
// Accumulation is integer counts merged in thread-index order, so a fixed
// (seed, config) gives bit-identical results for any --threads value.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <sstream>
#include <thread>
#include <vector>

#include "sletwist/errors.hpp"
#include "sletwist/geom/conformal.hpp"
#include "sletwist/mc/loewner.hpp"

namespace sletwist {

// default horizon: 400 * max|z|^2 puts every tracked point deep inside the
// swallowed scale at termination
inline SimConfig resolve_total_time(SimConfig cfg, double max_abs_z) {
  if (cfg.total_time <= 0.0) cfg.total_time = 400.0 * max_abs_z * max_abs_z;
  return cfg;
}

inline void enforce_quality(double undecided_fraction) {
  if (undecided_fraction > 0.01) {
    std::ostringstream os;
    os << "undecided fraction " << undecided_fraction * 100.0
       << "% exceeds 1%; increase total_time or max_extension_factor";
    throw quality_error(os.str());
  }
}

namespace detail {

// contiguous sample chunks; chunk(thread_slot, lo, hi) covers [lo, hi)
template <class Chunk>
inline void for_each_chunk(long long n, int threads, Chunk&& chunk) {
  const long long nt = std::clamp<long long>(threads, 1, std::max<long long>(n, 1));
  if (nt == 1) {
    chunk(0, 0, n);
    return;
  }
  const long long per = (n + nt - 1) / nt;
  std::vector<std::thread> pool;
  for (long long t = 0; t < nt; ++t) {
    const long long lo = t * per;
    const long long hi = std::min(n, lo + per);
    if (lo >= hi) break;
    pool.emplace_back([&chunk, t, lo, hi] { chunk(int(t), lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

// ----------------------------------------------------------- left passage --

struct LeftPassageEstimate {
  double p = 0.0;        // decided-sample mean
  double std_err = 0.0;  // sqrt(p(1-p)/n_decided)
  double undecided_fraction = 0.0;
  long long n_samples = 0;
  long long n_left = 0;
  long long n_right = 0;
  long long n_undecided = 0;
  long long swallowed = 0;
  long long newton_fallbacks = 0;
  double total_time = 0.0;

  long long n_decided() const { return n_left + n_right; }
  bool quality_ok() const { return undecided_fraction <= 0.01; }
};

inline LeftPassageEstimate estimate_left_passage(cplx z, const SimConfig& cfg_in) {
  detail::check_interior(z, "estimate_left_passage");
  const SimConfig cfg = resolve_total_time(cfg_in, std::abs(z));
  const LoewnerEngine engine(cfg);

  struct Partial {
    long long left = 0, right = 0, undecided = 0, swallowed = 0, fallbacks = 0;
  };
  std::vector<Partial> parts(std::size_t(std::max(cfg.threads, 1)));
  detail::for_each_chunk(cfg.n_samples, cfg.threads, [&](int slot, long long lo, long long hi) {
    Partial& acc = parts[std::size_t(slot)];
    for (long long i = lo; i < hi; ++i) {
      TrackedPoint pt{z, z, Side::undecided, false};
      const SampleDiag diag = engine.run_sample(std::uint64_t(i), {&pt, 1});
      acc.swallowed += diag.swallowed;
      acc.fallbacks += diag.newton_fallbacks;
      if (pt.swallowed || pt.status == Side::undecided) {
        ++acc.undecided;
      } else if (pt.status == Side::left) {
        ++acc.left;
      } else {
        ++acc.right;
      }
    }
  });

  LeftPassageEstimate out;
  out.n_samples = cfg.n_samples;
  out.total_time = cfg.total_time;
  for (const auto& acc : parts) {
    out.n_left += acc.left;
    out.n_right += acc.right;
    out.n_undecided += acc.undecided;
    out.swallowed += acc.swallowed;
    out.newton_fallbacks += acc.fallbacks;
  }
  const long long nd = out.n_decided();
  if (nd > 0) {
    out.p = double(out.n_left) / double(nd);
    out.std_err = std::sqrt(out.p * (1.0 - out.p) / double(nd));
  }
  out.undecided_fraction = double(out.n_undecided) / double(out.n_samples);
  return out;
}

// ---------------------------------------------------------------- winding --

// bins: AB = left of both, A = left of A only, B = left of B only, O = neither
struct EmpiricalWinding {
  std::array<long long, 4> counts{};
  long long undecided = 0;
  long long n_samples = 0;
  long long swallowed = 0;
  long long newton_fallbacks = 0;
  double total_time = 0.0;

  long long n_decided() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
  double undecided_fraction() const { return double(undecided) / double(n_samples); }
  bool quality_ok() const { return undecided_fraction() <= 0.01; }

  std::array<double, 4> fractions() const {
    const double nd = double(n_decided());
    std::array<double, 4> f{};
    if (nd > 0) {
      for (int k = 0; k < 4; ++k) f[std::size_t(k)] = double(counts[std::size_t(k)]) / nd;
    }
    return f;
  }
  std::array<double, 4> std_errors() const {
    const double nd = double(n_decided());
    const auto f = fractions();
    std::array<double, 4> se{};
    if (nd > 0) {
      for (int k = 0; k < 4; ++k) {
        se[std::size_t(k)] = std::sqrt(f[std::size_t(k)] * (1.0 - f[std::size_t(k)]) / nd);
      }
    }
    return se;
  }
};

inline EmpiricalWinding estimate_winding(cplx zA, cplx zB, const SimConfig& cfg_in) {
  detail::check_interior(zA, "estimate_winding");
  detail::check_interior(zB, "estimate_winding");
  const SimConfig cfg = resolve_total_time(cfg_in, std::max(std::abs(zA), std::abs(zB)));
  const LoewnerEngine engine(cfg);

  struct Partial {
    std::array<long long, 4> counts{};
    long long undecided = 0, swallowed = 0, fallbacks = 0;
  };
  std::vector<Partial> parts(std::size_t(std::max(cfg.threads, 1)));
  detail::for_each_chunk(cfg.n_samples, cfg.threads, [&](int slot, long long lo, long long hi) {
    Partial& acc = parts[std::size_t(slot)];
    for (long long i = lo; i < hi; ++i) {
      std::array<TrackedPoint, 2> pts{TrackedPoint{zA, zA, Side::undecided, false},
                                      TrackedPoint{zB, zB, Side::undecided, false}};
      const SampleDiag diag = engine.run_sample(std::uint64_t(i), pts);
      acc.swallowed += diag.swallowed;
      acc.fallbacks += diag.newton_fallbacks;
      const bool decided = !pts[0].swallowed && !pts[1].swallowed &&
                           pts[0].status != Side::undecided && pts[1].status != Side::undecided;
      if (!decided) {
        ++acc.undecided;
        continue;
      }
      const bool la = pts[0].status == Side::left;
      const bool lb = pts[1].status == Side::left;
      const int bin = la ? (lb ? 0 : 1) : (lb ? 2 : 3);
      ++acc.counts[std::size_t(bin)];
    }
  });

  EmpiricalWinding out;
  out.n_samples = cfg.n_samples;
  out.total_time = cfg.total_time;
  for (const auto& acc : parts) {
    for (int k = 0; k < 4; ++k) out.counts[std::size_t(k)] += acc.counts[std::size_t(k)];
    out.undecided += acc.undecided;
    out.swallowed += acc.swallowed;
    out.newton_fallbacks += acc.fallbacks;
  }
  return out;
}

// ------------------------------------------------------- driving self-test --

struct DrivingVarianceEstimate {
  double var_over_t = 0.0;  // sample Var(W_T) / T
  double kappa = 0.0;
  double rel_dev = 0.0;  // |var/T - kappa| / kappa
  long long n_samples = 0;
};

// W_T = sum dW_k ~ N(0, kappa T) for any step schedule; checks the whole
// RNG -> Gaussian -> schedule pipeline.
inline DrivingVarianceEstimate driving_variance(const SimConfig& cfg_in) {
  const SimConfig cfg = resolve_total_time(cfg_in, 1.0);
  check_sim_config(cfg);
  const auto t = step_schedule(cfg.total_time, cfg.n_steps, cfg.schedule_power);
  const double sq = std::sqrt(cfg.kappa);

  std::vector<double> sums(std::size_t(std::max(cfg.threads, 1)), 0.0);
  std::vector<double> sums2(sums.size(), 0.0);
  detail::for_each_chunk(cfg.n_samples, cfg.threads, [&](int slot, long long lo, long long hi) {
    double s1 = 0.0, s2 = 0.0;
    for (long long i = lo; i < hi; ++i) {
      CounterStream rng(cfg.seed, std::uint64_t(i));
      double wt = 0.0;
      for (std::size_t k = 0; k + 1 < t.size(); ++k) {
        wt += sq * std::sqrt(t[k + 1] - t[k]) * rng.normal();
      }
      s1 += wt;
      s2 += wt * wt;
    }
    sums[std::size_t(slot)] += s1;
    sums2[std::size_t(slot)] += s2;
  });

  double s1 = 0.0, s2 = 0.0;
  for (std::size_t k = 0; k < sums.size(); ++k) {
    s1 += sums[k];
    s2 += sums2[k];
  }
  const double n = double(cfg.n_samples);
  const double var = (s2 - s1 * s1 / n) / (n - 1.0);

  DrivingVarianceEstimate out;
  out.kappa = cfg.kappa;
  out.n_samples = cfg.n_samples;
  out.var_over_t = var / cfg.total_time;
  out.rel_dev = std::abs(out.var_over_t - cfg.kappa) / cfg.kappa;
  return out;
}

// -------------------------------------------------- discretization control --

struct StepHalvingProbe {
  LeftPassageEstimate coarse;
  LeftPassageEstimate fine;  // same config, 2x n_steps
  double drift = 0.0;
  double joint_std_err = 0.0;
};

inline StepHalvingProbe step_halving_left_passage(cplx z, const SimConfig& cfg) {
  StepHalvingProbe probe;
  probe.coarse = estimate_left_passage(z, cfg);
  SimConfig fine = cfg;
  fine.n_steps *= 2;
  probe.fine = estimate_left_passage(z, fine);
  probe.drift = probe.fine.p - probe.coarse.p;
  probe.joint_std_err = std::sqrt(probe.coarse.std_err * probe.coarse.std_err +
                                  probe.fine.std_err * probe.fine.std_err);
  return probe;
}

}  // namespace sletwist
