// Left-passage probability across the angle range: closed form vs a small
// Monte Carlo run at each point. Writes CSV to stdout.
//
//   demo_left_passage [n_samples] [n_steps]

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>

#include "sletwist/sletwist.hpp"

using namespace sletwist;

int main(int argc, char** argv) {
  SimConfig cfg;
  cfg.n_samples = argc > 1 ? std::atoll(argv[1]) : 2000;
  cfg.n_steps = argc > 2 ? std::atoi(argv[2]) : 1000;
  cfg.seed = 2026;

  std::printf("v,prediction,empirical,std_err,z_score\n");
  for (int k = 1; k <= 11; ++k) {
    const double v = M_PI * k / 12.0;
    const cplx z = std::polar(1.0, v);
    const double pred = schramm_left_passage(v);
    const LeftPassageEstimate est = estimate_left_passage(z, cfg);
    const double zs = est.std_err > 0.0 ? (est.p - pred) / est.std_err : 0.0;
    std::printf("%.10f,%.10f,%.10f,%.10f,%+.3f\n", v, pred, est.p, est.std_err, zs);
  }
  return 0;
}
