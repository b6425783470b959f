// Four-bin winding distribution as a function of the crossing coordinate
// sigma at fixed strip angles — the data behind the joint-passage curves.
// Writes CSV to stdout.

#include <cmath>
#include <cstdio>

#include "sletwist/sletwist.hpp"

using namespace sletwist;

int main() {
  const double va = M_PI / 3.0;
  const double vbs[] = {M_PI / 4.0, M_PI / 2.0, 2.0 * M_PI / 3.0};

  std::printf("vA,vB,sigma,p_ab,p_a,p_b,p_o,W\n");
  for (double vb : vbs) {
    for (int k = 0; k <= 50; ++k) {
      const double sigma = double(k) / 50.0;
      const WindingDistribution p = winding_probs(va, vb, sigma);
      std::printf("%.6f,%.6f,%.4f,%.10f,%.10f,%.10f,%.10f,%.10f\n", va, vb, sigma,
                  p.p_ab, p.p_a, p.p_b, p.p_o, winding_w(sigma));
    }
  }
  return 0;
}
