#pragma once

// Estimation statistics for the MC reports: regularized incomplete gamma
// (series + Lentz continued fraction), chi-square upper tails, multinomial
// goodness of fit, Wilson proportion intervals, and a KS distance for the
// p-value uniformity property.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <vector>

#include "sletwist/errors.hpp"
#include "sletwist/special/gamma.hpp"

namespace sletwist {

// ------------------------------------------------------- incomplete gamma --

namespace detail {

inline double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-16) {
      return sum * std::exp(-x + a * std::log(x) - log_gamma_real(a));
    }
  }
  throw numeric_error("gamma_p: series did not converge");
}

inline double gamma_q_cf(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -double(i) * (double(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) {
      return h * std::exp(-x + a * std::log(x) - log_gamma_real(a));
    }
  }
  throw numeric_error("gamma_q: continued fraction did not converge");
}

}  // namespace detail

// regularized lower incomplete gamma P(a, x)
inline double gamma_p(double a, double x) {
  if (!(a > 0.0)) throw domain_error("gamma_p: a must be > 0");
  if (x < 0.0) throw domain_error("gamma_p: x must be >= 0");
  if (x == 0.0) return 0.0;
  return x < a + 1.0 ? detail::gamma_p_series(a, x) : 1.0 - detail::gamma_q_cf(a, x);
}

// regularized upper incomplete gamma Q(a, x) = 1 - P(a, x)
inline double gamma_q(double a, double x) {
  if (!(a > 0.0)) throw domain_error("gamma_q: a must be > 0");
  if (x < 0.0) throw domain_error("gamma_q: x must be >= 0");
  if (x == 0.0) return 1.0;
  return x < a + 1.0 ? 1.0 - detail::gamma_p_series(a, x) : detail::gamma_q_cf(a, x);
}

// upper-tail p-value of a chi-square variate
inline double chi2_upper_tail(double chi2, int dof) {
  if (dof < 1) throw domain_error("chi2_upper_tail: dof must be >= 1");
  if (chi2 < 0.0) throw domain_error("chi2_upper_tail: chi2 must be >= 0");
  return gamma_q(0.5 * dof, 0.5 * chi2);
}

// -------------------------------------------------------- goodness of fit --

struct GofReport {
  double chi2 = 0.0;
  int dof = 0;
  double p_value = 1.0;
  std::vector<double> z_scores;  // per input bin; dropped bins report 0
};

// Pearson chi-square of observed counts against expected_probs. Bins with
// expected probability 0 and observed 0 are dropped (dof shrinks with them).
inline GofReport chi_square_multinomial(const std::vector<long long>& observed,
                                        const std::vector<double>& expected_probs,
                                        long long n) {
  if (observed.size() != expected_probs.size() || observed.empty()) {
    throw domain_error("chi_square_multinomial: observed/expected size mismatch");
  }
  if (n < 1) throw domain_error("chi_square_multinomial: n must be >= 1");
  double psum = 0.0;
  long long osum = 0;
  for (std::size_t k = 0; k < observed.size(); ++k) {
    if (observed[k] < 0) throw domain_error("chi_square_multinomial: negative count");
    if (expected_probs[k] < 0.0) throw domain_error("chi_square_multinomial: negative prob");
    psum += expected_probs[k];
    osum += observed[k];
  }
  if (std::abs(psum - 1.0) > 1e-9) {
    throw domain_error("chi_square_multinomial: expected_probs must sum to 1");
  }
  if (osum != n) throw domain_error("chi_square_multinomial: counts do not sum to n");

  GofReport rep;
  rep.z_scores.assign(observed.size(), 0.0);
  int kept = 0;
  for (std::size_t k = 0; k < observed.size(); ++k) {
    const double ek = double(n) * expected_probs[k];
    if (expected_probs[k] == 0.0) {
      if (observed[k] != 0) {
        throw domain_error("chi_square_multinomial: observed count in zero-probability bin");
      }
      continue;  // degenerate bin dropped, dof reduced
    }
    if (ek < 5.0) {
      std::ostringstream os;
      os << "chi_square_multinomial: expected count " << ek << " in bin " << k
         << " is below 5; merge bins or increase n";
      throw quality_error(os.str());
    }
    const double diff = double(observed[k]) - ek;
    rep.chi2 += diff * diff / ek;
    rep.z_scores[k] = diff / std::sqrt(ek * (1.0 - expected_probs[k]));
    ++kept;
  }
  rep.dof = kept - 1;
  if (rep.dof < 1) throw domain_error("chi_square_multinomial: fewer than two usable bins");
  rep.p_value = chi2_upper_tail(rep.chi2, rep.dof);
  return rep;
}

// --------------------------------------------------------- Wilson interval --

inline constexpr double kZ95 = 1.9599639845400542;  // two-sided 95% normal quantile

struct WilsonInterval {
  double lo = 0.0;
  double hi = 1.0;
};

inline WilsonInterval wilson_interval(long long successes, long long n, double z = kZ95) {
  if (n < 1) throw domain_error("wilson_interval: n must be >= 1");
  if (successes < 0 || successes > n) {
    throw domain_error("wilson_interval: successes must lie in [0, n]");
  }
  const double nn = double(n);
  const double p = double(successes) / nn;
  const double z2 = z * z;
  const double denom = nn + z2;
  const double center = (double(successes) + 0.5 * z2) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) * nn + 0.25 * z2) / denom;
  return {center - half, center + half};
}

// ------------------------------------------------------------ KS distance --

// two-sided Kolmogorov-Smirnov distance of a sample against U(0,1)
inline double ks_distance_uniform(std::vector<double> values) {
  if (values.empty()) throw domain_error("ks_distance_uniform: empty sample");
  std::sort(values.begin(), values.end());
  const double n = double(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double u = values[i];
    if (u < 0.0 || u > 1.0) throw domain_error("ks_distance_uniform: value outside [0,1]");
    d = std::max(d, std::max(double(i + 1) / n - u, u - double(i) / n));
  }
  return d;
}

}  // namespace sletwist
