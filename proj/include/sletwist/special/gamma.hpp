#pragma once
// Real gamma, log-gamma and digamma. The gamma itself delegates to the C
// library (which is well within the 1e-12 relative target on [-20,50]); the
// digamma is a standard recurrence + asymptotic tail, needed by the
// logarithmic hypergeometric connection formulas.

#include <cmath>
#include <string>

#include "sletwist/errors.hpp"

namespace sletwist {

inline bool is_nonpositive_integer(double x, double tol = 1e-12) {
  return x <= 0.5 && std::abs(x - std::round(x)) < tol;
}

inline double gamma_real(double x) {
  if (is_nonpositive_integer(x))
    throw domain_error("gamma_real: pole at non-positive integer x=" + std::to_string(x));
  return std::tgamma(x);
}

// 1/Gamma(x); zero at the poles, no throw. Used where a Gamma in a
// denominator is allowed to kill a term.
inline double rgamma_real(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

inline double log_gamma_real(double x) {
  if (is_nonpositive_integer(x))
    throw domain_error("log_gamma_real: pole at non-positive integer x=" + std::to_string(x));
  return std::lgamma(x);
}

// psi(x) via downward recurrence to x >= 8 and the Bernoulli asymptotic.
inline double digamma_real(double x) {
  if (is_nonpositive_integer(x))
    throw domain_error("digamma_real: pole at non-positive integer x=" + std::to_string(x));
  double acc = 0.0;
  if (x < 0.0) {
    // reflection: psi(1-x) - psi(x) = pi cot(pi x)
    const double pi = 3.14159265358979323846;
    return digamma_real(1.0 - x) - pi / std::tan(pi * x);
  }
  while (x < 8.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x, inv2 = inv * inv;
  // psi(x) ~ ln x - 1/(2x) - sum B_{2n}/(2n x^{2n})
  double tail = std::log(x) - 0.5 * inv
              - inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (1.0 / 240 - inv2 * (1.0 / 132)))));
  return acc + tail;
}

}  // namespace sletwist
