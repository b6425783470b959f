#pragma once

// Gauss hypergeometric 2F1 for real parameters and complex argument.
//
// Routing: direct power series for small |z|, connection at 1 for |1-z|
// small (with dedicated logarithmic variants when c-a-b is an integer),
// connection at infinity for large |z| (again with log variants when b-a is
// an integer), and a Pfaff transform to cover the remaining annulus near the
// unit circle.  Principal branches everywhere; the side of the [1,inf) cut is
// selected by the sign of the zero imaginary part of z.

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <utility>

#include "sletwist/errors.hpp"
#include "sletwist/special/gamma.hpp"

namespace sletwist {

using cplx = std::complex<double>;

// ---------------------------------------------------------------- parameters

struct Hyp2F1Params {
  double a, b, c;   // stored with a <= b so a<->b reflection is bit-for-bit
  bool log_case;    // c-a-b integer within tolerance: connection at 1 has logs
  int s_int;        // round(c-a-b) when log_case, else 0

  Hyp2F1Params(double a_, double b_, double c_)
      : a(std::min(a_, b_)), b(std::max(a_, b_)), c(c_) {
    if (is_nonpositive_integer(c)) {
      std::ostringstream os;
      os << "hyp2f1: c must not be zero or a negative integer (c=" << c << ")";
      throw domain_error(os.str());
    }
    const double s = c - a - b;
    log_case = std::abs(s - std::round(s)) < 1e-12;
    s_int = log_case ? static_cast<int>(std::llround(s)) : 0;
  }
};

namespace detail {

inline constexpr int kMaxTerms = 10000;
inline constexpr double kSeriesTol = 1e-17;   // last term vs partial sum
inline constexpr int kTolStreak = 3;          // consecutive small terms
inline constexpr double kIntTol = 1e-12;      // parameter degeneracy detection

// 1-z keeping the signed zero of the imaginary part (1.0-z would give +0-+0=+0,
// losing the cut side for z = x+0i, x>1).
inline cplx one_minus(cplx z) { return {1.0 - z.real(), -z.imag()}; }

// integer power by repeated multiplication; avoids exp(0*log 0) NaNs at w=0
inline cplx ipow(cplx w, int n) {
  if (n < 0) return 1.0 / ipow(w, -n);
  cplx r = 1.0, p = w;
  for (; n; n >>= 1, p *= p)
    if (n & 1) r *= p;
  return r;
}

[[noreturn]] inline void series_fail(const char* which, double a, double b,
                                     double c, cplx z, cplx term, cplx sum) {
  std::ostringstream os;
  os << "hyp2f1: " << which << " series did not converge after " << kMaxTerms
     << " terms (a=" << a << " b=" << b << " c=" << c << " z=" << z.real()
     << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i, |last term|="
     << std::abs(term) << ", |partial sum|=" << std::abs(sum) << ")";
  throw numeric_error(os.str());
}

// plain series sum_k (a)_k (b)_k / ((c)_k k!) z^k ; terminates naturally when
// a or b is an exact non-positive integer
inline cplx series_2f1(double a, double b, double c, cplx z) {
  cplx term = 1.0, sum = 1.0;
  int streak = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z;
    sum += term;
    if (std::abs(term) < kSeriesTol * std::abs(sum)) {
      if (++streak >= kTolStreak) return sum;
    } else {
      streak = 0;
    }
  }
  series_fail("direct", a, b, c, z, z, sum);
}

// ------------------------------------------------------- connection at z = 1
//
// F(a,b;c;1-w) = R(w) + L(w) log w for s = c-a-b = m integer.  m >= 1:
//   R = G(c)G(m)/(G(a+m)G(b+m)) sum_{k<m} (a)_k(b)_k/(k!(1-m)_k) w^k
//       + (-1)^m G(c)/(G(a)G(b)) w^m sum_k C_k Psi_k w^k
//   L = -(-1)^m G(c)/(G(a)G(b)) w^m sum_k C_k w^k
//   C_k = (a+m)_k(b+m)_k/(k!(k+m)!),
//   Psi_k = psi(k+1)+psi(k+m+1)-psi(a+k+m)-psi(b+k+m)
// (m = 0 reduces to the classical psi-series.)  m < 0 goes through the Euler
// transform F = w^s F(c-a,c-b;c;z), which has s' = -s > 0.
inline std::pair<cplx, cplx> log_split_at_1(double a, double b, double c,
                                            cplx w) {
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b))
    return {series_2f1(a, b, c, one_minus(w)), 0.0};   // terminating, no log

  const int m = static_cast<int>(std::llround(c - a - b));
  if (m < 0) {
    auto [r, l] = log_split_at_1(c - a, c - b, c, w);
    const cplx ws = ipow(w, m);
    return {ws * r, ws * l};
  }

  cplx finite = 0.0;
  if (m >= 1) {
    cplx fk = 1.0, fsum = 1.0;
    for (int k = 0; k + 1 < m; ++k) {
      fk *= (a + k) * (b + k) / ((k + 1.0) * (1.0 - m + k)) * w;
      fsum += fk;
    }
    finite = gamma_real(c) * gamma_real(m) * rgamma_real(a + m) *
             rgamma_real(b + m) * fsum;
  }

  double p1 = digamma_real(1.0), p2 = digamma_real(m + 1.0);
  double p3 = digamma_real(a + m), p4 = digamma_real(b + m);
  cplx ck = cplx(rgamma_real(m + 1.0));   // C_0 = 1/m!
  cplx s_log = ck, s_psi = ck * (p1 + p2 - p3 - p4);
  int streak = 0;
  bool done = false;
  for (int k = 0; k < kMaxTerms && !done; ++k) {
    ck *= (a + m + k) * (b + m + k) / ((k + 1.0) * (k + m + 1.0)) * w;
    p1 += 1.0 / (k + 1.0);
    p2 += 1.0 / (k + m + 1.0);
    p3 += 1.0 / (a + m + k);
    p4 += 1.0 / (b + m + k);
    s_log += ck;
    s_psi += ck * (p1 + p2 - p3 - p4);
    if (std::abs(ck) * (1.0 + std::abs(p1 + p2 - p3 - p4)) <
        kSeriesTol * (std::abs(s_log) + std::abs(s_psi))) {
      if (++streak >= kTolStreak) done = true;
    } else {
      streak = 0;
    }
  }
  if (!done) series_fail("log-connection", a, b, c, w, s_log, s_psi);

  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const cplx pref =
      sign * gamma_real(c) * rgamma_real(a) * rgamma_real(b) * ipow(w, m);
  return {finite + pref * s_psi, -pref * s_log};
}

inline cplx conn_at_1(const Hyp2F1Params& p, cplx w) {
  if (p.log_case) {
    if (w == cplx(0.0) && p.s_int <= 0)
      throw domain_error("hyp2f1: divergent at z=1 (c-a-b <= 0)");
    auto [r, l] = log_split_at_1(p.a, p.b, p.c, w);
    return (l == cplx(0.0)) ? r : r + l * std::log(w);
  }
  const double s = p.c - p.a - p.b;
  const cplx t1 = gamma_real(p.c) * gamma_real(s) * rgamma_real(p.c - p.a) *
                  rgamma_real(p.c - p.b) * series_2f1(p.a, p.b, 1.0 - s, w);
  const cplx t2 = gamma_real(p.c) * gamma_real(-s) * rgamma_real(p.a) *
                  rgamma_real(p.b) * std::pow(w, cplx(s)) *
                  series_2f1(p.c - p.a, p.c - p.b, 1.0 + s, w);
  return t1 + t2;
}

// ----------------------------------------------------- connection at z = inf
//
// b = a+m, m >= 0 integer:
//   F = G(c)(-z)^{-a}/G(a+m) sum_{k<m} (a)_k G(m-k)/(k! G(c-a-k)) z^{-k}
//     + (-1)^m G(c)(-z)^{-a-m}/(G(a)G(c-a-m)) sum_k C_k B_k z^{-k}
//   C_k = (a+m)_k(1-c+a+m)_k/(k!(k+m)!),
//   B_k = log(-z)+psi(k+1)+psi(k+m+1)-psi(a+m+k)-psi(c-a-m-k)
// When c-a-m is a positive integer the C_k terminate before the psi poles;
// c-a-m a non-positive integer is a doubly degenerate family we do not need.
inline cplx invz_log(double a, double c, int m, cplx z) {
  const double cam = c - a - m;   // = c - b
  if (is_nonpositive_integer(cam)) {
    std::ostringstream os;
    os << "hyp2f1: unsupported doubly degenerate parameters (b-a=" << m
       << " and c-b=" << cam << " both integers)";
    throw numeric_error(os.str());
  }
  if (std::abs(cam - std::round(cam)) < kIntTol) {
    // c-b a positive integer: psi series would sit on digamma poles.  Euler
    // transform to (c-b, c-a, c), whose degeneracy indicator is plain a
    // (non-integer here), and recurse once.
    const double s = cam - a;   // = c - a - b
    return std::pow(one_minus(z), cplx(s)) * invz_log(cam, c, m, z);
  }
  const cplx nz = -z, zi = 1.0 / z, lognz = std::log(nz);

  cplx fin = 0.0;
  {
    cplx fk = 1.0;   // (a)_k z^{-k} / k!
    for (int k = 0; k < m; ++k) {
      fin += fk * gamma_real(m - k) * rgamma_real(c - a - k);
      fk *= (a + k) / (k + 1.0) * zi;
    }
    fin *= gamma_real(c) * rgamma_real(a + m) * std::pow(nz, cplx(-a));
  }

  double p1 = digamma_real(1.0), p2 = digamma_real(m + 1.0);
  double p3 = digamma_real(a + m), p4 = digamma_real(cam);
  cplx ck = cplx(rgamma_real(m + 1.0));
  cplx sum = ck * (lognz + p1 + p2 - p3 - p4);
  int streak = 0;
  bool done = false;
  for (int k = 0; k < kMaxTerms && !done; ++k) {
    ck *= (a + m + k) * (1.0 - cam + k) / ((k + 1.0) * (k + m + 1.0)) * zi;
    p1 += 1.0 / (k + 1.0);
    p2 += 1.0 / (k + m + 1.0);
    p3 += 1.0 / (a + m + k);
    p4 -= 1.0 / (cam - (k + 1.0));
    const cplx term = ck * (lognz + p1 + p2 - p3 - p4);
    sum += term;
    if (std::abs(term) < kSeriesTol * std::abs(sum)) {
      if (++streak >= kTolStreak) done = true;
    } else {
      streak = 0;
    }
  }
  if (!done) series_fail("1/z log-connection", a, a + m, c, z, sum, sum);

  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const cplx t2 = sign * gamma_real(c) * rgamma_real(a) *
                  rgamma_real(c - a - m) * std::pow(nz, cplx(-a - m)) * sum;
  return fin + t2;
}

inline cplx conn_at_inf(const Hyp2F1Params& p, cplx z) {
  const double a = p.a, b = p.b, c = p.c, d = b - a;   // d >= 0
  if (std::abs(d - std::round(d)) < kIntTol)
    return invz_log(a, c, static_cast<int>(std::llround(d)), z);
  const cplx zi = 1.0 / z, nz = -z;
  const cplx t1 = gamma_real(c) * gamma_real(d) * rgamma_real(b) *
                  rgamma_real(c - a) * std::pow(nz, cplx(-a)) *
                  series_2f1(a, 1.0 - c + a, 1.0 - d, zi);
  const cplx t2 = gamma_real(c) * gamma_real(-d) * rgamma_real(a) *
                  rgamma_real(c - b) * std::pow(nz, cplx(-b)) *
                  series_2f1(b, 1.0 - c + b, 1.0 + d, zi);
  return t1 + t2;
}

// Pfaff z -> z/(z-1); covers the annulus where neither |z|, |1-z| nor 1/|z|
// is comfortably below 1
inline cplx pfaff(const Hyp2F1Params& p, cplx z) {
  const cplx u = z / (z - 1.0);
  return std::pow(one_minus(z), cplx(-p.a)) *
         series_2f1(p.a, p.c - p.b, p.c, u);
}

}   // namespace detail

// ---------------------------------------------------------------- evaluation

inline cplx hyp2f1(const Hyp2F1Params& p, cplx z) {
  using namespace detail;
  if (is_nonpositive_integer(p.a) || is_nonpositive_integer(p.b))
    return series_2f1(p.a, p.b, p.c, z);   // polynomial, valid for all z

  const double r_dir = std::abs(z);
  const double r_one = std::abs(one_minus(z));
  const double r_inv = r_dir > 0.0 ? 1.0 / r_dir : 0.0;
  if (r_dir <= 0.55) return series_2f1(p.a, p.b, p.c, z);
  if (r_one <= 0.60) return conn_at_1(p, one_minus(z));
  if (r_inv <= 0.70) return conn_at_inf(p, z);

  const double r_pf = std::abs(z / (z - 1.0));
  const double best = std::min({r_dir, r_one, r_inv, r_pf});
  if (best > 0.985) {
    std::ostringstream os;
    os << "hyp2f1: no convergent expansion at z=" << z.real()
       << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag())
       << "i (|z|=" << r_dir << ", |1-z|=" << r_one << ", |z/(z-1)|=" << r_pf
       << ")";
    throw numeric_error(os.str());
  }
  if (best == r_dir) return series_2f1(p.a, p.b, p.c, z);
  if (best == r_one) return conn_at_1(p, one_minus(z));
  if (best == r_inv) return conn_at_inf(p, z);
  return pfaff(p, z);
}

// Split F(a,b;c;1-w) = regular + log_coefficient * log(w) near z = 1; the
// pieces carry the monodromy bookkeeping of the logarithmic blocks.
inline std::pair<cplx, cplx> hyp2f1_log_connection(const Hyp2F1Params& p,
                                                   cplx one_minus_z) {
  if (!p.log_case)
    throw contract_error(
        "hyp2f1_log_connection: parameters are not a logarithmic case");
  if (std::abs(one_minus_z) >= 1.0)
    throw domain_error("hyp2f1_log_connection: |1-z| must be < 1");
  return detail::log_split_at_1(p.a, p.b, p.c, one_minus_z);
}

}   // namespace sletwist
