#pragma once

// Test-only oracles, independent of the library's implementation paths:
// Bernoulli and Euler polynomials computed by exact truncated power-series
// division of their generating functions t e^{xt}/(e^t - 1) and
// 2 e^{xt}/(e^t + 1).

#include <vector>

#include "pzeta/padic.hpp"

namespace oracle {

using pzeta::Int;
using pzeta::Rat;

// coefficients of e^{x t} up to t^n
inline std::vector<Rat> exp_series(const Rat& x, long n) {
  std::vector<Rat> c(static_cast<size_t>(n) + 1);
  c[0] = Rat(1);
  for (long k = 1; k <= n; ++k) {
    c[static_cast<size_t>(k)] = c[static_cast<size_t>(k - 1)] * x / k;
    c[static_cast<size_t>(k)].canonicalize();
  }
  return c;
}

// quotient of truncated power series, den[0] != 0
inline std::vector<Rat> series_div(const std::vector<Rat>& num, const std::vector<Rat>& den,
                                   long n) {
  std::vector<Rat> q(static_cast<size_t>(n) + 1, Rat(0));
  for (long k = 0; k <= n; ++k) {
    Rat acc = k < static_cast<long>(num.size()) ? num[static_cast<size_t>(k)] : Rat(0);
    for (long j = 1; j <= k && j < static_cast<long>(den.size()); ++j)
      acc -= den[static_cast<size_t>(j)] * q[static_cast<size_t>(k - j)];
    q[static_cast<size_t>(k)] = acc / den[0];
    q[static_cast<size_t>(k)].canonicalize();
  }
  return q;
}

// B_m(x): m! * [t^m] of e^{xt} / ((e^t - 1)/t)
inline Rat gf_bernoulli_poly(long m, const Rat& x) {
  std::vector<Rat> num = exp_series(x, m);
  std::vector<Rat> den(static_cast<size_t>(m) + 1);  // (e^t - 1)/t: den[k] = 1/(k+1)!
  Rat f(1);
  for (long k = 0; k <= m; ++k) {
    f /= (k + 1);
    den[static_cast<size_t>(k)] = f;
  }
  std::vector<Rat> q = series_div(num, den, m);
  Rat mf(1);
  for (long k = 2; k <= m; ++k) mf *= k;
  Rat out = q[static_cast<size_t>(m)] * mf;
  out.canonicalize();
  return out;
}

// E_m(x): m! * [t^m] of 2 e^{xt} / (e^t + 1)
inline Rat gf_euler_poly(long m, const Rat& x) {
  std::vector<Rat> num = exp_series(x, m);
  for (auto& c : num) c *= 2;
  std::vector<Rat> den(static_cast<size_t>(m) + 1);  // e^t + 1 = 2 + sum_{k>=1} t^k/k!
  Rat f(1);
  den[0] = Rat(2);
  for (long k = 1; k <= m; ++k) {
    f /= k;
    den[static_cast<size_t>(k)] = f;
  }
  std::vector<Rat> q = series_div(num, den, m);
  Rat mf(1);
  for (long k = 2; k <= m; ++k) mf *= k;
  Rat out = q[static_cast<size_t>(m)] * mf;
  out.canonicalize();
  return out;
}

}  // namespace oracle
