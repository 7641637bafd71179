#pragma once

#include <random>

#include "doctest.h"
#include "pzeta/padic.hpp"

namespace testutil {

using pzeta::Int;
using pzeta::Padic;
using pzeta::Rat;

// equality as p-adic intervals: agree on every jointly known digit
inline bool padic_eq(const Padic& x, const Padic& y) {
  long joint = std::min(x.abs_precision(), y.abs_precision());
  return agreement(x, y) >= joint;
}

inline bool equals_rational(const Padic& x, const Rat& q) {
  return padic_eq(x, Padic::from_rational(q, x.prime(), std::max<long>(x.precision(), 1)));
}

struct Rng {
  std::mt19937_64 gen{0x5eed5eedULL};

  long integer(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(gen);
  }
  // p-integral rational (denominator coprime to p)
  Rat rational_zp(long p, long num_mag = 1000) {
    while (true) {
      long n = integer(-num_mag, num_mag);
      long d = integer(1, 50);
      if (d % p == 0) continue;
      Rat q(n, d);
      q.canonicalize();
      return q;
    }
  }
  Rat nonzero_rational_zp(long p, long num_mag = 1000) {
    while (true) {
      Rat q = rational_zp(p, num_mag);
      if (q != 0) return q;
    }
  }
  // nonzero rational with any valuation in [vmin, vmax]
  Rat rational_q(long p, long vmin = -3, long vmax = 3) {
    Rat u = nonzero_rational_zp(p);
    while (*pzeta::valuation_rat(u, p) != 0) u = nonzero_rational_zp(p);
    long v = integer(vmin, vmax);
    Rat scale = v >= 0 ? Rat(pzeta::power_of(p, v)) : Rat(1, pzeta::power_of(p, -v));
    Rat out = u * scale;
    out.canonicalize();
    return out;
  }
};

}  // namespace testutil
