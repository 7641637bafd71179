#include "pzeta/functions.hpp"

namespace pzeta {

Padic teichmuller(const Padic& a) {
  if (a.is_zero() || a.valuation() != 0)
    throw domain_error("teichmuller requires a p-adic unit (valuation 0)");
  long p = a.prime(), n = a.precision();
  Int m = power_of(p, n);
  Int x = a.unit(), prev;
  for (long i = 0; i <= n + 1; ++i) {
    prev = x;
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p), m.get_mpz_t());
    if (x == prev) break;
  }
  return Padic::from_unit(x, 0, p, n);
}

UnitDecomposition decompose(const Padic& a) {
  if (a.is_zero()) throw domain_error("cannot decompose a value indistinguishable from 0");
  long p = a.prime(), n = a.precision(), v = a.valuation();
  Padic unit = Padic::from_unit(a.unit(), 0, p, n);
  Padic w = teichmuller(unit);
  Padic principal = unit / w;
  return UnitDecomposition{v, w, principal};
}

Padic angle(const Padic& a) {
  return decompose(a).principal;
}

Padic omega_v(const Padic& a) {
  auto d = decompose(a);
  return d.teichmuller.shift(d.valuation);
}

Padic log_p(const Padic& x) {
  if (x.is_zero()) throw domain_error("log_p of a value indistinguishable from 0");
  long p = x.prime();
  Padic u = angle(x);
  Padic z = u - Padic::from_integer(1, p, u.precision());
  long target = u.abs_precision();
  if (z.is_zero()) return Padic::zero(p, target);
  long w = z.valuation();  // >= 1 for principal units
  Padic sum = Padic::zero(p, target);
  Padic zk = Padic::from_integer(1, p, u.precision());
  long k = 0;
  while (true) {
    ++k;
    zk = zk * z;
    Padic term = zk.div_exact_int(Int(k));
    sum = (k % 2 == 1) ? sum + term : sum - term;
    // remaining terms have valuation >= (k+1)w - v_p(k+1) >= (k+1)w - log_p(k+1) - ...
    long next_bound = (k + 1) * w;
    long lp = 0;
    for (long t = k + 1; t >= p; t /= p) ++lp;
    if (next_bound - lp >= target) break;
  }
  return sum.with_abs_precision(std::min(sum.abs_precision(), target));
}

Padic exp_p(const Padic& x) {
  long p = x.prime();
  if (x.is_zero()) {
    if (x.abs_precision() < 1)
      throw hypothesis_error("exp_p requires |x|_p < p^(-1/(p-1)), i.e. val(x) >= 1 over Q_p");
    return Padic::from_unit(Int(1), 0, p, x.abs_precision());
  }
  long w = x.valuation();
  if (w < 1)
    throw hypothesis_error("exp_p requires |x|_p < p^(-1/(p-1)), i.e. val(x) >= 1 over Q_p");
  long target = x.abs_precision();
  Padic term = Padic::from_unit(Int(1), 0, p, target);
  Padic sum = term;
  long k = 0;
  while (true) {
    ++k;
    term = (term * x).div_exact_int(Int(k));
    sum = sum + term;
    // tail terms have val >= (k+j)w - v_p((k+j)!) >= (k+j)w - (k+j-1)/(p-1),
    // increasing in j since w >= 1 > 1/(p-1); check j = 1
    if ((k + 1) * w - k / (p - 1) >= target) break;
  }
  return sum.with_abs_precision(std::min(sum.abs_precision(), target));
}

Padic angle_pow(const Padic& lambda, const Padic& s) {
  long p = lambda.prime();
  if (s.prime() != p) throw domain_error("angle_pow: mixed primes");
  if (!s.is_zero() && s.valuation() < 0)
    throw domain_error("angle_pow requires s in Z_p (val(s) >= 0)");
  Padic lg = log_p(lambda);
  Padic t = s * lg;
  if (t.is_zero()) return Padic::from_unit(Int(1), 0, p, std::max<long>(t.abs_precision(), 1));
  return exp_p(t);
}

Padic angle_pow_binomial(const Padic& lambda, const Padic& s) {
  long p = lambda.prime();
  if (!s.is_zero() && s.valuation() < 0)
    throw domain_error("angle_pow requires s in Z_p (val(s) >= 0)");
  Padic u = angle(lambda);
  Padic z = u - Padic::from_integer(1, p, u.precision());
  long target = u.abs_precision();
  Padic sum = Padic::from_unit(Int(1), 0, p, target);
  if (z.is_zero()) return sum;
  long w = z.valuation();
  Padic zk = Padic::from_integer(1, p, u.precision());
  long n = 0;
  while (n * w < target) {
    ++n;
    zk = zk * z;
    sum = sum + binom(s, n) * zk;
  }
  return sum.with_abs_precision(std::min(sum.abs_precision(), target));
}

Padic binom(const Padic& s, long n) {
  if (n < 0) throw domain_error("binom: n must be >= 0");
  long p = s.prime();
  long prec = s.is_zero() ? std::max<long>(s.abs_precision(), 1) : s.precision();
  Padic acc = Padic::from_unit(Int(1), 0, p, prec);
  Int fact(1);
  for (long i = 0; i < n; ++i) {
    acc = acc * (s - Padic::from_integer(i, p, prec));
    fact *= (i + 1);
  }
  return acc.div_exact_int(fact);
}

Rat binom_rational(const Rat& s, long n) {
  if (n < 0) throw domain_error("binom: n must be >= 0");
  Rat acc(1);
  for (long i = 0; i < n; ++i) acc *= (s - i) / Rat(n - i);
  acc.canonicalize();
  return acc;
}

Padic pochhammer(const Padic& a, long n) {
  if (n < 0) throw domain_error("pochhammer: n must be >= 0");
  long p = a.prime();
  long prec = a.is_zero() ? std::max<long>(a.abs_precision(), 1) : a.precision();
  Padic acc = Padic::from_unit(Int(1), 0, p, prec);
  for (long i = 0; i < n; ++i) acc = acc * (a + Padic::from_integer(i, p, prec));
  return acc;
}

Rat pochhammer_rational(const Rat& a, long n) {
  Rat acc(1);
  for (long i = 0; i < n; ++i) acc *= (a + i);
  acc.canonicalize();
  return acc;
}

}  // namespace pzeta
