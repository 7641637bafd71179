#pragma once

#include "pzeta/padic.hpp"

namespace pzeta {

/// Multiplicative decomposition a = p^v * omega * <a> of a nonzero element:
/// omega is the (p-1)-th root of unity congruent to the unit part mod p,
/// <a> is the principal part, <a> == 1 mod p.
struct UnitDecomposition {
  long valuation;
  Padic teichmuller;
  Padic principal;
};

// omega(a) for a p-adic unit; Frobenius iteration x -> x^p to its fixed point
// mod p^N (at most N rounds: a^{p^n} stabilizes one digit per round).
Padic teichmuller(const Padic& a);

UnitDecomposition decompose(const Padic& a);

// The projection <a> = p^{-v} a / omega: principal-unit part.
Padic angle(const Padic& a);

// omega_v(a) = a / <a> = p^v * omega.
Padic omega_v(const Padic& a);

// Iwasawa logarithm on Q_p^x: log_p p = 0 and log_p of roots of unity = 0,
// i.e. log_p x = Mercator series of <x>.
Padic log_p(const Padic& x);

// Exponential series; requires val(x) >= 1 (the convergence disc
// |x|_p < p^{-1/(p-1)} restricted to Q_p).
Padic exp_p(const Padic& x);

// Two-variable power <lambda>^s for s in Z_p, via exp_p(s * log_p<lambda>).
Padic angle_pow(const Padic& lambda, const Padic& s);

// Independent route for <lambda>^s: the binomial series
// sum_n binom(s,n) (<lambda>-1)^n. Kept as an oracle against angle_pow.
Padic angle_pow_binomial(const Padic& lambda, const Padic& s);

// Generalized binomial coefficient s(s-1)...(s-n+1)/n!.
Padic binom(const Padic& s, long n);

// Exact binomial coefficient over the rationals (s rational, n >= 0).
Rat binom_rational(const Rat& s, long n);

// Rising factorial (a)_n = a(a+1)...(a+n-1).
Padic pochhammer(const Padic& a, long n);
Rat pochhammer_rational(const Rat& a, long n);

}  // namespace pzeta
