#pragma once

#include <vector>

#include "pzeta/kernel.hpp"
#include "pzeta/padic.hpp"
#include "pzeta/spectra.hpp"

namespace pzeta {

struct LevelRange {
  long lo = 3;
  long hi = 6;
};

/// Finite-level realization of the limit defining the integral. The value is
/// the Richardson refinement of the per-level Riemann sums; its declared
/// precision never exceeds the observed refinement agreement.
struct IntegralReport {
  Padic value;
  std::vector<long> levels_used;
  std::vector<long> agreement_digits;  // consecutive raw-level agreement (absolute digits)
  long refined_agreement = 0;          // agreement of the last two refinement stages
  bool converged = false;              // refined agreement reached the requested precision
};

// Riemann sums against the Haar distribution mu(a + p^N Z_p) = p^{-N}:
// value ~ p^{-N} sum_{a < p^N} g(a), refined across the level schedule.
IntegralReport volkenborn(const Integrand& g, LevelRange levels, long p, long target_abs_prec);

// Riemann sums against mu_{-1}(a + p^N Z_p) = (-1)^a.
IntegralReport fermionic(const Integrand& g, LevelRange levels, long p, long target_abs_prec);

IntegralReport integrate(Measure mu, const Integrand& g, LevelRange levels, long p,
                         long target_abs_prec);

// ---- classical moment tables (exact rationals) ----

// B_0..B_mmax from sum_{j<=m} binom(m+1,j) B_j = 0.
std::vector<Rat> bernoulli_numbers(long m_max);
Rat bernoulli_number(long m);
Rat bernoulli_poly(long m, const Rat& x);  // B_m(x)
// E_m(x) from E_m(x) = x^m - (1/2) sum_{k<m} binom(m,k) E_k(x).
Rat euler_poly(long m, const Rat& x);
std::vector<Rat> euler_numbers_at_zero(long m_max);  // E_m(0)

// ---- moments associated with f ----

// True when B_m^f(0), E_m^f(0) have an exact rational evaluation
// (polynomial-kind f; the moment integrand expands in monomials).
bool has_exact_moments(const AnalyticFunction& f);

// B_m^f(0) = integral of f(a)^m da for m = 0..m_max, exact.
std::vector<Rat> moments_b0(const AnalyticFunction& f, long m_max);
// E_m^f(0), exact.
std::vector<Rat> moments_e0(const AnalyticFunction& f, long m_max);

// B_m^f(lambda) / E_m^f(lambda) through the binomial shift identity
// B_n^f(lambda) = sum_m binom(n,m) B_m^f(0) lambda^{n-m}; exact when possible.
Rat bernoulli_f_rational(long m, const Rat& lambda, const AnalyticFunction& f);
Rat euler_f_rational(long m, const Rat& lambda, const AnalyticFunction& f);

// Moment operations for arbitrary admissible f: exact fast path when
// available, otherwise the Riemann-sum engine at the given schedule.
Padic bernoulli_f(long m, const Rat& lambda, const AnalyticFunction& f, long p, long prec,
                  LevelRange levels = {});
Padic euler_f(long m, const Rat& lambda, const AnalyticFunction& f, long p, long prec,
              LevelRange levels = {});

}  // namespace pzeta
