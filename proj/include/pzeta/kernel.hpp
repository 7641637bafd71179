#pragma once

#include <cstdint>

#include "pzeta/padic.hpp"
#include "pzeta/spectra.hpp"

namespace pzeta {

enum class Measure { haar, mu_minus_one };

/// Integrand shapes accepted by the Riemann-sum engines. The set is closed:
/// every shape is a composite of an AnalyticFunction, which keeps the
/// integrands C^1-grade by construction (arbitrary callbacks are rejected at
/// this boundary).
struct Integrand {
  enum class Form {
    moment,             // (lambda + f(a))^m
    angle_power,        // <lambda + f(a)>^(1-s)
    log_gamma_hurwitz,  // (lambda + f(a)) * (log_p(lambda + f(a)) - 1)
    log_gamma_euler,    // (lambda + f(a)) * log_p(lambda + f(a))
  };
  Form form = Form::moment;
  AnalyticFunction f = AnalyticFunction::polynomial({Rat(0), Rat(1)});
  Rat lambda{0};
  Rat one_minus_s{1};  // angle_power only; must lie in Z_p
  long moment = 0;     // moment form only

  static Integrand moment_of(const AnalyticFunction& f, const Rat& lambda, long m);
  static Integrand angle_power_of(const AnalyticFunction& f, const Rat& lambda,
                                  const Rat& one_minus_s);
  static Integrand log_gamma_of(const AnalyticFunction& f, const Rat& lambda, bool euler);
};

namespace kernel {

// Raw partial sum over one level: sum_{a<p^level} (+-) p^scale * g(a) mod p^mod_digits.
struct SumSpec {
  Measure measure = Measure::haar;
  const Integrand* g = nullptr;
  long level = 0;
  long p = 5;
  long mod_digits = 24;
  long scale = 0;
};

struct SumResult {
  Int sum;
  long max_val_stripped = 0;  // largest v_p(lambda + f(a)) encountered
};

// True when p^mod_digits fits the u64 Montgomery fast path.
bool fits_u64(long p, long mod_digits);

// sigma0: smallest s >= 0 with p^s * (lambda + f(a)) p-integral on Z_p.
long base_scale(const Integrand& g, long p);
// The p-power scale of the whole summand (m*sigma0 for moments, else sigma0).
long summand_scale(const Integrand& g, long p);
// Modulus digits consumed inside the kernel beyond the returned validity
// (log-series division slack); valuation strips are reported per-run instead.
long log_headroom(long p, long mod_digits);

SumResult residue_sum(const SumSpec& spec);      // dispatches on fits_u64
SumResult residue_sum_u64(const SumSpec& spec);  // requires fits_u64(p, mod_digits)
SumResult residue_sum_mpz(const SumSpec& spec);  // arbitrary-precision reference

}  // namespace kernel
}  // namespace pzeta
