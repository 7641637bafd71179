#pragma once

#include <optional>
#include <string>

#include "pzeta/integration.hpp"
#include "pzeta/padic.hpp"
#include "pzeta/spectra.hpp"

namespace pzeta {

enum class ZetaKind { hurwitz, euler };
enum class Route { direct, series, auto_route };

/// Certificate for the precondition that -lambda avoids the value set of f:
/// either trivially (|lambda|_p exceeds the sup bound M of f) or by residue
/// screening to the stated depth. A finite certificate, not a proof.
struct GuardCertificate {
  bool trivial = false;
  long depth = 0;
};

struct ZetaQuery {
  ZetaKind kind = ZetaKind::hurwitz;
  Rat s{0};
  Rat lambda{0};
  AnalyticFunction f = AnalyticFunction::polynomial({Rat(0), Rat(1)});
  long p = 5;
  long prec = 20;
  Route route = Route::auto_route;
  long m_max = 24;         // series truncation order
  LevelRange levels{};     // direct-route schedule
  long guard_depth = 0;    // 0 = default (working precision)
};

struct ZetaResult {
  Padic value;
  std::string route;  // "direct", "series" or "direct+series"
  std::optional<IntegralReport> report;       // direct route, when run
  std::optional<long> series_tail_valuation;  // series route, when run
  long agreement = -1;  // cross-route agreement digits (when both routes ran)
  GuardCertificate guard;
};

// Checks -lambda not in {f(a) : a in Z_p} to the given depth; throws
// hypothesis_error naming the offending residue on failure.
GuardCertificate check_guard(const Rat& lambda, const AnalyticFunction& f, long p, long depth);

// The Hurwitz / Euler zeta attached to f. Direct route: Riemann sums of
// <lambda+f(a)>^{1-s} (divided by s-1 for the Hurwitz kind). Series route:
// the convergent expansion in the moments B_m^f(0) / E_m^f(0), valid for
// |lambda|_p > M. auto_route runs both, intersects precision, and throws
// route_disagreement if they differ within certified digits.
ZetaResult zeta(const ZetaQuery& q);

// Closed forms at s = 1-n, n >= 1:  -B_n^f(lambda) / (n w_v^n(lambda)) and
// E_n^f(lambda) / w_v^n(lambda). Requires |lambda|_p > M.
Padic special_value(ZetaKind kind, long n, const Rat& lambda, const AnalyticFunction& f, long p,
                    long prec);

// Convergent series for values at positive integers s = n (n >= 2 for the
// Hurwitz kind, n >= 1 for the Euler kind).
Padic positive_value_series(ZetaKind kind, long n, const Rat& lambda, const AnalyticFunction& f,
                            long p, long prec, long m_max = 24);

// Expansion of zeta(s, lambda+u) around lambda using the shifted moments
// B_n^f(u); requires |lambda/u|_p > 1 and |lambda|_p > M.
Padic shifted_series(ZetaKind kind, const Rat& s, const Rat& lambda, const Rat& u,
                     const AnalyticFunction& f, long p, long prec, long n_max = 24);

// Closed-form lambda-derivative
//   d^n/dlambda^n zeta(s, lambda) = (-1)^n (s)_n   zeta(s+n, lambda) / w_v^n   (Hurwitz kind)
//   d^n/dlambda^n zeta(s, lambda) = (-1)^n (s-1)_n zeta(s+n, lambda) / w_v^n   (Euler kind)
// with (a)_n the rising factorial; validated against difference quotients.
Padic lambda_derivative(ZetaKind kind, long order, const Rat& s, const Rat& lambda,
                        const AnalyticFunction& f, long p, long prec);

}  // namespace pzeta
