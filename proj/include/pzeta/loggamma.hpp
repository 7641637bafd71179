#pragma once

#include <vector>

#include "pzeta/zeta.hpp"

namespace pzeta {

enum class LogGammaRoute { s_derivative, integral, stirling };

struct LogGammaResult {
  Padic value;
  std::vector<LogGammaRoute> routes_run;
  std::vector<Padic> route_values;  // parallel to routes_run
  long pairwise_agreement = -1;     // min over pairs, absolute digits
};

/// The functional determinant log Gamma(lambda) attached to f: the
/// s-derivative at 0 of the corresponding zeta function, scaled by
/// w_v(lambda). Three independent evaluations:
///  - integral:     Riemann sums of (lambda+f(a))(log_p(lambda+f(a)) - 1)
///                  (Hurwitz kind) or -(lambda+f(a)) log_p(lambda+f(a))
///                  (Euler kind, fermionic measure);
///  - stirling:     the moment expansion in B_{n+1}^f(0) / E_{n+1}^f(0);
///  - s_derivative: difference quotients of zeta in s at 0, two step sizes,
///                  Richardson-combined.
/// All routes run must agree; the declared precision is capped at the minimum
/// pairwise agreement, and disagreement within certified digits throws
/// route_disagreement.
LogGammaResult log_gamma(ZetaKind kind, const Rat& lambda, const AnalyticFunction& f,
                         const std::vector<LogGammaRoute>& routes, long p, long prec,
                         LevelRange levels = {}, long n_max = 24);

// The expansion coefficients (-1)^{n+1}/(n(n+1)) B_{n+1}^f(0) (or the Euler
// analog), n = 1..n_max, for diagnostics and tail bounding.
std::vector<Padic> stirling_terms(ZetaKind kind, const AnalyticFunction& f, long n_max, long p,
                                  long prec);

}  // namespace pzeta
