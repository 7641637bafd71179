#include "pzeta/loggamma.hpp"

#include <algorithm>

#include "pzeta/functions.hpp"

namespace pzeta {

namespace {

long vp_long(long n, long p) {
  long v = 0;
  while (n % p == 0) { n /= p; ++v; }
  return v;
}

// tail floor past n_max: min over a window of n*gap + v_M - 1 - v_p(n) - v_p(n+1);
// beyond the window the linear term dominates the logarithmic losses
long tail_floor(long gap, long v_m, long n_max, long p) {
  long best = (n_max + 1) * gap + v_m - 1;
  for (long n = n_max + 1; n <= n_max + 64; ++n)
    best = std::min(best, n * gap + v_m - 1 - vp_long(n, p) - vp_long(n + 1, p));
  return best;
}

Padic stirling_route(ZetaKind kind, const Rat& lambda, const AnalyticFunction& f, long p,
                     long prec, long n_max) {
  const long v_lam = *valuation_rat(lambda, p);
  const long v_m = f.sup_val_bound(p);
  const long gap = v_m - v_lam;  // >= 1 under |lambda|_p > M
  const bool hurwitz = kind == ZetaKind::hurwitz;

  Padic lam = Padic::from_rational(lambda, p, prec + 4);
  Padic loglam = log_p(lam);

  if (has_exact_moments(f)) {
    std::vector<Rat> m0 = hurwitz ? moments_b0(f, n_max + 1) : moments_e0(f, n_max + 1);
    // term valuations n*gap + v_M - 1 - v_p(n(n+1)) are eventually monotone;
    // check the final quarter before trusting the truncation
    std::vector<long> tvals;
    {
      Rat lam_pow(1);
      for (long n = 1; n <= n_max; ++n) {
        lam_pow /= lambda;
        lam_pow.canonicalize();
        Rat term = m0[static_cast<size_t>(n + 1)] * lam_pow / Rat(Int(n) * Int(n + 1));
        term.canonicalize();
        tvals.push_back(term == 0 ? (n + 1) * gap : *valuation_rat(term, p));
      }
      for (size_t i = tvals.size() - std::min<size_t>(tvals.size(), 6); i + 1 < tvals.size(); ++i)
        if (tvals[i + 1] < tvals[i] && tvals[i + 1] < prec)
          throw hypothesis_error("expansion terms are not decaying at the truncation point; "
                                 "increase n_max or |lambda|_p");
    }
    Rat series(0), lam_pow(1);
    for (long n = 1; n <= n_max; ++n) {
      lam_pow /= lambda;
      lam_pow.canonicalize();
      Rat c = m0[static_cast<size_t>(n + 1)] * lam_pow / Rat(Int(n) * Int(n + 1));
      if (n % 2 == 0) c = -c;  // (-1)^{n+1}
      series += c;
    }
    series.canonicalize();
    long tail = tail_floor(gap, v_m, n_max, p);
    Padic ser = Padic::from_rational(series, p, prec + 4)
                    .with_abs_precision(std::min<long>(prec + 4, tail));
    if (hurwitz) {
      Padic b1l = Padic::from_rational(bernoulli_f_rational(1, lambda, f), p, prec + 4);
      return Padic::from_rational(m0[1], p, prec + 4) + ser + b1l * loglam - b1l;
    }
    Rat e1_lam = euler_f_rational(1, lambda, f);
    Padic e1l = Padic::from_rational(e1_lam, p, prec + 4);
    return -Padic::from_rational(m0[1], p, prec + 4) - ser - e1l * loglam;
  }

  // engine-backed moments
  long eng_prec = prec + 2;
  Padic series = Padic::zero(p, eng_prec);
  Padic lam_inv = lam.inv();
  Padic lam_pow = Padic::from_integer(1, p, eng_prec);
  for (long n = 1; n <= n_max; ++n) {
    lam_pow = lam_pow * lam_inv;
    Padic mom = hurwitz ? bernoulli_f(n + 1, Rat(0), f, p, eng_prec)
                        : euler_f(n + 1, Rat(0), f, p, eng_prec);
    Padic c = (mom * lam_pow).div_exact_int(Int(n) * Int(n + 1));
    series = (n % 2 == 1) ? series + c : series - c;
  }
  long tail = tail_floor(gap, v_m, n_max, p);
  series = series.with_abs_precision(std::min(series.abs_precision(), tail));
  Padic m1_0 = hurwitz ? bernoulli_f(1, Rat(0), f, p, eng_prec)
                       : euler_f(1, Rat(0), f, p, eng_prec);
  Padic m1_l = hurwitz ? bernoulli_f(1, lambda, f, p, eng_prec)
                       : euler_f(1, lambda, f, p, eng_prec);
  if (hurwitz) return m1_0 + series + m1_l * loglam - m1_l;
  return -m1_0 - series - m1_l * loglam;
}

Padic integral_route(ZetaKind kind, const Rat& lambda, const AnalyticFunction& f, long p,
                     long prec, LevelRange levels) {
  Integrand g = Integrand::log_gamma_of(f, lambda, kind == ZetaKind::euler);
  IntegralReport rep = kind == ZetaKind::hurwitz ? volkenborn(g, levels, p, prec)
                                                 : fermionic(g, levels, p, prec);
  return kind == ZetaKind::hurwitz ? rep.value : -rep.value;
}

Padic s_derivative_route(ZetaKind kind, const Rat& lambda, const AnalyticFunction& f, long p,
                         long prec, long m_max) {
  auto zeta_at = [&](const Rat& s) {
    ZetaQuery q;
    q.kind = kind;
    q.s = s;
    q.lambda = lambda;
    q.f = f;
    q.p = p;
    q.prec = prec + 2;
    q.route = Route::series;
    q.m_max = m_max;
    return zeta(q).value;
  };
  // forward quotients at val(h) = 6 and 8, Richardson-combined: the h-linear
  // error term cancels in (h2 D1 - h1 D2)/(h2 - h1)
  Rat h1(power_of(p, 6)), h2(power_of(p, 8));
  Padic z0 = zeta_at(Rat(0));
  Padic ph1 = Padic::from_rational(h1, p, prec + 2);
  Padic ph2 = Padic::from_rational(h2, p, prec + 2);
  Padic d1 = (zeta_at(h1) - z0) / ph1;
  Padic d2 = (zeta_at(h2) - z0) / ph2;
  Padic dzeta = (ph2 * d1 - ph1 * d2) / (ph2 - ph1);
  Padic lam = Padic::from_rational(lambda, p, prec + 2);
  return omega_v(lam) * dzeta;
}

}  // namespace

std::vector<Padic> stirling_terms(ZetaKind kind, const AnalyticFunction& f, long n_max, long p,
                                  long prec) {
  if (n_max < 1) throw domain_error("stirling_terms needs n_max >= 1");
  std::vector<Padic> out;
  if (has_exact_moments(f)) {
    std::vector<Rat> m0 =
        kind == ZetaKind::hurwitz ? moments_b0(f, n_max + 1) : moments_e0(f, n_max + 1);
    for (long n = 1; n <= n_max; ++n) {
      Rat c = m0[static_cast<size_t>(n + 1)] / Rat(Int(n) * Int(n + 1));
      if (n % 2 == 0) c = -c;
      c.canonicalize();
      out.push_back(Padic::from_rational(c, p, prec));
    }
    return out;
  }
  for (long n = 1; n <= n_max; ++n) {
    Padic mom = kind == ZetaKind::hurwitz ? bernoulli_f(n + 1, Rat(0), f, p, prec)
                                          : euler_f(n + 1, Rat(0), f, p, prec);
    Padic c = mom.div_exact_int(Int(n) * Int(n + 1));
    out.push_back(n % 2 == 1 ? c : -c);
  }
  return out;
}

LogGammaResult log_gamma(ZetaKind kind, const Rat& lambda, const AnalyticFunction& f,
                         const std::vector<LogGammaRoute>& routes, long p, long prec,
                         LevelRange levels, long n_max) {
  if (routes.empty()) throw domain_error("log_gamma needs at least one route");
  check_guard(lambda, f, p, prec);
  {
    auto v = valuation_rat(lambda, p);
    if (!v || *v >= f.sup_val_bound(p))
      throw hypothesis_error("log_gamma routes require |lambda|_p > M, the sup-norm bound of f "
                             "on Z_p");
  }
  LogGammaResult out;
  for (LogGammaRoute r : routes) {
    Padic v = Padic::zero(p, 1);
    switch (r) {
      case LogGammaRoute::integral:
        v = integral_route(kind, lambda, f, p, prec, levels);
        break;
      case LogGammaRoute::stirling:
        v = stirling_route(kind, lambda, f, p, prec, n_max);
        break;
      case LogGammaRoute::s_derivative:
        v = s_derivative_route(kind, lambda, f, p, prec, n_max);
        break;
    }
    out.routes_run.push_back(r);
    out.route_values.push_back(v);
  }
  long declared = out.route_values.front().abs_precision();
  for (const Padic& v : out.route_values) declared = std::min(declared, v.abs_precision());
  long pairwise = declared;
  for (size_t i = 0; i < out.route_values.size(); ++i)
    for (size_t j = i + 1; j < out.route_values.size(); ++j) {
      long joint = std::min(out.route_values[i].abs_precision(),
                            out.route_values[j].abs_precision());
      long agree = agreement(out.route_values[i], out.route_values[j]);
      if (agree < joint)
        throw route_disagreement("log_gamma routes disagree: certified to O(p^" +
                                 std::to_string(joint) + ") but differ at p^" +
                                 std::to_string(agree) +
                                 " (lambda = " + to_string(lambda) + ")");
      pairwise = std::min(pairwise, agree);
    }
  out.pairwise_agreement = out.route_values.size() > 1 ? pairwise : declared;
  out.value = out.route_values.front().with_abs_precision(std::min(declared, pairwise));
  return out;
}

}  // namespace pzeta
