#include "pzeta/zeta.hpp"

#include <algorithm>
#include <limits>

#include "pzeta/functions.hpp"

namespace pzeta {

namespace {

constexpr long kInfVal = std::numeric_limits<long>::max() / 4;

long val_or_inf(const Rat& q, long p) {
  auto v = valuation_rat(q, p);
  return v ? *v : kInfVal;
}

// |lambda|_p > M as an exact valuation comparison
bool above_sup_bound(const Rat& lambda, const AnalyticFunction& f, long p) {
  return val_or_inf(lambda, p) < f.sup_val_bound(p);
}

void require_series_hypothesis(const Rat& lambda, const AnalyticFunction& f, long p) {
  if (!above_sup_bound(lambda, f, p))
    throw hypothesis_error(
        "series route requires |lambda|_p > M, the sup-norm bound of f on Z_p "
        "(here M = " + to_string(f.bound_M(p)) + ", |lambda|_p = " +
        to_string(padic_norm(lambda, p)) + "); use the direct route instead");
}

// roots of a primitive integer polynomial mod p^depth by branch lifting
bool has_deep_root(const std::vector<Int>& poly, long p, long depth, long work_cap,
                   Int* witness) {
  struct Node {
    Int residue;
    long level;
  };
  auto eval_mod = [&](const Int& a, const Int& mod) {
    Int acc(0);
    for (size_t i = poly.size(); i-- > 0;) acc = (acc * a + poly[i]) % mod;
    if (acc < 0) acc += mod;
    return acc;
  };
  std::vector<Node> frontier;
  for (long r = 0; r < p; ++r)
    if (eval_mod(Int(r), Int(p)) == 0) frontier.push_back({Int(r), 1});
  long work = 0;
  while (!frontier.empty()) {
    Node n = frontier.back();
    frontier.pop_back();
    if (n.level >= depth) {
      if (witness) *witness = n.residue;
      return true;
    }
    Int mod = power_of(p, n.level + 1);
    Int step = power_of(p, n.level);
    for (long t = 0; t < p; ++t) {
      Int cand = n.residue + t * step;
      if (eval_mod(cand, mod) == 0) frontier.push_back({cand, n.level + 1});
      if (++work > work_cap)
        throw hypothesis_error("guard screening exceeded its work budget; "
                               "reduce the guard depth");
    }
  }
  return false;
}

}  // namespace

GuardCertificate check_guard(const Rat& lambda, const AnalyticFunction& f, long p, long depth) {
  f.certify_on(p);
  if (above_sup_bound(lambda, f, p)) return GuardCertificate{true, depth};

  if (f.kind() == FunctionKind::mahler) {
    // continuity-only screening: sample residues to a shallow depth
    long d = std::min<long>(depth, 3);
    Int mod = power_of(p, d);
    long n = 1;
    for (long i = 0; i < d; ++i) n *= p;
    for (long a = 0; a < n; ++a) {
      Padic x = Padic::from_rational(lambda, p, d + 2) +
                f.eval(Padic::from_integer(a, p, d + 2));
      if (x.is_zero() || x.valuation() >= d)
        throw hypothesis_error("guard failed: lambda + f(a) == 0 (mod p^" + std::to_string(d) +
                               ") at a == " + std::to_string(a));
    }
    return GuardCertificate{false, d};
  }

  // polynomial / reciprocal: root-lift the integer polynomial p^sigma (lambda + f(a))
  // (for the reciprocal kind, the numerator lambda*den(a) + 1)
  std::vector<Rat> qpoly;
  if (f.kind() == FunctionKind::polynomial) {
    qpoly = f.coefficients();
    qpoly[0] += lambda;
  } else {
    qpoly = f.coefficients();
    for (Rat& c : qpoly) c *= lambda;
    qpoly[0] += 1;
  }
  long w = 0;
  for (const Rat& c : qpoly)
    if (auto v = valuation_rat(c, p)) w = std::min(w, *v);
  // clear denominators and the common p-power so the polynomial is primitive-ish
  std::vector<Int> ipoly;
  Int mod = power_of(p, depth + (-w) + 2);
  for (Rat& c : qpoly) {
    c *= Rat(power_of(p, -w));
    c.canonicalize();
    Int den = c.get_den(), dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
      throw domain_error("guard: coefficient with p in the denominator after scaling");
    Int r = c.get_num() * dinv % mod;
    if (r < 0) r += mod;
    ipoly.push_back(r);
  }
  Int witness;
  if (has_deep_root(ipoly, p, depth + (-w), 1000000, &witness))
    throw hypothesis_error("guard failed: lambda + f(a) == 0 (mod p^" +
                           std::to_string(depth) + ") at a == " + witness.get_str() +
                           "; -lambda may lie in the value set of f");
  return GuardCertificate{false, depth};
}

namespace {

struct SeriesOut {
  Padic value;
  long tail_val;  // certified valuation bound for the dropped tail, before prefactors
};

// sum_j binom(m, j) m0[j] u^{m-j}: the binomial shift of the moments to u
Rat shifted_moment(long m, const Rat& u, const std::vector<Rat>& m0) {
  Rat acc(0), bin(1);
  for (long j = 0; j <= m; ++j) {
    if (j > 0) {
      bin *= Rat(m - j + 1, j);
      bin.canonicalize();
    }
    Rat up(1);
    for (long t = 0; t < m - j; ++t) up *= u;
    acc += bin * m0[static_cast<size_t>(j)] * up;
  }
  acc.canonicalize();
  return acc;
}

// Core of the convergent expansions: <lambda>^{1-s} sum_m binom(1-s, m) mu_m lambda^{-m}
// where mu_m are the moments of f at shift u (u = 0 for the plain series).
// The Hurwitz prefactor 1/(s-1) is applied by callers.
SeriesOut series_core(ZetaKind kind, const Rat& s, const Rat& lambda, const Rat& u,
                      const AnalyticFunction& f, long p, long prec, long m_max) {
  require_series_hypothesis(lambda, f, p);
  const Rat one_minus_s = 1 - s;
  const long v_lam = *valuation_rat(lambda, p);
  const long v_m = f.sup_val_bound(p);
  const long v_u = val_or_inf(u, p);
  const long gap = std::min(v_m, v_u) - v_lam;  // >= 1 under the hypotheses

  // tail bound: |binom| <= 1; Volkenborn moments |B_m^f(u)|_p <= p * max(M,|u|)^m
  // (Gauss norms; an extra 2-digit slack for reciprocal-kind f where the
  // C^1-norm argument replaces the Gauss-norm one), fermionic |E_m^f(u)|_p <= max(M,|u|)^m.
  long tail = (m_max + 1) * gap - (kind == ZetaKind::hurwitz ? 1 : 0);
  if (kind == ZetaKind::hurwitz && f.kind() != FunctionKind::polynomial) tail -= 2;

  bool exact_truncation = false;
  if (one_minus_s.get_den() == 1 && one_minus_s >= 0 &&
      one_minus_s.get_num() <= Int(m_max))
    exact_truncation = true;  // binom(1-s, m) vanishes for m > 1-s

  Padic total = Padic::zero(p, prec + std::max<long>(-v_lam, 0) * (m_max + 1) + 4);
  if (has_exact_moments(f)) {
    std::vector<Rat> m0 =
        kind == ZetaKind::hurwitz ? moments_b0(f, m_max) : moments_e0(f, m_max);
    Rat sum(0), lam_pow(1);
    for (long m = 0; m <= m_max; ++m) {
      Rat mom = (u == 0) ? m0[static_cast<size_t>(m)] : shifted_moment(m, u, m0);
      sum += binom_rational(one_minus_s, m) * mom * lam_pow;
      lam_pow /= lambda;
      lam_pow.canonicalize();
    }
    sum.canonicalize();
    total = Padic::from_rational(sum, p, prec + 4);
  } else {
    // engine-backed moments for mahler / reciprocal kinds
    long eng_prec = prec + 2;
    Padic lam = Padic::from_rational(lambda, p, eng_prec);
    Padic lam_inv_pow = Padic::from_integer(1, p, eng_prec);
    Padic one_ms = Padic::from_rational(one_minus_s, p, eng_prec);
    total = Padic::zero(p, eng_prec);
    for (long m = 0; m <= m_max; ++m) {
      Padic mom = kind == ZetaKind::hurwitz ? bernoulli_f(m, u, f, p, eng_prec)
                                            : euler_f(m, u, f, p, eng_prec);
      total = total + binom(one_ms, m) * mom * lam_inv_pow;
      lam_inv_pow = lam_inv_pow / lam;
    }
  }
  if (!exact_truncation)
    total = total.with_abs_precision(std::min(total.abs_precision(), tail));

  Padic lamp = Padic::from_rational(lambda, p, prec);
  Padic apow = angle_pow(lamp, Padic::from_rational(one_minus_s, p, prec));
  Padic value = apow * total;
  return SeriesOut{value, exact_truncation ? kInfVal : tail};
}

}  // namespace

ZetaResult zeta(const ZetaQuery& q) {
  if (!is_odd_prime(q.p)) throw domain_error("prime must be an odd prime");
  if (q.prec < 1) throw domain_error("precision must be >= 1");
  if (val_or_inf(q.s, q.p) < 0) throw domain_error("s must lie in Z_p (val(s) >= 0)");
  if (q.kind == ZetaKind::hurwitz && q.s == 1)
    throw hypothesis_error("simple pole at s = 1: the Hurwitz-kind zeta is undefined there");

  ZetaResult out;
  out.guard = check_guard(q.lambda, q.f, q.p, q.guard_depth > 0 ? q.guard_depth : q.prec);

  const Rat one_minus_s = 1 - q.s;
  const bool series_ok = above_sup_bound(q.lambda, q.f, q.p);
  const bool want_series =
      q.route == Route::series || (q.route == Route::auto_route && series_ok);
  const bool want_direct = q.route == Route::direct || q.route == Route::auto_route;

  std::optional<Padic> v_series, v_direct;
  if (want_series) {
    SeriesOut s = series_core(q.kind, q.s, q.lambda, Rat(0), q.f, q.p, q.prec, q.m_max);
    Padic v = s.value;
    if (q.kind == ZetaKind::hurwitz)
      v = v / Padic::from_rational(q.s - 1, q.p, q.prec + 2);
    v_series = v;
    out.series_tail_valuation = s.tail_val;
  }
  if (want_direct) {
    Integrand g = Integrand::angle_power_of(q.f, q.lambda, one_minus_s);
    Measure mu = q.kind == ZetaKind::hurwitz ? Measure::haar : Measure::mu_minus_one;
    IntegralReport rep = integrate(mu, g, q.levels, q.p, q.prec);
    Padic v = rep.value;
    if (q.kind == ZetaKind::hurwitz)
      v = v / Padic::from_rational(q.s - 1, q.p, q.prec + 2);
    out.report = std::move(rep);
    v_direct = v;
  }

  if (v_series && v_direct) {
    long joint = std::min(v_series->abs_precision(), v_direct->abs_precision());
    long agree = agreement(*v_series, *v_direct);
    if (agree < joint)
      throw route_disagreement(
          "direct and series routes disagree: certified to O(p^" + std::to_string(joint) +
          ") but they differ at p^" + std::to_string(agree) +
          " (s = " + to_string(q.s) + ", lambda = " + to_string(q.lambda) + ")");
    out.agreement = agree;
    out.route = "direct+series";
    out.value = v_series->with_abs_precision(joint);
  } else if (v_series) {
    out.route = "series";
    out.value = *v_series;
  } else {
    out.route = "direct";
    out.value = *v_direct;
  }
  return out;
}

Padic special_value(ZetaKind kind, long n, const Rat& lambda, const AnalyticFunction& f, long p,
                    long prec) {
  if (n < 1) throw domain_error("special_value needs n >= 1 (the value at s = 1-n)");
  check_guard(lambda, f, p, prec);
  require_series_hypothesis(lambda, f, p);
  Padic lam = Padic::from_rational(lambda, p, prec + 2);
  Padic wv = omega_v(lam);
  Padic wpow = wv.pow_int(n);
  if (kind == ZetaKind::hurwitz) {
    Padic bn = bernoulli_f(n, lambda, f, p, prec + 2);
    return -(bn / wpow).div_exact_int(Int(n));
  }
  Padic en = euler_f(n, lambda, f, p, prec + 2);
  return en / wpow;
}

Padic positive_value_series(ZetaKind kind, long n, const Rat& lambda, const AnalyticFunction& f,
                            long p, long prec, long m_max) {
  if (kind == ZetaKind::hurwitz && n == 1)
    throw hypothesis_error("simple pole at s = 1: the Hurwitz-kind zeta is undefined there");
  if (n < 1) throw domain_error("positive_value_series needs n >= 1");
  check_guard(lambda, f, p, prec);
  SeriesOut s = series_core(kind, Rat(n), lambda, Rat(0), f, p, prec, m_max);
  Padic v = s.value;
  if (kind == ZetaKind::hurwitz) v = v.div_exact_int(Int(n - 1));
  return v;
}

Padic shifted_series(ZetaKind kind, const Rat& s, const Rat& lambda, const Rat& u,
                     const AnalyticFunction& f, long p, long prec, long n_max) {
  if (kind == ZetaKind::hurwitz && s == 1)
    throw hypothesis_error("simple pole at s = 1: the Hurwitz-kind zeta is undefined there");
  if (u != 0 && val_or_inf(lambda, p) >= val_or_inf(u, p))
    throw hypothesis_error("shifted expansion requires |lambda/u|_p > 1");
  check_guard(lambda + u, f, p, prec);
  SeriesOut so = series_core(kind, s, lambda, u, f, p, prec, n_max);
  Padic v = so.value;
  if (kind == ZetaKind::hurwitz)
    v = v / Padic::from_rational(s - 1, p, prec + 2);
  return v;
}

Padic lambda_derivative(ZetaKind kind, long order, const Rat& s, const Rat& lambda,
                        const AnalyticFunction& f, long p, long prec) {
  if (order < 1) throw domain_error("derivative order must be >= 1");
  if (kind == ZetaKind::hurwitz && s + order == 1)
    throw hypothesis_error("simple pole at s + n = 1: the closed-form derivative is undefined "
                           "(the shifted argument hits the pole)");
  require_series_hypothesis(lambda, f, p);
  ZetaQuery q;
  q.kind = kind;
  q.s = s + order;
  q.lambda = lambda;
  q.f = f;
  q.p = p;
  q.prec = prec;
  q.route = Route::series;
  Padic z = zeta(q).value;
  Padic lam = Padic::from_rational(lambda, p, prec + 2);
  Padic wv_pow = omega_v(lam).pow_int(order);
  // The Hurwitz kind carries the 1/(s-1) prefactor, which shifts the rising
  // factorial: d/dlambda zeta = -(s/w_v) zeta(s+1) there, against
  // -((s-1)/w_v) zeta(s+1) for the Euler kind. Difference quotients pin the
  // two Pochhammer bases; see the derivative tests.
  Rat poch = pochhammer_rational(kind == ZetaKind::hurwitz ? s : s - 1, order);
  Padic v = Padic::from_rational(poch, p, prec + 2) * z / wv_pow;
  if (order % 2 == 1) v = -v;
  return v;
}

}  // namespace pzeta
