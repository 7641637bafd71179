// Acceptance suite: every criterion prints one PASS/FAIL line; the binary
// exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "pzeta/functions.hpp"
#include "pzeta/loggamma.hpp"
#include "pzeta/zeta.hpp"

using namespace pzeta;

namespace {

int g_failures = 0;

void criterion(int idx, const std::string& name, const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("[%d] %-34s %s (%s%.2fs)\n", idx, name.c_str(), ok ? "PASS" : "FAIL",
              detail.empty() ? "" : (detail + ", ").c_str(), secs);
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

const AnalyticFunction kIdentity = AnalyticFunction::parse_spec("identity");
const AnalyticFunction kSquare = AnalyticFunction::parse_spec("square");
const AnalyticFunction kOscillator = AnalyticFunction::parse_spec("oscillator");

std::vector<Rat> lambda_grid(long p) {
  return {Rat(1, p), Rat(2, p), Rat(Int(1), Int(p) * Int(p)), Rat(3, p)};
}

ZetaQuery make_query(ZetaKind kind, Rat s, Rat lam, const AnalyticFunction& f, long p,
                     Route route) {
  ZetaQuery q;
  q.kind = kind;
  q.s = std::move(s);
  q.lambda = std::move(lam);
  q.f = f;
  q.p = p;
  q.prec = 20;
  q.route = route;
  return q;
}

// criteria 1 and 2: special values at s = 1-m against the generating-function
// oracle, full declared precision, declared >= 16 at N = 20
bool classical_reduction(ZetaKind kind, std::string& detail) {
  long min_declared = 1000, points = 0;
  for (long p : {5L, 7L}) {
    for (const Rat& lam : lambda_grid(p)) {
      Padic lamp = Padic::from_rational(lam, p, 22);
      Padic wv = omega_v(lamp);
      for (long m = 1; m <= 8; ++m) {
        ZetaResult r = zeta(make_query(kind, Rat(1 - m), lam, kIdentity, p, Route::series));
        Rat poly = kind == ZetaKind::hurwitz ? oracle::gf_bernoulli_poly(m, lam)
                                             : oracle::gf_euler_poly(m, lam);
        Padic want = Padic::from_rational(poly, p, 22) / wv.pow_int(m);
        if (kind == ZetaKind::hurwitz) want = -want.div_exact_int(Int(m));
        long declared = r.value.abs_precision();
        // relative digits carried by the value
        long rel = r.value.is_zero() ? declared : r.value.precision();
        if (agreement(r.value, want) < declared) {
          detail = "mismatch at p=" + std::to_string(p) + " m=" + std::to_string(m) +
                   " lambda=" + to_string(lam);
          return false;
        }
        min_declared = std::min(min_declared, rel);
        ++points;
      }
    }
  }
  detail = std::to_string(points) + " points, min declared digits " +
           std::to_string(min_declared);
  return min_declared >= 16;
}

bool route_tripwire(std::string& detail) {
  long min_agree = 1000, points = 0;
  std::vector<long> svals{0, -1, -2, -3, -4, -5, -6, -7, 2, 3};
  for (long p : {5L, 7L}) {
    for (const AnalyticFunction* f : {&kIdentity, &kSquare, &kOscillator}) {
      for (const Rat& lam : lambda_grid(p)) {
        for (long s : svals) {
          for (ZetaKind kind : {ZetaKind::hurwitz, ZetaKind::euler}) {
            ZetaResult r = zeta(make_query(kind, Rat(s), lam, *f, p, Route::auto_route));
            if (r.agreement < 8) {
              detail = "agreement " + std::to_string(r.agreement) + " at p=" +
                       std::to_string(p) + " s=" + std::to_string(s) +
                       " lambda=" + to_string(lam);
              return false;
            }
            min_agree = std::min(min_agree, r.agreement);
            ++points;
          }
        }
      }
    }
  }
  detail = std::to_string(points) + " points, min cross-route agreement " +
           std::to_string(min_agree);
  return true;
}

bool shifted_identities(std::string& detail) {
  struct Pt { Rat lam, u; };
  long min_agree = 1000, points = 0;
  for (ZetaKind kind : {ZetaKind::hurwitz, ZetaKind::euler}) {
    long p = 5;
    std::vector<Pt> grid{{Rat(1, 5), Rat(1)},      {Rat(1, 5), Rat(2)},
                         {Rat(2, 5), Rat(1)},      {Rat(1, 25), Rat(1, 5)},
                         {Rat(1, 25), Rat(2)},     {Rat(3, 5), Rat(1)}};
    for (const Pt& pt : grid) {
      Rat s = (points % 2 == 0) ? Rat(0) : Rat(3);
      Padic lhs = shifted_series(kind, s, pt.lam, pt.u, kIdentity, p, 20);
      ZetaResult rhs = zeta(make_query(kind, s, pt.lam + pt.u, kIdentity, p, Route::auto_route));
      long agree = agreement(lhs, rhs.value);
      if (agree < 10) {
        detail = "agreement " + std::to_string(agree) + " at lambda=" + to_string(pt.lam) +
                 " u=" + to_string(pt.u);
        return false;
      }
      min_agree = std::min(min_agree, agree);
      ++points;
    }
  }
  detail = std::to_string(points) + " points, min agreement " + std::to_string(min_agree);
  return true;
}

bool derivative_formulas(std::string& detail) {
  long points = 0;
  for (ZetaKind kind : {ZetaKind::hurwitz, ZetaKind::euler}) {
    for (long order : {1L, 2L}) {
      for (long hv : {4L, 6L, 8L}) {
        long p = 5;
        Rat lam(1, 5);
        Rat s = kind == ZetaKind::hurwitz ? Rat(-2) : Rat(-1);
        Rat h(power_of(p, hv));
        Padic closed = lambda_derivative(kind, order, s, lam, kIdentity, p, 20);
        // the quotient loses order*val(h) digits to cancellation; carry them
        long qprec = 20 + order * hv;
        auto zq = [&](const Rat& at) {
          ZetaQuery q = make_query(kind, s, at, kIdentity, p, Route::series);
          q.prec = qprec;
          q.m_max = 28;
          return zeta(q).value;
        };
        Padic ph = Padic::from_rational(h, p, qprec + 2);
        Padic quot;
        if (order == 1)
          quot = (zq(lam + h) - zq(lam)) / ph;
        else
          quot = (zq(lam + 2 * h) - zq(lam + h) - zq(lam + h) + zq(lam)) / (ph * ph);
        long agree = agreement(closed, quot);
        if (agree < hv - 2) {
          detail = "agreement " + std::to_string(agree) + " < val(h)-2 at order " +
                   std::to_string(order) + " val(h)=" + std::to_string(hv);
          return false;
        }
        ++points;
      }
    }
  }
  detail = std::to_string(points) + " quotient checks";
  return true;
}

bool loggamma_three_routes(std::string& detail) {
  const std::vector<LogGammaRoute> all{LogGammaRoute::integral, LogGammaRoute::stirling,
                                       LogGammaRoute::s_derivative};
  long min_agree = 1000, points = 0;
  for (ZetaKind kind : {ZetaKind::hurwitz, ZetaKind::euler}) {
    for (long p : {5L, 7L}) {
      for (const AnalyticFunction* f : {&kIdentity, &kSquare, &kOscillator}) {
        for (const Rat& lam : {Rat(1, p), Rat(Int(1), Int(p) * Int(p))}) {
          LogGammaResult r = log_gamma(kind, lam, *f, all, p, 16);
          if (r.pairwise_agreement < 8) {
            detail = "pairwise agreement " + std::to_string(r.pairwise_agreement) + " at p=" +
                     std::to_string(p) + " lambda=" + to_string(lam);
            return false;
          }
          min_agree = std::min(min_agree, r.pairwise_agreement);
          ++points;
        }
      }
    }
  }
  detail = std::to_string(points) + " points, min pairwise agreement " +
           std::to_string(min_agree);
  return true;
}

bool interpolation(std::string& detail) {
  // catalog round trip, exact, n <= 32
  for (const char* name : {"integer", "barrier", "oscillator"}) {
    CatalogEntry entry = catalog(name);
    MahlerExpansion e = mahler_coeffs(entry.spectrum, 32, 5, 20);
    if (!e.continuity_ok) {
      detail = std::string(name) + " failed continuity";
      return false;
    }
    for (long n = 0; n <= 32; ++n)
      if (mahler_eval_exact(e, n) != entry.spectrum.eigenvalue(n)) {
        detail = std::string(name) + " round trip failed at n=" + std::to_string(n);
        return false;
      }
    // polynomial spectra have finitely supported coefficients
    size_t degree = entry.f.coefficients().size() - 1;
    for (size_t n = degree + 1; n < e.coeffs.size(); ++n)
      if (e.coeffs[n] != 0) {
        detail = std::string(name) + " has support beyond its degree";
        return false;
      }
  }
  // growth spectrum is rejected
  std::vector<Rat> vals;
  Rat v(1);
  for (int n = 0; n <= 24; ++n) {
    vals.push_back(v);
    v /= 5;
  }
  MahlerExpansion bad = mahler_coeffs(spectrum_from_values("growth", vals), 24, 5, 20);
  if (bad.continuity_ok) {
    detail = "growth spectrum was not rejected";
    return false;
  }
  detail = "3 catalog round trips (n <= 32) + growth rejection";
  return true;
}

bool function_layer(std::string& detail) {
  std::mt19937_64 gen(0xacce97edULL);
  auto rnd_int = [&](long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(gen);
  };
  long cases = 0;
  for (long p : {5L, 7L}) {
    auto rat_zp = [&]() {
      while (true) {
        long n = rnd_int(-2000, 2000), d = rnd_int(1, 60);
        if (d % p == 0) continue;
        Rat q(n, d);
        q.canonicalize();
        return q;
      }
    };
    auto rat_q = [&]() {
      Rat u = rat_zp();
      while (u == 0 || *valuation_rat(u, p) != 0) u = rat_zp();
      long v = rnd_int(-3, 3);
      Rat s = v >= 0 ? Rat(power_of(p, v)) : Rat(1, power_of(p, -v));
      Rat out = u * s;
      out.canonicalize();
      return out;
    };
    for (int i = 0; i < 200; ++i) {
      Padic a = Padic::from_rational(rat_q(), p, 12);
      Padic b = Padic::from_rational(rat_q(), p, 12);
      auto ok = [&](bool c) {
        if (!c) throw std::runtime_error("function-layer property failed");
      };
      long joint;
      // omega multiplicativity and torsion
      Padic wa = omega_v(a), wb = omega_v(b);
      joint = std::min(omega_v(a * b).abs_precision(), (wa * wb).abs_precision());
      ok(agreement(omega_v(a * b), wa * wb) >= joint);
      Padic w = teichmuller(Padic::from_unit(a.unit(), 0, p, a.precision()));
      ok(agreement(w.pow_int(p - 1), Padic::from_integer(1, p, 12)) >= 12);
      // principal part congruent to 1
      ok(angle(a).residue(1) == 1);
      // angle_pow additivity
      Padic s = Padic::from_rational(rat_zp(), p, 12);
      Padic t = Padic::from_rational(rat_zp(), p, 12);
      Padic lhs = angle_pow(a, s + t), rhs = angle_pow(a, s) * angle_pow(a, t);
      ok(agreement(lhs, rhs) >= std::min(lhs.abs_precision(), rhs.abs_precision()));
      // exp inverts log on principal units
      Padic u = Padic::from_rational(1 + rat_zp() * p, p, 12);
      ok(agreement(exp_p(log_p(u)), u) >= std::min<long>(12, u.abs_precision()));
      // derivative of the projection by difference quotient, |a|_p >= 1
      Rat base = rat_q();
      while (*valuation_rat(base, p) > 0) base = rat_q();
      long hv = rnd_int(4, 8);
      Rat h(power_of(p, hv));
      Padic pa = Padic::from_rational(base, p, 20);
      Padic quot = (angle(Padic::from_rational(base + h, p, 20)) - angle(pa)) /
                   Padic::from_rational(h, p, 20);
      ok(agreement(quot, angle(pa) / pa) >= hv - 1);
      ++cases;
    }
  }
  detail = std::to_string(cases) + " randomized cases";
  return true;
}

bool moment_identities(std::string& detail) {
  std::mt19937_64 gen(0xb0a7edULL);
  auto rnd_int = [&](long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(gen);
  };
  // identity moments match the classical polynomials exactly, m <= 12
  std::vector<Rat> b0 = moments_b0(kIdentity, 12);
  std::vector<Rat> e0 = moments_e0(kIdentity, 12);
  for (long m = 0; m <= 12; ++m) {
    if (b0[static_cast<size_t>(m)] != oracle::gf_bernoulli_poly(m, Rat(0))) {
      detail = "B_" + std::to_string(m) + " mismatch";
      return false;
    }
    if (e0[static_cast<size_t>(m)] != oracle::gf_euler_poly(m, Rat(0))) {
      detail = "E_" + std::to_string(m) + "(0) mismatch";
      return false;
    }
  }
  // binomial shift identity for n <= 8: shift route vs full expansion route
  long checks = 0;
  for (const AnalyticFunction* f : {&kIdentity, &kSquare, &kOscillator}) {
    for (long n = 0; n <= 8; ++n) {
      Rat lam(rnd_int(-300, 300), rnd_int(1, 40));
      lam.canonicalize();
      std::vector<Rat> base = f->coefficients();
      base[0] += lam;
      std::vector<Rat> poly{Rat(1)};
      for (long t = 0; t < n; ++t) {
        std::vector<Rat> nxt(poly.size() + base.size() - 1, Rat(0));
        for (size_t i = 0; i < poly.size(); ++i)
          for (size_t j = 0; j < base.size(); ++j) nxt[i + j] += poly[i] * base[j];
        poly = std::move(nxt);
      }
      std::vector<Rat> bn = bernoulli_numbers(static_cast<long>(poly.size()));
      std::vector<Rat> en = euler_numbers_at_zero(static_cast<long>(poly.size()));
      Rat expand_b(0), expand_e(0);
      for (size_t j = 0; j < poly.size(); ++j) {
        expand_b += poly[j] * bn[j];
        expand_e += poly[j] * en[j];
      }
      expand_b.canonicalize();
      expand_e.canonicalize();
      if (bernoulli_f_rational(n, lam, *f) != expand_b ||
          euler_f_rational(n, lam, *f) != expand_e) {
        detail = "shift identity failed at n=" + std::to_string(n);
        return false;
      }
      ++checks;
    }
  }
  detail = "classical m <= 12 exact + " + std::to_string(checks) + " shift identities";
  return true;
}

}  // namespace

int main() {
  criterion(1, "classical special values (hurwitz)", [](std::string& d) {
    return classical_reduction(ZetaKind::hurwitz, d);
  });
  criterion(2, "Euler special values", [](std::string& d) {
    return classical_reduction(ZetaKind::euler, d);
  });
  criterion(3, "direct/series route tripwire", route_tripwire);
  criterion(4, "shifted-argument identities", shifted_identities);
  criterion(5, "derivative vs difference quotients", derivative_formulas);
  criterion(6, "log Gamma three-route agreement", loggamma_three_routes);
  criterion(7, "Mahler interpolation round trip", interpolation);
  criterion(8, "function-layer properties", function_layer);
  criterion(9, "moment identities", moment_identities);

  if (g_failures == 0) {
    std::printf("ACCEPTANCE: all 9 criteria passed\n");
    return 0;
  }
  std::printf("ACCEPTANCE: %d criteria FAILED\n", g_failures);
  return 1;
}
