#include "pzeta/integration.hpp"

#include <algorithm>

namespace pzeta {

namespace {

// v_p of a residue difference, capped at `cap` when the residues coincide
long residue_val(const Int& a, const Int& b, long p, long cap) {
  Int d = a - b;
  if (d == 0) return cap;
  Int m = power_of(p, cap);
  d %= m;
  if (d < 0) d += m;
  if (d == 0) return cap;
  return std::min(cap, valuation_int(d, p));
}

}  // namespace

IntegralReport integrate(Measure mu, const Integrand& g, LevelRange levels, long p,
                         long target_abs_prec) {
  if (!is_odd_prime(p)) throw domain_error("prime must be an odd prime");
  if (levels.lo < 1 || levels.hi < levels.lo + 1)
    throw domain_error("level schedule needs at least two levels with 1 <= lo < hi");
  const long maxL = levels.hi;
  const long scale = kernel::summand_scale(g, p);
  const bool is_log = g.form == Integrand::Form::log_gamma_hurwitz ||
                      g.form == Integrand::Form::log_gamma_euler;
  const bool haar = mu == Measure::haar;

  // digits the value loses against the accumulator: p^scale and, for Haar,
  // the final division by p^maxL
  const long value_shift = scale + (haar ? maxL : 0);

  long headroom = 2;  // valuation strips observed at runtime; grown on demand
  for (int attempt = 0;; ++attempt) {
    long mod_digits = target_abs_prec + value_shift + headroom + (is_log ? kernel::log_headroom(p, target_abs_prec + value_shift + headroom) : 0);
    std::vector<Int> raw;
    std::vector<long> used;
    long max_val = 0;
    for (long N = levels.lo; N <= levels.hi; ++N) {
      kernel::SumSpec spec{mu, &g, N, p, mod_digits, scale};
      kernel::SumResult r = kernel::residue_sum(spec);
      raw.push_back(r.sum);
      used.push_back(N);
      max_val = std::max(max_val, r.max_val_stripped);
    }
    if (max_val + 2 > headroom && attempt == 0) {
      headroom = max_val + 4;
      continue;
    }
    // valid accumulator digits after valuation strips and log-series slack
    long consumed = std::max<long>(0, max_val) + (is_log ? kernel::log_headroom(p, mod_digits) : 0);
    long m_valid = mod_digits - consumed;
    Int modulus = power_of(p, mod_digits);

    // align Haar sums on the common p^{-maxL} scale
    std::vector<Int> vals = raw;
    if (haar)
      for (size_t i = 0; i < vals.size(); ++i)
        vals[i] = vals[i] * power_of(p, maxL - used[i]) % modulus;

    IntegralReport rep;
    rep.levels_used = used;
    for (size_t i = 0; i + 1 < vals.size(); ++i)
      rep.agreement_digits.push_back(residue_val(vals[i + 1], vals[i], p, m_valid) - value_shift);

    // Richardson: stage k removes the p^{kN} error term
    std::vector<Int> R = vals;
    Int prev_stage_last = vals.back();
    for (long k = 1; !R.empty() && R.size() > 1; ++k) {
      Int fac = power_of(p, k);
      Int dinv;
      Int one_minus = (1 - fac) % modulus;
      if (one_minus < 0) one_minus += modulus;
      mpz_invert(dinv.get_mpz_t(), one_minus.get_mpz_t(), modulus.get_mpz_t());
      std::vector<Int> nxt;
      for (size_t i = 0; i + 1 < R.size(); ++i) {
        Int t = (R[i + 1] - fac * R[i]) % modulus;
        if (t < 0) t += modulus;
        nxt.push_back(t * dinv % modulus);
      }
      if (nxt.size() == 1) prev_stage_last = R.back();
      R = std::move(nxt);
    }
    long refined_sum_units = residue_val(R.front(), prev_stage_last, p, m_valid);
    rep.refined_agreement = refined_sum_units - value_shift;

    long declared_abs = std::min(m_valid - value_shift, rep.refined_agreement);
    Padic value = Padic::from_residue(R.front(), p, m_valid).shift(-value_shift);
    rep.value = value.with_abs_precision(std::min(value.abs_precision(), declared_abs));
    rep.converged = declared_abs >= target_abs_prec;
    return rep;
  }
}

IntegralReport volkenborn(const Integrand& g, LevelRange levels, long p, long target_abs_prec) {
  return integrate(Measure::haar, g, levels, p, target_abs_prec);
}

IntegralReport fermionic(const Integrand& g, LevelRange levels, long p, long target_abs_prec) {
  return integrate(Measure::mu_minus_one, g, levels, p, target_abs_prec);
}

// ---- classical moment tables ----

std::vector<Rat> bernoulli_numbers(long m_max) {
  if (m_max < 0) throw domain_error("m_max must be >= 0");
  std::vector<Rat> b;
  b.reserve(static_cast<size_t>(m_max) + 1);
  std::vector<std::vector<Rat>> binom_row;  // Pascal rows as needed
  std::vector<Int> row{Int(1)};
  for (long m = 0; m <= m_max; ++m) {
    // row = binomials binom(m+1, j), j = 0..m+1
    std::vector<Int> nrow(static_cast<size_t>(m) + 2, Int(1));
    for (size_t j = 1; j + 1 < nrow.size(); ++j) nrow[j] = row[j - 1] + (j < row.size() ? row[j] : Int(0));
    row = std::move(nrow);
    if (m == 0) {
      b.push_back(Rat(1));
      continue;
    }
    Rat s(0);
    for (long j = 0; j < m; ++j) s += Rat(row[static_cast<size_t>(j)]) * b[static_cast<size_t>(j)];
    Rat v = -s / Rat(m + 1);
    v.canonicalize();
    b.push_back(v);
  }
  return b;
}

Rat bernoulli_number(long m) { return bernoulli_numbers(m).back(); }

Rat bernoulli_poly(long m, const Rat& x) {
  std::vector<Rat> b = bernoulli_numbers(m);
  Rat acc(0), c(1);  // c = binom(m, j)
  for (long j = 0; j <= m; ++j) {
    if (j > 0) {
      c *= Rat(m - j + 1, j);
      c.canonicalize();
    }
    Rat xp(1);
    for (long t = 0; t < m - j; ++t) xp *= x;
    acc += c * b[static_cast<size_t>(j)] * xp;
  }
  acc.canonicalize();
  return acc;
}

namespace {

// coefficient lists of E_0..E_mmax (ascending powers)
std::vector<std::vector<Rat>> euler_poly_coeffs(long m_max) {
  std::vector<std::vector<Rat>> es;
  for (long n = 0; n <= m_max; ++n) {
    std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
    c[static_cast<size_t>(n)] = Rat(1);
    Rat bin(1);  // binom(n, k)
    for (long k = 0; k < n; ++k) {
      if (k > 0) {
        bin *= Rat(n - k + 1, k);
        bin.canonicalize();
      }
      Rat half_bin = bin / 2;
      for (size_t j = 0; j < es[static_cast<size_t>(k)].size(); ++j)
        c[j] -= half_bin * es[static_cast<size_t>(k)][j];
    }
    for (auto& q : c) q.canonicalize();
    es.push_back(std::move(c));
  }
  return es;
}

Rat poly_at(const std::vector<Rat>& c, const Rat& x) {
  Rat acc(0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  acc.canonicalize();
  return acc;
}

}  // namespace

Rat euler_poly(long m, const Rat& x) {
  auto es = euler_poly_coeffs(m);
  return poly_at(es.back(), x);
}

std::vector<Rat> euler_numbers_at_zero(long m_max) {
  auto es = euler_poly_coeffs(m_max);
  std::vector<Rat> out;
  for (auto& c : es) out.push_back(c[0]);
  return out;
}

// ---- moments of f ----

bool has_exact_moments(const AnalyticFunction& f) {
  return f.kind() == FunctionKind::polynomial;
}

namespace {

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  for (auto& q : c) q.canonicalize();
  return c;
}

std::vector<Rat> moments_against(const AnalyticFunction& f, long m_max,
                                 const std::vector<Rat>& monomial_moments) {
  if (!has_exact_moments(f))
    throw domain_error("exact moments are only available for polynomial-kind f");
  std::vector<Rat> out;
  std::vector<Rat> powf{Rat(1)};
  for (long m = 0; m <= m_max; ++m) {
    if (m > 0) powf = poly_mul(powf, f.coefficients());
    Rat s(0);
    for (size_t j = 0; j < powf.size(); ++j) s += powf[j] * monomial_moments[j];
    s.canonicalize();
    out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<Rat> moments_b0(const AnalyticFunction& f, long m_max) {
  long deg = static_cast<long>(f.coefficients().size()) - 1;
  std::vector<Rat> mono = bernoulli_numbers(std::max<long>(deg * m_max, 0));
  return moments_against(f, m_max, mono);
}

std::vector<Rat> moments_e0(const AnalyticFunction& f, long m_max) {
  long deg = static_cast<long>(f.coefficients().size()) - 1;
  std::vector<Rat> mono = euler_numbers_at_zero(std::max<long>(deg * m_max, 0));
  return moments_against(f, m_max, mono);
}

namespace {

Rat moment_shift(long m, const Rat& lambda, const std::vector<Rat>& m0) {
  // sum_j binom(m, j) m0[j] lambda^{m-j}
  Rat acc(0), bin(1);
  for (long j = 0; j <= m; ++j) {
    if (j > 0) {
      bin *= Rat(m - j + 1, j);
      bin.canonicalize();
    }
    Rat lp(1);
    for (long t = 0; t < m - j; ++t) lp *= lambda;
    acc += bin * m0[static_cast<size_t>(j)] * lp;
  }
  acc.canonicalize();
  return acc;
}

}  // namespace

Rat bernoulli_f_rational(long m, const Rat& lambda, const AnalyticFunction& f) {
  return moment_shift(m, lambda, moments_b0(f, m));
}

Rat euler_f_rational(long m, const Rat& lambda, const AnalyticFunction& f) {
  return moment_shift(m, lambda, moments_e0(f, m));
}

Padic bernoulli_f(long m, const Rat& lambda, const AnalyticFunction& f, long p, long prec,
                  LevelRange levels) {
  if (m < 0) throw domain_error("moment order must be >= 0");
  if (has_exact_moments(f))
    return Padic::from_rational(bernoulli_f_rational(m, lambda, f), p, prec);
  Integrand g = Integrand::moment_of(f, lambda, m);
  return volkenborn(g, levels, p, prec).value;
}

Padic euler_f(long m, const Rat& lambda, const AnalyticFunction& f, long p, long prec,
              LevelRange levels) {
  if (m < 0) throw domain_error("moment order must be >= 0");
  if (has_exact_moments(f))
    return Padic::from_rational(euler_f_rational(m, lambda, f), p, prec);
  Integrand g = Integrand::moment_of(f, lambda, m);
  return fermionic(g, levels, p, prec).value;
}

}  // namespace pzeta
