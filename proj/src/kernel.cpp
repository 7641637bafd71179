#include "pzeta/kernel.hpp"

#include <limits>
#include <vector>

namespace pzeta {

Integrand Integrand::moment_of(const AnalyticFunction& f, const Rat& lambda, long m) {
  if (m < 0) throw domain_error("moment order must be >= 0");
  Integrand g;
  g.form = Form::moment;
  g.f = f;
  g.lambda = lambda;
  g.moment = m;
  return g;
}

Integrand Integrand::angle_power_of(const AnalyticFunction& f, const Rat& lambda,
                                    const Rat& one_minus_s) {
  Integrand g;
  g.form = Form::angle_power;
  g.f = f;
  g.lambda = lambda;
  g.one_minus_s = one_minus_s;
  return g;
}

Integrand Integrand::log_gamma_of(const AnalyticFunction& f, const Rat& lambda, bool euler) {
  Integrand g;
  g.form = euler ? Form::log_gamma_euler : Form::log_gamma_hurwitz;
  g.f = f;
  g.lambda = lambda;
  return g;
}

namespace kernel {

namespace {

constexpr long kInfVal = std::numeric_limits<long>::max() / 4;

long min_coeff_val(const std::vector<Rat>& coeffs, long p) {
  long v = kInfVal;
  for (const Rat& c : coeffs)
    if (auto vc = valuation_rat(c, p)) v = std::min(v, *vc);
  return v;
}

// ---- Montgomery arithmetic mod an odd n < 2^62 ----

struct Mont64 {
  uint64_t n = 0, ninv = 0, r2 = 0;

  static Mont64 make(uint64_t n) {
    Mont64 m;
    m.n = n;
    uint64_t inv = n;  // Newton lift of n^{-1} mod 2^64
    for (int i = 0; i < 6; ++i) inv *= 2 - n * inv;
    m.ninv = ~inv + 1;  // -n^{-1} mod 2^64
    uint64_t r = static_cast<uint64_t>((static_cast<unsigned __int128>(1) << 64) % n);
    m.r2 = static_cast<uint64_t>(static_cast<unsigned __int128>(r) * r % n);
    return m;
  }
  uint64_t redc(unsigned __int128 t) const {
    uint64_t k = static_cast<uint64_t>(t) * ninv;
    unsigned __int128 s = t + static_cast<unsigned __int128>(k) * n;
    uint64_t r = static_cast<uint64_t>(s >> 64);
    return r >= n ? r - n : r;
  }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return redc(static_cast<unsigned __int128>(a) * b);
  }
  uint64_t to(uint64_t a) const { return mul(a, r2); }
  uint64_t from(uint64_t a) const { return redc(a); }
};

// ---- the two modular rings the summation template runs over ----

struct RingU64 {
  using E = uint64_t;  // plain (non-Montgomery) residues
  long p;
  long digits;
  uint64_t pm;  // p^digits
  Mont64 mont;

  RingU64(long p_, long digits_) : p(p_), digits(digits_) {
    pm = 1;
    for (long i = 0; i < digits; ++i) pm *= static_cast<uint64_t>(p);
    mont = Mont64::make(pm);
  }
  E from_int(const Int& x) const {
    Int r = x % Int(static_cast<unsigned long>(pm));
    if (r < 0) r += Int(static_cast<unsigned long>(pm));
    return mpz_get_ui(r.get_mpz_t());
  }
  Int to_int(E a) const { return Int(static_cast<unsigned long>(a)); }
  E zero() const { return 0; }
  E one() const { return 1; }
  bool is_zero(E a) const { return a == 0; }
  E add(E a, E b) const {
    uint64_t s = a + b;  // pm <= 2^62 so no overflow
    return s >= pm ? s - pm : s;
  }
  E sub(E a, E b) const { return a >= b ? a - b : a + (pm - b); }
  E mul(E a, E b) const {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % pm);
  }
  E pow(E base, const Int& e) const {
    uint64_t ee = mpz_get_ui(e.get_mpz_t());
    uint64_t b = mont.to(base), r = mont.to(1);
    while (ee) {
      if (ee & 1) r = mont.mul(r, b);
      b = mont.mul(b, b);
      ee >>= 1;
    }
    return mont.from(r);
  }
  E inv_unit(E a) const {
    // phi(p^digits) = p^(digits-1)(p-1)
    uint64_t phi = pm / static_cast<uint64_t>(p) * static_cast<uint64_t>(p - 1);
    return pow(a, Int(static_cast<unsigned long>(phi - 1)));
  }
  long strip(E& a) const {
    long v = 0;
    while (a % static_cast<uint64_t>(p) == 0) {
      a /= static_cast<uint64_t>(p);
      ++v;
    }
    return v;
  }
  E pdiv_exact(E a, long j) const {
    for (long i = 0; i < j; ++i) a /= static_cast<uint64_t>(p);
    return a;
  }
  long residue_mod_p(E a) const { return static_cast<long>(a % static_cast<uint64_t>(p)); }
};

struct RingMpz {
  using E = Int;
  long p;
  long digits;
  Int pm;

  RingMpz(long p_, long digits_) : p(p_), digits(digits_), pm(power_of(p_, digits_)) {}
  E from_int(const Int& x) const {
    Int r = x % pm;
    if (r < 0) r += pm;
    return r;
  }
  Int to_int(const E& a) const { return a; }
  E zero() const { return Int(0); }
  E one() const { return Int(1); }
  bool is_zero(const E& a) const { return a == 0; }
  E add(const E& a, const E& b) const {
    Int s = a + b;
    if (s >= pm) s -= pm;
    return s;
  }
  E sub(const E& a, const E& b) const {
    Int s = a - b;
    if (s < 0) s += pm;
    return s;
  }
  E mul(const E& a, const E& b) const { return a * b % pm; }
  E pow(const E& base, const Int& e) const {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), pm.get_mpz_t());
    return r;
  }
  E inv_unit(const E& a) const {
    Int r;
    mpz_invert(r.get_mpz_t(), a.get_mpz_t(), pm.get_mpz_t());
    return r;
  }
  long strip(E& a) const {
    Int out;
    long v = static_cast<long>(mpz_remove(out.get_mpz_t(), a.get_mpz_t(), Int(p).get_mpz_t()));
    a = out;
    return v;
  }
  E pdiv_exact(const E& a, long j) const {
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), power_of(p, j).get_mpz_t());
    return r;
  }
  long residue_mod_p(const E& a) const {
    return static_cast<long>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(p)));
  }
};

// Mercator log of a principal unit u (u == 1 mod p), fixed-modulus version.
// Valid modulo p^(digits - slack) where slack = max v_p(k) over the series range;
// inv_table[k] must hold the inverse of the unit part of k.
template <class Ring>
typename Ring::E log_principal(const Ring& R, typename Ring::E u,
                               const std::vector<typename Ring::E>& inv_table,
                               const std::vector<long>& vp_table) {
  using E = typename Ring::E;
  E z = R.sub(u, R.one());
  E zk = R.one();
  E acc = R.zero();
  long kmax = static_cast<long>(inv_table.size()) - 1;
  for (long k = 1; k <= kmax; ++k) {
    zk = R.mul(zk, z);
    if (R.is_zero(zk)) break;
    E t = R.pdiv_exact(zk, vp_table[static_cast<size_t>(k)]);
    t = R.mul(t, inv_table[static_cast<size_t>(k)]);
    acc = (k % 2 == 1) ? R.add(acc, t) : R.sub(acc, t);
  }
  return acc;
}

template <class Ring>
SumResult sum_impl(const SumSpec& spec, const Ring& R) {
  using E = typename Ring::E;
  const Integrand& g = *spec.g;
  const long p = spec.p;
  const long digits = spec.mod_digits;
  g.f.certify_on(p);

  const long sigma0 = base_scale(g, p);
  const Int scale_factor = power_of(p, sigma0);

  // Difference-table registers for X(a) = p^sigma0 * (lambda + f(a)) (polynomial
  // and mahler kinds; forward differences at 0 ARE the Mahler coefficients), and
  // a second table for the reciprocal-kind denominator.
  std::vector<E> xreg, dreg;
  auto load_poly_registers = [&](const std::vector<Rat>& coeffs, const Rat& constant,
                                 const Rat& cscale) {
    // registers for P(a) = cscale * (constant + coeffs(a)): differences at a = 0..deg
    std::vector<Rat> vals;
    long deg = static_cast<long>(coeffs.size()) - 1;
    for (long a = 0; a <= deg; ++a) {
      Rat acc(0);
      for (size_t i = coeffs.size(); i-- > 0;) acc = acc * a + coeffs[i];
      acc = cscale * (constant + acc);
      acc.canonicalize();
      vals.push_back(acc);
    }
    std::vector<E> regs;
    for (long j = 0; j <= deg; ++j) {
      // forward difference Delta^j at 0
      Int m = power_of(p, digits);
      Int den = vals[0].get_den(), dinv;
      if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
        throw domain_error("summand is not p-integral after scaling");
      Int r = vals[0].get_num() * dinv % m;
      regs.push_back(R.from_int(r));
      for (size_t i = 0; i + 1 < vals.size(); ++i) vals[i] = vals[i + 1] - vals[i];
      vals.pop_back();
    }
    return regs;
  };

  const Rat scale_q(scale_factor);
  switch (g.f.kind()) {
    case FunctionKind::polynomial:
      xreg = load_poly_registers(g.f.coefficients(), g.lambda, scale_q);
      break;
    case FunctionKind::mahler: {
      // Delta^j of sum c_n binom(a,n) at 0 is c_j; lambda only shifts j = 0
      Int m = power_of(p, digits);
      for (size_t j = 0; j < g.f.coefficients().size(); ++j) {
        Rat c = g.f.coefficients()[j] * scale_q;
        if (j == 0) c += g.lambda * scale_q;
        c.canonicalize();
        Int den = c.get_den(), dinv;
        if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
          throw domain_error("summand is not p-integral after scaling");
        Int r = c.get_num() * dinv % m;
        if (r < 0) r += m;
        xreg.push_back(R.from_int(r));
      }
      break;
    }
    case FunctionKind::reciprocal: {
      // x = lambda + 1/den = (lambda*den + 1)/den; numerator registers scaled by p^sigma0
      std::vector<Rat> num = g.f.coefficients();
      for (Rat& c : num) { c *= g.lambda; c.canonicalize(); }
      xreg = load_poly_registers(num, Rat(1), scale_q);
      dreg = load_poly_registers(g.f.coefficients(), Rat(0), Rat(1));
      break;
    }
  }

  // Teichmuller inverse table omega^{-1}(r) mod p^digits, r = 1..p-1
  std::vector<E> winv(static_cast<size_t>(p), R.zero());
  for (long r = 1; r < p; ++r) {
    E t = R.from_int(Int(r));
    for (long i = 0; i <= digits + 1; ++i) t = R.pow(t, Int(p));
    winv[static_cast<size_t>(r)] = R.inv_unit(t);
  }

  // angle_power exponent: (1 - s) reduced mod p^(digits - 1)
  Int e(0);
  if (g.form == Integrand::Form::angle_power) {
    Int em = power_of(p, digits - 1);
    Int dinv;
    if (mpz_invert(dinv.get_mpz_t(), g.one_minus_s.get_den().get_mpz_t(), em.get_mpz_t()) == 0)
      throw domain_error("exponent s must lie in Z_p");
    e = g.one_minus_s.get_num() * dinv % em;
    if (e < 0) e += em;
  }

  // log series tables
  const bool is_log = g.form == Integrand::Form::log_gamma_hurwitz ||
                      g.form == Integrand::Form::log_gamma_euler;
  std::vector<E> inv_table;
  std::vector<long> vp_table;
  if (is_log) {
    long kmax = digits + 2;
    {  // extend while k - floor(log_p k) < digits
      long lp = 0;
      for (long t = kmax; t >= p; t /= p) ++lp;
      kmax += lp + 1;
    }
    inv_table.assign(static_cast<size_t>(kmax) + 1, R.zero());
    vp_table.assign(static_cast<size_t>(kmax) + 1, 0);
    for (long k = 1; k <= kmax; ++k) {
      long kk = k, v = 0;
      while (kk % p == 0) { kk /= p; ++v; }
      vp_table[static_cast<size_t>(k)] = v;
      inv_table[static_cast<size_t>(k)] = R.inv_unit(R.from_int(Int(kk)));
    }
  }

  // number of summation points
  double pts = 1;
  for (long i = 0; i < spec.level; ++i) pts *= static_cast<double>(p);
  if (pts > 6e7) throw domain_error("summation level too large: p^N exceeds the supported range");
  const long long npoints = static_cast<long long>(pts);

  E acc = R.zero();
  long max_val = 0;
  bool positive = true;  // (-1)^a for the fermionic measure

  for (long long a = 0; a < npoints; ++a) {
    E out;
    const E x = xreg[0];
    switch (g.form) {
      case Integrand::Form::moment: {
        E base = x;
        if (!dreg.empty()) {
          // x_true = X / (p^sigma0 den): moment summand = (X / den)^m / p^{(m-1)... }
          // handled by scale = m*sigma0: (p^{sigma0}(lambda+f))^m = (X/den)^m * ... see below
          base = R.mul(x, R.inv_unit(dreg[0]));
        }
        out = g.moment == 0 ? R.one() : R.pow(base, Int(g.moment));
        break;
      }
      case Integrand::Form::angle_power: {
        E u = x;
        if (!dreg.empty()) u = R.mul(u, R.inv_unit(dreg[0]));
        if (R.is_zero(u))
          throw domain_error("integrand vanishes to working depth at a == " + std::to_string(a) +
                             ": -lambda meets the value set of f");
        long v = R.strip(u);
        max_val = std::max(max_val, v - sigma0);
        E principal = R.mul(u, winv[static_cast<size_t>(R.residue_mod_p(u))]);
        out = R.pow(principal, e);
        break;
      }
      case Integrand::Form::log_gamma_hurwitz:
      case Integrand::Form::log_gamma_euler: {
        E u = x;
        if (!dreg.empty()) u = R.mul(u, R.inv_unit(dreg[0]));
        if (R.is_zero(u))
          throw domain_error("integrand vanishes to working depth at a == " + std::to_string(a) +
                             ": -lambda meets the value set of f");
        E stripped = u;
        long v = R.strip(stripped);
        max_val = std::max(max_val, v - sigma0);
        E principal = R.mul(stripped, winv[static_cast<size_t>(R.residue_mod_p(stripped))]);
        E lg = log_principal(R, principal, inv_table, vp_table);
        if (g.form == Integrand::Form::log_gamma_hurwitz) lg = R.sub(lg, R.one());
        out = R.mul(u, lg);
        break;
      }
      default:
        throw domain_error("unknown integrand form");
    }
    if (spec.measure == Measure::haar || positive)
      acc = R.add(acc, out);
    else
      acc = R.sub(acc, out);
    positive = !positive;
    // step the difference tables: r[j] += r[j+1]
    for (size_t j = 0; j + 1 < xreg.size(); ++j) xreg[j] = R.add(xreg[j], xreg[j + 1]);
    for (size_t j = 0; j + 1 < dreg.size(); ++j) dreg[j] = R.add(dreg[j], dreg[j + 1]);
  }

  return SumResult{R.to_int(acc), max_val};
}

}  // namespace

bool fits_u64(long p, long mod_digits) {
  if (mod_digits < 1) return false;
  unsigned __int128 m = 1;
  const unsigned __int128 cap = static_cast<unsigned __int128>(1) << 62;
  for (long i = 0; i < mod_digits; ++i) {
    m *= static_cast<unsigned __int128>(p);
    if (m > cap) return false;
  }
  return true;
}

long base_scale(const Integrand& g, long p) {
  long vlam = g.lambda == 0 ? kInfVal : *valuation_rat(g.lambda, p);
  long vf;
  switch (g.f.kind()) {
    case FunctionKind::polynomial:
    case FunctionKind::mahler:
      vf = min_coeff_val(g.f.coefficients(), p);
      if (g.f.kind() == FunctionKind::mahler) vf = std::min(vf, g.f.mahler_tail_val());
      break;
    case FunctionKind::reciprocal:
      vf = 0;
      break;
    default:
      vf = 0;
  }
  long w = std::min<long>({0, vlam, vf});
  return -w;
}

long summand_scale(const Integrand& g, long p) {
  long s0 = base_scale(g, p);
  switch (g.form) {
    case Integrand::Form::moment:
      return g.moment * s0;  // summand is X^m = (p^s0 (lambda+f))^m
    case Integrand::Form::angle_power:
      return 0;  // the principal part <lambda+f(a)> is scale-invariant
    case Integrand::Form::log_gamma_hurwitz:
    case Integrand::Form::log_gamma_euler:
      return s0;  // summand is X (log - 1) = p^s0 (lambda+f)(log - 1)
  }
  return s0;
}

long log_headroom(long p, long mod_digits) {
  long kmax = mod_digits + 6, lp = 0;
  for (long t = kmax; t >= p; t /= p) ++lp;
  return lp + 1;
}

SumResult residue_sum_u64(const SumSpec& spec) {
  if (!fits_u64(spec.p, spec.mod_digits))
    throw domain_error("modulus does not fit the u64 kernel");
  RingU64 R(spec.p, spec.mod_digits);
  return sum_impl(spec, R);
}

SumResult residue_sum_mpz(const SumSpec& spec) {
  RingMpz R(spec.p, spec.mod_digits);
  return sum_impl(spec, R);
}

SumResult residue_sum(const SumSpec& spec) {
  if (fits_u64(spec.p, spec.mod_digits)) return residue_sum_u64(spec);
  return residue_sum_mpz(spec);
}

}  // namespace kernel
}  // namespace pzeta
