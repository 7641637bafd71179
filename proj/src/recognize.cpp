#include "pzeta/recognize.hpp"

namespace pzeta {

namespace {

// extended-Euclid walk on (p^A, u): the remainders r_k paired with the
// cofactors t_k satisfy r_k == t_k * u (mod p^A); the first remainder within
// the bound yields the candidate n/d = r_k / t_k
std::optional<Rat> reconstruct_euclid(const Int& u, const Int& modulus, const Int& bound) {
  Int r0 = modulus, r1 = u;
  Int t0(0), t1(1);
  while (r1 > bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
    if (r1 == 0) return std::nullopt;
  }
  Int d = t1 < 0 ? Int(-t1) : t1;
  Int n = t1 < 0 ? Int(-r1) : r1;
  if (d == 0 || d > bound) return std::nullopt;
  Rat q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace

std::optional<Rat> recognize_rational(const Padic& x, const Int& height_bound) {
  if (height_bound < 1) return std::nullopt;
  long p = x.prime();
  if (x.is_zero()) return Rat(0);
  long a = x.abs_precision();
  if (a < 1 || x.valuation() < 0) {
    // pull the p-power into the result: recognize the unit part and rescale
    if (x.is_zero() || a < 1) return std::nullopt;
    Padic unit = x.shift(-x.valuation());
    auto q = recognize_rational(unit, height_bound);
    if (!q) return std::nullopt;
    Rat scale = (x.valuation() >= 0) ? Rat(power_of(p, x.valuation()))
                                     : Rat(1, power_of(p, -x.valuation()));
    Rat out = *q * scale;
    out.canonicalize();
    return out;
  }
  Int modulus = power_of(p, a);
  Int u = x.residue(a);

  // small bounds: exhaustive scan over denominators, minimal height wins;
  // a tie between distinct values means no unique answer
  if (height_bound <= 100000) {
    std::optional<Rat> best;
    Int best_h(0);
    bool ambiguous = false;
    for (Int d(1); d <= height_bound; ++d) {
      if (mpz_fdiv_ui(d.get_mpz_t(), static_cast<unsigned long>(p)) == 0) continue;
      Int n = u * d % modulus;
      if (2 * n > modulus) n -= modulus;  // symmetric representative
      Int absn = n < 0 ? Int(-n) : n;
      if (absn > height_bound) continue;
      Rat cand(n, d);
      cand.canonicalize();
      Int h = std::max(absn, d);
      if (!best || h < best_h) {
        best = cand;
        best_h = h;
        ambiguous = false;
      } else if (h == best_h && cand != *best) {
        ambiguous = true;
      }
    }
    if (!best || ambiguous) return std::nullopt;
    return best;
  }

  auto q = reconstruct_euclid(u, modulus, height_bound);
  if (!q) return std::nullopt;
  // verify: correct congruence, unit denominator, inside the bound
  Int n = q->get_num(), d = q->get_den();
  Int absn = n < 0 ? Int(-n) : n;
  if (absn > height_bound || d > height_bound) return std::nullopt;
  if (mpz_fdiv_ui(d.get_mpz_t(), static_cast<unsigned long>(p)) == 0) return std::nullopt;
  Int check = (n - u * d) % modulus;
  if (check != 0) return std::nullopt;
  return q;
}

std::optional<Rat> recognize_rational(const Padic& x) {
  if (x.is_zero()) return Rat(0);
  long a = x.precision();  // digits carried by the unit part
  if (a < 2) return std::nullopt;
  Int bound;
  Int m = power_of(x.prime(), a) / 2;
  mpz_sqrt(bound.get_mpz_t(), m.get_mpz_t());
  return recognize_rational(x, bound);
}

}  // namespace pzeta
