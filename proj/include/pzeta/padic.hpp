#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "pzeta/errors.hpp"

namespace pzeta {

using Int = mpz_class;
using Rat = mpq_class;

// ---- small number-theory helpers on exact integers/rationals ----

bool is_odd_prime(long p);

// v_p(n) for n != 0 (throws on n == 0).
long valuation_int(const Int& n, long p);

// v_p(q), or nullopt for q == 0.
std::optional<long> valuation_rat(const Rat& q, long p);

// p^k as an exact integer, k >= 0.
Int power_of(long p, long k);

// "n", "-n" or "n/d" with d > 0 after canonicalization.
Rat parse_rational(const std::string& text);
std::string to_string(const Rat& q);

// |q|_p as an exact rational p^{-v_p(q)} (0 for q == 0).
Rat padic_norm(const Rat& q, long p);

/// An element of Q_p at finite precision.
///
/// A nonzero value is stored as p^v * unit with unit in [1, p^N), p !| unit,
/// and is known modulo p^(v+N): N significant digits, absolute precision v+N.
/// Zero carries only an absolute precision bound: the value O(p^M).
/// Values are immutable; every operation returns a fresh canonical value and
/// propagates precision Krasner-style (add at min absolute precision,
/// mul/inv at min relative precision).
class Padic {
 public:
  // Placeholder value (no prime attached); any arithmetic with it throws.
  // Real values come from the factories below.
  Padic() = default;

  static Padic zero(long p, long abs_prec);
  // Canonical image of q in Q_p with `prec` significant digits.
  static Padic from_rational(const Rat& q, long p, long prec);
  static Padic from_integer(long n, long p, long prec);
  // From a raw integer representative known mod p^(known_digits), tagged with
  // an absolute precision: normalizes valuation and unit.
  static Padic from_residue(const Int& value, long p, long abs_prec);
  // Assembles p^v * unit directly; `unit` is reduced mod p^prec and must be a p-unit.
  static Padic from_unit(const Int& unit, long v, long p, long prec);

  long prime() const { return p_; }
  bool is_zero() const { return zero_; }
  long valuation() const;         // domain_error on zero
  long precision() const { return zero_ ? 0 : prec_; }  // significant digits
  long abs_precision() const { return zero_ ? absprec_ : v_ + prec_; }
  const Int& unit() const;        // domain_error on zero
  Rat norm() const;               // p^{-v}; exact 0 for zero
  std::vector<long> digits() const;  // little-endian unit digits, length = precision()

  Padic operator-() const;
  Padic inv() const;              // precision_error if indistinguishable from 0
  Padic pow_int(long k) const;    // k < 0 requires nonzero
  Padic shift(long k) const;      // multiply by p^k (exact)
  Padic with_abs_precision(long m) const;  // cap absolute precision at m
  Padic div_exact_int(const Int& k) const; // divide by a nonzero exact integer
  // Integer residue of the value mod p^k (requires valuation >= 0, k <= abs precision).
  Int residue(long k) const;

  friend Padic operator+(const Padic& x, const Padic& y);
  friend Padic operator-(const Padic& x, const Padic& y);
  friend Padic operator*(const Padic& x, const Padic& y);
  friend Padic operator/(const Padic& x, const Padic& y);

  // Absolute precision to which x and y coincide: v_p(x - y), or the joint
  // precision when the difference is indistinguishable from zero.
  friend long agreement(const Padic& x, const Padic& y);

  // Canonical literal: "5^-1*(1 + 3*5 + 0*5^2) + O(5^2)"; zero: "O(5^3)".
  std::string str() const;
  // Integer mode: "7 + O(5^2)" when v = 0, "5^-1*7 + O(5^1)" otherwise.
  std::string str_compact() const;
  // Colon form: "5:-1:1,3,0"; zero: "5:3:".
  std::string str_colon() const;

  // Accepts the canonical literal, the integer mode, the colon form, and bare
  // rationals "n" / "n/d" (embedded at `prec` significant digits).
  static Padic parse(const std::string& text, long p, long prec);

 private:
  long p_ = 0;
  bool zero_ = true;
  long v_ = 0;        // valuation (nonzero values)
  long prec_ = 0;     // significant digits N (nonzero values)
  long absprec_ = 0;  // absolute precision bound M (zero only)
  Int unit_;          // in [1, p^N), not divisible by p
};

}  // namespace pzeta
