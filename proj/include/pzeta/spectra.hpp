#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pzeta/padic.hpp"

namespace pzeta {

enum class FunctionKind { polynomial, reciprocal, mahler };

/// A locally analytic interpolating function on Z_p: a polynomial with
/// rational coefficients, the reciprocal of such a polynomial (denominator a
/// unit everywhere on Z_p), or a truncated Mahler series with a decay
/// certificate.
class AnalyticFunction {
 public:
  static AnalyticFunction polynomial(std::vector<Rat> coeffs);
  // f(a) = 1 / den(a); den must have p-integral coefficients and no root mod p.
  static AnalyticFunction reciprocal(std::vector<Rat> denominator);
  // Truncated Mahler series sum c_n binom(x, n); tail_val is the certified
  // lower bound on v_p(c_n) for all n beyond the stored range.
  static AnalyticFunction mahler(std::vector<Rat> coeffs, long tail_val);

  // "identity" | "square" | "oscillator" | "poly:c0,c1,..." |
  // "recip-poly:c0,c1,..." | "mahler:<file>"
  static AnalyticFunction parse_spec(const std::string& spec);

  FunctionKind kind() const { return kind_; }
  const std::vector<Rat>& coefficients() const { return coeffs_; }
  bool reciprocal_convention() const { return recip_convention_; }
  AnalyticFunction with_reciprocal_convention() const;
  std::string describe() const;

  // val-form of the sup bound (17): |f(a)|_p <= p^{-sup_val_bound} on Z_p.
  long sup_val_bound(long p) const;
  Rat bound_M(long p) const;  // the same bound as an exact norm value

  // Throws hypothesis_error if the reciprocal denominator has a root on Z_p
  // (checked on residues mod p); no-op for other kinds.
  void certify_on(long p) const;

  Padic eval(const Padic& a) const;          // a in Z_p
  Rat eval_rational(const Rat& a, long p) const;  // exact; mahler kind refused
  long mahler_tail_val() const { return tail_val_; }

 private:
  FunctionKind kind_ = FunctionKind::polynomial;
  std::vector<Rat> coeffs_;
  long tail_val_ = 0;
  bool recip_convention_ = false;
};

/// An eigenvalue sequence of exact rationals.
struct Spectrum {
  std::string name;
  long first_index = 0;  // eigenvalues defined for n >= first_index
  long count = -1;       // number of stored values; -1 when given in closed form
  std::function<Rat(long)> eigen;
  std::string normalization_note;

  Rat eigenvalue(long n) const;
};

struct CatalogEntry {
  Spectrum spectrum;
  AnalyticFunction f;
};

// Built-in quantum-model spectra: "integer", "barrier", "oscillator",
// "hydrogen" (hydrogen exposes g(a) = a^2, flagged reciprocal-convention).
CatalogEntry catalog(const std::string& name);

// One rational per line ("num/den" or "num"); index implicit from 0.
Spectrum spectrum_from_file(const std::string& path);
Spectrum spectrum_from_values(std::string name, std::vector<Rat> values);

enum class AnalyticityVerdict { certified, inconclusive, rejected };

/// Forward-difference (Mahler) coefficients of a spectrum with norm data and
/// continuity / analyticity verdicts. Verdicts are evidence from the computed
/// range, not proofs.
struct MahlerExpansion {
  long prime = 5;
  long prec = 20;
  std::vector<Rat> coeffs;          // exact c_n
  std::vector<Padic> coeffs_padic;  // embedded at prec
  std::vector<Rat> norms;           // |c_n|_p
  bool continuity_ok = false;
  struct Analyticity {
    Rat radius{0};
    bool certified = false;
    long witness = -1;
  } analyticity;
};

// c_n = sum_{i<=n} (-1)^{n-i} binom(n,i) lambda_i, n <= n_max.
MahlerExpansion mahler_coeffs(const Spectrum& s, long n_max, long p, long prec);

// Truncated Mahler series at x in Z_p; requires continuity_ok.
Padic mahler_eval(const MahlerExpansion& e, const Padic& x);

// Exact evaluation at an integer point (Newton forward interpolation).
Rat mahler_eval_exact(const MahlerExpansion& e, long n);

// Tests lim |c_n| r^{-n} = 0 on the computed range for a radius parameter
// 0 < r < p^{-1/(p-1)} (compared exactly: p * num^(p-1) < den^(p-1)).
AnalyticityVerdict analyticity_test(MahlerExpansion& e, const Rat& r);

// Wraps a continuity-certified expansion as a mahler-kind AnalyticFunction.
AnalyticFunction to_analytic_function(const MahlerExpansion& e);

}  // namespace pzeta
