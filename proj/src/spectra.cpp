#include "pzeta/spectra.hpp"

#include <fstream>
#include <limits>
#include <memory>
#include <sstream>

namespace pzeta {

namespace {

constexpr long kInfVal = std::numeric_limits<long>::max() / 4;

std::vector<Rat> parse_coeff_list(const std::string& list) {
  std::vector<Rat> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw domain_error("empty coefficient list");
  return out;
}

Rat poly_eval(const std::vector<Rat>& c, const Rat& x) {
  Rat acc(0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  acc.canonicalize();
  return acc;
}

Padic poly_eval(const std::vector<Rat>& c, const Padic& a) {
  long p = a.prime();
  long prec = a.is_zero() ? std::max<long>(a.abs_precision(), 1) : a.precision();
  Padic acc = Padic::zero(p, prec + 8);
  for (size_t i = c.size(); i-- > 0;) acc = acc * a + Padic::from_rational(c[i], p, prec);
  return acc;
}

}  // namespace

AnalyticFunction AnalyticFunction::polynomial(std::vector<Rat> coeffs) {
  if (coeffs.empty()) coeffs.push_back(Rat(0));
  AnalyticFunction f;
  f.kind_ = FunctionKind::polynomial;
  f.coeffs_ = std::move(coeffs);
  return f;
}

AnalyticFunction AnalyticFunction::reciprocal(std::vector<Rat> denominator) {
  if (denominator.empty()) throw domain_error("reciprocal: empty denominator");
  AnalyticFunction f;
  f.kind_ = FunctionKind::reciprocal;
  f.coeffs_ = std::move(denominator);
  return f;
}

AnalyticFunction AnalyticFunction::mahler(std::vector<Rat> coeffs, long tail_val) {
  if (coeffs.empty()) coeffs.push_back(Rat(0));
  AnalyticFunction f;
  f.kind_ = FunctionKind::mahler;
  f.coeffs_ = std::move(coeffs);
  f.tail_val_ = tail_val;
  return f;
}

AnalyticFunction AnalyticFunction::with_reciprocal_convention() const {
  AnalyticFunction f = *this;
  f.recip_convention_ = true;
  return f;
}

AnalyticFunction AnalyticFunction::parse_spec(const std::string& spec) {
  if (spec == "identity") return polynomial({Rat(0), Rat(1)});
  if (spec == "square") return polynomial({Rat(0), Rat(0), Rat(1)});
  if (spec == "oscillator") return polynomial({Rat(1, 2), Rat(1)});
  if (spec.rfind("poly:", 0) == 0) return polynomial(parse_coeff_list(spec.substr(5)));
  if (spec.rfind("recip-poly:", 0) == 0) return reciprocal(parse_coeff_list(spec.substr(11)));
  if (spec.rfind("mahler:", 0) == 0) {
    Spectrum s = spectrum_from_file(spec.substr(7));
    // interpolate at the working default; callers needing other (p, prec)
    // should go through mahler_coeffs directly
    MahlerExpansion e = mahler_coeffs(s, s.count - 1, 5, 20);
    return to_analytic_function(e);
  }
  throw domain_error("unknown function spec '" + spec +
                     "' (expected identity|square|oscillator|poly:...|recip-poly:...|mahler:<file>)");
}

std::string AnalyticFunction::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case FunctionKind::polynomial: os << "poly:"; break;
    case FunctionKind::reciprocal: os << "recip-poly:"; break;
    case FunctionKind::mahler: os << "mahler:"; break;
  }
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ",";
    os << to_string(coeffs_[i]);
  }
  if (recip_convention_) os << " (reciprocal convention)";
  return os.str();
}

long AnalyticFunction::sup_val_bound(long p) const {
  switch (kind_) {
    case FunctionKind::polynomial: {
      // Gauss norm: |f(a)|_p <= max_i |c_i|_p on Z_p
      long v = kInfVal;
      for (const Rat& c : coeffs_)
        if (auto vc = valuation_rat(c, p)) v = std::min(v, *vc);
      return v;
    }
    case FunctionKind::reciprocal:
      certify_on(p);
      return 0;  // |den(a)|_p = 1 on Z_p, so |1/den| = 1
    case FunctionKind::mahler: {
      // |f(x)| <= max_n |c_n| since |binom(x,n)|_p <= 1 on Z_p
      long v = tail_val_;
      for (const Rat& c : coeffs_)
        if (auto vc = valuation_rat(c, p)) v = std::min(v, *vc);
      return v;
    }
  }
  return 0;
}

Rat AnalyticFunction::bound_M(long p) const {
  long v = sup_val_bound(p);
  if (v >= kInfVal) return Rat(0);
  Rat r = (v >= 0) ? Rat(1, power_of(p, v)) : Rat(power_of(p, -v));
  r.canonicalize();
  return r;
}

void AnalyticFunction::certify_on(long p) const {
  if (kind_ != FunctionKind::reciprocal) return;
  for (const Rat& c : coeffs_) {
    auto v = valuation_rat(c, p);
    if (v && *v < 0)
      throw hypothesis_error("reciprocal denominator must have p-integral coefficients");
  }
  for (long r = 0; r < p; ++r) {
    Rat d = poly_eval(coeffs_, Rat(r));
    auto v = valuation_rat(d, p);
    if (!v || *v > 0)
      throw hypothesis_error("denominator has a zero on Z_p: vanishes mod " + std::to_string(p) +
                             " at a == " + std::to_string(r) +
                             "; the reciprocal is not locally analytic on Z_p");
  }
}

Padic AnalyticFunction::eval(const Padic& a) const {
  if (!a.is_zero() && a.valuation() < 0)
    throw domain_error("eval_f requires a in Z_p");
  switch (kind_) {
    case FunctionKind::polynomial:
      return poly_eval(coeffs_, a);
    case FunctionKind::reciprocal: {
      certify_on(a.prime());
      return poly_eval(coeffs_, a).inv();
    }
    case FunctionKind::mahler: {
      long p = a.prime();
      long prec = a.is_zero() ? std::max<long>(a.abs_precision(), 1) : a.precision();
      Padic acc = Padic::zero(p, prec + 8);
      Padic b = Padic::from_integer(1, p, prec);  // binom(a, n), updated incrementally
      for (size_t n = 0; n < coeffs_.size(); ++n) {
        if (n > 0) b = b * (a - Padic::from_integer(static_cast<long>(n) - 1, p, prec))
                        .div_exact_int(Int(static_cast<long>(n)));
        if (coeffs_[n] != 0) acc = acc + Padic::from_rational(coeffs_[n], p, prec) * b;
      }
      // truncation error bounded by the certified tail decay
      return acc.with_abs_precision(std::min(acc.abs_precision(), tail_val_));
    }
  }
  throw domain_error("unreachable");
}

Rat AnalyticFunction::eval_rational(const Rat& a, long p) const {
  switch (kind_) {
    case FunctionKind::polynomial:
      return poly_eval(coeffs_, a);
    case FunctionKind::reciprocal: {
      certify_on(p);
      Rat d = poly_eval(coeffs_, a);
      Rat r = 1 / d;
      r.canonicalize();
      return r;
    }
    case FunctionKind::mahler:
      throw domain_error("mahler-kind functions have no exact rational evaluation");
  }
  throw domain_error("unreachable");
}

// ---- spectra ----

Rat Spectrum::eigenvalue(long n) const {
  if (n < first_index)
    throw domain_error("spectrum '" + name + "' starts at n = " + std::to_string(first_index));
  return eigen(n);
}

CatalogEntry catalog(const std::string& name) {
  Spectrum s;
  if (name == "integer") {
    s.name = name;
    s.eigen = [](long n) -> Rat { return Rat(n); };
    s.normalization_note = "integer spectrum lambda_n = n";
    return {s, AnalyticFunction::parse_spec("identity")};
  }
  if (name == "barrier") {
    s.name = name;
    s.eigen = [](long n) -> Rat { return Rat(n) * Rat(n); };
    s.normalization_note =
        "infinite rectangular barrier: lambda_n = n^2 (pi^2 hbar^2 / 8 m b^2 dropped)";
    return {s, AnalyticFunction::parse_spec("square")};
  }
  if (name == "oscillator") {
    s.name = name;
    s.eigen = [](long n) -> Rat {
      Rat q(2 * n + 1, 2);
      q.canonicalize();
      return q;
    };
    s.normalization_note = "harmonic oscillator: lambda_n = n + 1/2 (hbar omega dropped)";
    return {s, AnalyticFunction::parse_spec("oscillator")};
  }
  if (name == "hydrogen") {
    s.name = name;
    s.first_index = 1;
    s.eigen = [](long n) -> Rat {
      Rat q(Int(1), Int(n) * Int(n));
      q.canonicalize();
      return q;
    };
    s.normalization_note =
        "hydrogen: lambda_n = 1/n^2 for n >= 1 (sign and m_e e^4 / 2 hbar^2 dropped); "
        "g(a) = a^2 interpolates 1/lambda_n; all zeta evaluations route through g";
    return {s, AnalyticFunction::parse_spec("square").with_reciprocal_convention()};
  }
  throw domain_error("unknown catalog spectrum '" + name +
                     "' (expected integer|barrier|oscillator|hydrogen)");
}

Spectrum spectrum_from_values(std::string name, std::vector<Rat> values) {
  auto vals = std::make_shared<std::vector<Rat>>(std::move(values));
  Spectrum s;
  s.name = std::move(name);
  s.first_index = 0;
  s.count = static_cast<long>(vals->size());
  s.eigen = [vals, nm = s.name](long n) {
    if (n < 0 || static_cast<size_t>(n) >= vals->size())
      throw domain_error("spectrum '" + nm + "' has " + std::to_string(vals->size()) +
                         " eigenvalues; index " + std::to_string(n) + " unavailable");
    return (*vals)[static_cast<size_t>(n)];
  };
  s.normalization_note = "file-based spectrum";
  return s;
}

Spectrum spectrum_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open spectrum file '" + path + "'");
  std::vector<Rat> values;
  std::string line;
  while (std::getline(in, line)) {
    // strip comments and whitespace-only lines
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    values.push_back(parse_rational(line.substr(a, b - a + 1)));
  }
  if (values.empty()) throw domain_error("spectrum file '" + path + "' has no eigenvalues");
  return spectrum_from_values(path, values);
}

// ---- Mahler machinery ----

MahlerExpansion mahler_coeffs(const Spectrum& s, long n_max, long p, long prec) {
  if (n_max < 0) throw domain_error("mahler_coeffs: n_max must be >= 0");
  if (!is_odd_prime(p)) throw domain_error("prime must be an odd prime");
  MahlerExpansion e;
  e.prime = p;
  e.prec = prec;
  // forward-difference table: c_n = (Delta^n lambda)(0)
  std::vector<Rat> row;
  for (long n = 0; n <= n_max; ++n) row.push_back(s.eigenvalue(s.first_index + n));
  for (long n = 0; n <= n_max; ++n) {
    e.coeffs.push_back(row[0]);
    e.norms.push_back(padic_norm(row[0], p));
    e.coeffs_padic.push_back(Padic::from_rational(row[0], p, prec));
    for (size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
  }
  // continuity verdict: |c_n|_p <= p^{-prec} on the final quarter of the range
  long q0 = (3 * (n_max + 1)) / 4;
  bool ok = true;
  for (long n = q0; n <= n_max; ++n) {
    auto v = valuation_rat(e.coeffs[static_cast<size_t>(n)], p);
    if (v && *v < prec) { ok = false; break; }
  }
  e.continuity_ok = ok;
  return e;
}

Rat mahler_eval_exact(const MahlerExpansion& e, long n) {
  if (n < 0) throw domain_error("mahler_eval_exact: n must be >= 0");
  Rat acc(0), b(1);  // b = binom(n, k)
  for (size_t k = 0; k < e.coeffs.size(); ++k) {
    if (k > 0) {
      b *= Rat(n - static_cast<long>(k) + 1, static_cast<long>(k));
      b.canonicalize();
    }
    acc += e.coeffs[k] * b;
  }
  acc.canonicalize();
  return acc;
}

Padic mahler_eval(const MahlerExpansion& e, const Padic& x) {
  if (!e.continuity_ok)
    throw hypothesis_error("spectrum is not interpolable: Mahler coefficient norms do not decay "
                           "(continuity test failed)");
  return to_analytic_function(e).eval(x);
}

AnalyticityVerdict analyticity_test(MahlerExpansion& e, const Rat& r) {
  long p = e.prime;
  if (r <= 0) throw domain_error("analyticity radius must be positive");
  // 0 < r < p^{-1/(p-1)}  <=>  p * num^(p-1) < den^(p-1), exactly in integers
  Int lhs, rhs;
  mpz_pow_ui(lhs.get_mpz_t(), r.get_num().get_mpz_t(), static_cast<unsigned long>(p - 1));
  mpz_pow_ui(rhs.get_mpz_t(), r.get_den().get_mpz_t(), static_cast<unsigned long>(p - 1));
  if (p * lhs >= rhs)
    throw domain_error("radius out of range: need 0 < r < p^(-1/(p-1))");

  const long n_max = static_cast<long>(e.coeffs.size()) - 1;
  // weights w_n = |c_n|_p * r^{-n}, exact rationals
  std::vector<Rat> w;
  Rat rpow(1);
  for (long n = 0; n <= n_max; ++n) {
    Rat wn = e.norms[static_cast<size_t>(n)] / rpow;
    wn.canonicalize();
    w.push_back(wn);
    rpow *= r;
  }
  // rejected if the norms themselves grow without bound over the range
  bool grows = true;
  for (long n = n_max / 2; n < n_max; ++n)
    if (e.norms[static_cast<size_t>(n + 1)] <= e.norms[static_cast<size_t>(n)]) { grows = false; break; }
  if (grows && n_max >= 4 && e.norms.back() > 1) {
    e.analyticity = {r, false, -1};
    return AnalyticityVerdict::rejected;
  }
  // certified: strictly decreasing (where nonzero) on the final quarter and
  // below the precision threshold at the end
  long q0 = (3 * (n_max + 1)) / 4;
  Rat threshold(1, power_of(p, e.prec));
  long witness = -1;
  bool decreasing = true;
  for (long n = q0; n < n_max; ++n) {
    const Rat& a = w[static_cast<size_t>(n)];
    const Rat& b = w[static_cast<size_t>(n + 1)];
    if (b == 0) continue;  // exact zero tail is as small as it gets
    if (b >= a && a != 0) { decreasing = false; break; }
  }
  if (decreasing && (w.back() <= threshold || w.back() == 0)) {
    // witness: first index from which the weights stay below the threshold
    for (long n = n_max; n >= 0; --n) {
      if (w[static_cast<size_t>(n)] > threshold) break;
      witness = n;
    }
    e.analyticity = {r, true, witness};
    return AnalyticityVerdict::certified;
  }
  e.analyticity = {r, false, -1};
  return AnalyticityVerdict::inconclusive;
}

AnalyticFunction to_analytic_function(const MahlerExpansion& e) {
  if (!e.continuity_ok)
    throw hypothesis_error("spectrum is not interpolable: continuity test failed");
  return AnalyticFunction::mahler(e.coeffs, e.prec);
}

}  // namespace pzeta
