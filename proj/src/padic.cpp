#include "pzeta/padic.hpp"

#include <cctype>
#include <sstream>

namespace pzeta {

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  mpz_class z(p);
  return mpz_probab_prime_p(z.get_mpz_t(), 32) != 0;
}

long valuation_int(const Int& n, long p) {
  if (n == 0) throw domain_error("valuation of zero is undefined");
  Int rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), Int(p).get_mpz_t()));
}

std::optional<long> valuation_rat(const Rat& q, long p) {
  if (q == 0) return std::nullopt;
  long vn = (q.get_num() == 0) ? 0 : valuation_int(q.get_num(), p);
  long vd = (q.get_den() == 1) ? 0 : valuation_int(q.get_den(), p);
  return vn - vd;
}

Int power_of(long p, long k) {
  if (k < 0) throw domain_error("power_of: negative exponent");
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  return r;
}

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw parse_error("empty rational", 0);
  size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Rat q(Int(text.c_str()));
      return q;
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw parse_error("zero denominator", slash + 1);
    Rat q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw parse_error("malformed rational '" + text + "'", 0);
  }
}

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat padic_norm(const Rat& q, long p) {
  auto v = valuation_rat(q, p);
  if (!v) return Rat(0);
  Rat r;
  if (*v >= 0)
    r = Rat(1, power_of(p, *v));
  else
    r = Rat(power_of(p, -*v));
  r.canonicalize();
  return r;
}

// ---- construction ----

static void require_params(long p, long prec) {
  if (!is_odd_prime(p)) throw domain_error("prime must be an odd prime, got " + std::to_string(p));
  if (prec < 1) throw domain_error("precision must be >= 1, got " + std::to_string(prec));
}

Padic Padic::zero(long p, long abs_prec) {
  if (!is_odd_prime(p)) throw domain_error("prime must be an odd prime, got " + std::to_string(p));
  Padic x;
  x.p_ = p;
  x.zero_ = true;
  x.absprec_ = abs_prec;
  return x;
}

Padic Padic::from_unit(const Int& unit, long v, long p, long prec) {
  require_params(p, prec);
  Int m = power_of(p, prec);
  Int u = unit % m;
  if (u < 0) u += m;
  if (u == 0 || u % p == 0)
    throw domain_error("from_unit: representative is not a p-adic unit");
  Padic x;
  x.p_ = p;
  x.zero_ = false;
  x.v_ = v;
  x.prec_ = prec;
  x.unit_ = u;
  return x;
}

Padic Padic::from_residue(const Int& value, long p, long abs_prec) {
  if (!is_odd_prime(p)) throw domain_error("prime must be an odd prime, got " + std::to_string(p));
  Int m = power_of(p, std::max<long>(abs_prec, 0));
  Int r = (abs_prec <= 0) ? Int(0) : Int(value % m);
  if (r < 0) r += m;
  if (r == 0) return zero(p, abs_prec);
  Int u;
  long v = static_cast<long>(mpz_remove(u.get_mpz_t(), r.get_mpz_t(), Int(p).get_mpz_t()));
  long n = abs_prec - v;
  if (n <= 0) return zero(p, abs_prec);
  return from_unit(u, v, p, n);
}

Padic Padic::from_rational(const Rat& q, long p, long prec) {
  require_params(p, prec);
  if (q == 0) return zero(p, prec);
  long v = *valuation_rat(q, p);
  // strip p-powers, then reduce the remaining unit num/den mod p^prec
  Int num = q.get_num(), den = q.get_den(), tmp;
  if (num != 0) {
    long vn = valuation_int(num, p);
    if (vn > 0) { mpz_remove(tmp.get_mpz_t(), num.get_mpz_t(), Int(p).get_mpz_t()); num = tmp; }
  }
  long vd = (den == 1) ? 0 : valuation_int(den, p);
  if (vd > 0) { mpz_remove(tmp.get_mpz_t(), den.get_mpz_t(), Int(p).get_mpz_t()); den = tmp; }
  Int m = power_of(p, prec);
  Int dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
    throw domain_error("from_rational: denominator not invertible");  // cannot happen after stripping
  Int u = num * dinv % m;
  if (u < 0) u += m;
  return from_unit(u, v, p, prec);
}

Padic Padic::from_integer(long n, long p, long prec) {
  return from_rational(Rat(n), p, prec);
}

// ---- accessors ----

long Padic::valuation() const {
  if (zero_) throw domain_error("valuation of a value indistinguishable from 0 (O(p^" +
                                std::to_string(absprec_) + ")) is undefined");
  return v_;
}

const Int& Padic::unit() const {
  if (zero_) throw domain_error("unit part of zero is undefined");
  return unit_;
}

Rat Padic::norm() const {
  if (zero_) return Rat(0);
  Rat r = (v_ >= 0) ? Rat(1, power_of(p_, v_)) : Rat(power_of(p_, -v_));
  r.canonicalize();
  return r;
}

std::vector<long> Padic::digits() const {
  std::vector<long> d;
  if (zero_) return d;
  Int u = unit_;
  for (long i = 0; i < prec_; ++i) {
    Int q, r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(p_));
    d.push_back(r.get_si());
    u = q;
  }
  return d;
}

// ---- arithmetic ----

static void require_same_prime(const Padic& x, const Padic& y) {
  if (x.prime() != y.prime())
    throw domain_error("mixed primes: " + std::to_string(x.prime()) + " vs " +
                       std::to_string(y.prime()));
}

Padic operator+(const Padic& x, const Padic& y) {
  require_same_prime(x, y);
  long p = x.prime();
  long m = std::min(x.abs_precision(), y.abs_precision());
  if (x.is_zero() && y.is_zero()) return Padic::zero(p, m);
  if (x.is_zero()) return y.with_abs_precision(m);
  if (y.is_zero()) return x.with_abs_precision(m);
  long w = std::min(x.valuation(), y.valuation());
  long k = m - w;  // digits of the scaled integer sum
  if (k <= 0) return Padic::zero(p, m);
  Int mod = power_of(p, k);
  Int s = (x.unit() * power_of(p, x.valuation() - w) +
           y.unit() * power_of(p, y.valuation() - w)) % mod;
  Padic r = Padic::from_residue(s, p, k);
  if (r.is_zero()) return Padic::zero(p, m);
  return Padic::from_unit(r.unit(), r.valuation() + w, p, r.precision());
}

Padic Padic::operator-() const {
  if (zero_) return *this;
  Int m = power_of(p_, prec_);
  return from_unit(m - unit_, v_, p_, prec_);
}

Padic operator-(const Padic& x, const Padic& y) { return x + (-y); }

Padic operator*(const Padic& x, const Padic& y) {
  require_same_prime(x, y);
  long p = x.prime();
  if (x.is_zero() || y.is_zero()) {
    // |xy|_p <= p^{-(Mx + vy)} etc.; for two zeros <= p^{-(Mx+My)}
    long mx = x.is_zero() ? x.abs_precision() : x.valuation();
    long my = y.is_zero() ? y.abs_precision() : y.valuation();
    return Padic::zero(p, mx + my);
  }
  long n = std::min(x.precision(), y.precision());
  Int m = power_of(p, n);
  Int u = x.unit() * y.unit() % m;
  return Padic::from_unit(u, x.valuation() + y.valuation(), p, n);
}

Padic Padic::inv() const {
  if (zero_)
    throw precision_error("cannot invert a value indistinguishable from 0 at O(p^" +
                          std::to_string(absprec_) +
                          "); more than " + std::to_string(absprec_) + " digits required");
  Int m = power_of(p_, prec_);
  Int u;
  mpz_invert(u.get_mpz_t(), unit_.get_mpz_t(), m.get_mpz_t());
  return from_unit(u, -v_, p_, prec_);
}

Padic operator/(const Padic& x, const Padic& y) { return x * y.inv(); }

Padic Padic::pow_int(long k) const {
  if (k == 0) {
    long n = zero_ ? std::max<long>(absprec_, 1) : prec_;
    return from_unit(Int(1), 0, p_, n);
  }
  if (zero_) {
    if (k < 0) throw precision_error("cannot raise a value indistinguishable from 0 to a negative power");
    return zero(p_, absprec_ * k);
  }
  Padic base = (k < 0) ? inv() : *this;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  Int m = power_of(p_, base.prec_);
  Int u;
  mpz_powm_ui(u.get_mpz_t(), base.unit_.get_mpz_t(), e, m.get_mpz_t());
  return from_unit(u, base.v_ * static_cast<long>(e), p_, base.prec_);
}

Padic Padic::shift(long k) const {
  Padic r = *this;
  if (zero_)
    r.absprec_ += k;
  else
    r.v_ += k;
  return r;
}

Padic Padic::with_abs_precision(long m) const {
  if (m >= abs_precision()) return *this;
  if (zero_) return zero(p_, m);
  long n = m - v_;
  if (n <= 0) return zero(p_, m);
  Int u = unit_ % power_of(p_, n);
  return from_unit(u, v_, p_, n);
}

Padic Padic::div_exact_int(const Int& k) const {
  if (k == 0) throw domain_error("division by exact zero");
  if (zero_) {
    long vk = valuation_int(k, p_);
    return zero(p_, absprec_ - vk);
  }
  Int u;
  long vk = static_cast<long>(mpz_remove(u.get_mpz_t(), k.get_mpz_t(), Int(p_).get_mpz_t()));
  Int m = power_of(p_, prec_);
  Int uinv;
  mpz_invert(uinv.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t());
  Int nu = unit_ * uinv % m;
  if (nu < 0) nu += m;
  return from_unit(nu, v_ - vk, p_, prec_);
}

Int Padic::residue(long k) const {
  if (k < 0) throw domain_error("residue: negative modulus exponent");
  if (k > abs_precision())
    throw precision_error("residue mod p^" + std::to_string(k) + " requested but value known only to O(p^" +
                          std::to_string(abs_precision()) + ")");
  if (zero_) return Int(0);
  if (v_ < 0) throw domain_error("residue of a value with negative valuation");
  if (v_ >= k) return Int(0);
  Int r = unit_ * power_of(p_, v_) % power_of(p_, k);
  return r;
}

long agreement(const Padic& x, const Padic& y) {
  Padic d = x - y;
  if (d.is_zero()) return d.abs_precision();
  return d.valuation();
}

// ---- formatting ----

std::string Padic::str() const {
  std::ostringstream os;
  long p = p_;
  if (zero_) {
    os << "O(" << p << "^" << absprec_ << ")";
    return os.str();
  }
  os << p << "^" << v_ << "*(";
  auto d = digits();
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) os << " + ";
    os << d[i];
    if (i == 1) os << "*" << p;
    if (i > 1) os << "*" << p << "^" << i;
  }
  os << ") + O(" << p << "^" << (v_ + prec_) << ")";
  return os.str();
}

std::string Padic::str_compact() const {
  std::ostringstream os;
  if (zero_) {
    os << "O(" << p_ << "^" << absprec_ << ")";
    return os.str();
  }
  if (v_ != 0) os << p_ << "^" << v_ << "*";
  os << unit_.get_str() << " + O(" << p_ << "^" << (v_ + prec_) << ")";
  return os.str();
}

std::string Padic::str_colon() const {
  std::ostringstream os;
  if (zero_) {
    os << p_ << ":" << absprec_ << ":";
    return os.str();
  }
  os << p_ << ":" << v_ << ":";
  auto d = digits();
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) os << ",";
    os << d[i];
  }
  return os.str();
}

// ---- parsing ----

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) { ++i; return true; }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) throw parse_error(std::string("expected '") + c + "' (" + what + ")", i);
  }
  bool eat_str(const std::string& t) {
    skip_ws();
    if (s.compare(i, t.size(), t) == 0) { i += t.size(); return true; }
    return false;
  }
  long integer() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    size_t dstart = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == dstart) throw parse_error("expected an integer", start);
    return std::stol(s.substr(start, i - start));
  }
  Int big_integer() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    size_t dstart = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == dstart) throw parse_error("expected an integer", start);
    return Int(s.substr(start, i - start));
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
};

// "O(p^M)"
long parse_big_oh(Cursor& c, long p) {
  c.expect('(', "O(...)");
  long pp = c.integer();
  if (pp != p) throw parse_error("prime mismatch in O(...): expected " + std::to_string(p), c.i);
  c.expect('^', "O(p^M)");
  long m = c.integer();
  c.expect(')', "O(p^M)");
  return m;
}

}  // namespace

Padic Padic::parse(const std::string& text, long p, long prec) {
  require_params(p, prec);
  Cursor c{text};
  c.skip_ws();

  // colon form p:v:d0,d1,...
  if (text.find(':') != std::string::npos) {
    long pp = c.integer();
    if (pp != p) throw parse_error("prime mismatch: literal base " + std::to_string(pp), 0);
    c.expect(':', "colon form");
    long v = c.integer();
    c.expect(':', "colon form");
    if (c.done()) return zero(p, v);  // "p:M:"
    std::vector<long> d;
    d.push_back(c.integer());
    while (c.eat(',')) d.push_back(c.integer());
    if (!c.done()) throw parse_error("trailing characters", c.i);
    Int u(0);
    for (size_t i = d.size(); i-- > 0;) {
      if (d[i] < 0 || d[i] >= p) throw parse_error("digit out of range", 0);
      u = u * p + d[i];
    }
    return from_residue(u, p, static_cast<long>(d.size())).shift(v);
  }

  // zero literal "O(p^M)"
  if (c.eat_str("O")) {
    long m = parse_big_oh(c, p);
    if (!c.done()) throw parse_error("trailing characters", c.i);
    return zero(p, m);
  }

  // bare rational "n" or "n/d" (no O-term, no caret): embed at requested precision
  if (text.find('^') == std::string::npos && text.find("O(") == std::string::npos) {
    return from_rational(parse_rational(text), p, prec);
  }

  // "p^v*..." or "u + O(p^M)"
  long v = 0;
  bool has_vfactor = false;
  {
    Cursor probe = c;
    long maybe_p = 0;
    try {
      maybe_p = probe.integer();
    } catch (const parse_error&) {
      maybe_p = -1;
    }
    if (maybe_p == p && probe.eat('^')) {
      long vv = probe.integer();
      probe.expect('*', "p^v*");
      v = vv;
      has_vfactor = true;
      c.i = probe.i;
    }
  }

  Int u(0);
  if (c.eat('(')) {
    // digit sum d0 + d1*p + d2*p^2 + ...
    std::vector<long> d;
    d.push_back(c.integer());
    while (true) {
      c.skip_ws();
      if (c.eat(')')) break;
      c.expect('+', "digit sum");
      long digit = c.integer();
      c.expect('*', "digit term");
      long pp = c.integer();
      if (pp != p) throw parse_error("prime mismatch in digit term", c.i);
      long e = 1;
      if (c.eat('^')) e = c.integer();
      if (e != static_cast<long>(d.size()))
        throw parse_error("digit exponents must be consecutive", c.i);
      d.push_back(digit);
    }
    for (size_t i = d.size(); i-- > 0;) {
      if (d[i] < 0 || d[i] >= p) throw parse_error("digit out of range", 0);
      u = u * p + d[i];
    }
  } else {
    u = c.big_integer();
  }
  c.expect('+', "before O-term");
  if (!c.eat_str("O")) throw parse_error("expected O(p^M)", c.i);
  long m = parse_big_oh(c, p);
  if (!c.done()) throw parse_error("trailing characters", c.i);
  // value = p^v * u known to O(p^m)
  (void)has_vfactor;
  long digits_known = m - v;
  if (digits_known <= 0) return zero(p, m);
  Padic r = from_residue(u, p, digits_known);
  if (r.is_zero()) return zero(p, m);
  return from_unit(r.unit(), r.valuation() + v, p, r.precision());
}

}  // namespace pzeta
