#include "sccheck/padic.hpp"

#include <algorithm>

namespace sccheck {

namespace {
// Absolute precision assigned to exact zeros; large enough to dominate any
// precision reachable through arithmetic in this artifact.
constexpr int kExactZeroAbs = 1 << 24;

int cap_abs(long a) { return static_cast<int>(std::min<long>(a, kExactZeroAbs)); }

void require_prime_match(const CappedPadic& a, const CappedPadic& b) {
  if (a.prime() != b.prime() || a.prime() == 0)
    throw DomainError("mixed or unset primes in p-adic arithmetic");
}
}  // namespace

BigInt prime_power(uint32_t p, int e) {
  if (e < 0) throw DomainError("negative prime power exponent");
  BigInt m;
  mpz_ui_pow_ui(m.get_mpz_t(), p, static_cast<unsigned long>(e));
  return m;
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

int rational_valuation(const BigRational& r, uint32_t p) {
  if (r == 0) throw DomainError("valuation of zero");
  BigInt pz(p), tmp;
  int vn = static_cast<int>(mpz_remove(tmp.get_mpz_t(), r.get_num().get_mpz_t(), pz.get_mpz_t()));
  int vd = static_cast<int>(mpz_remove(tmp.get_mpz_t(), r.get_den().get_mpz_t(), pz.get_mpz_t()));
  return vn - vd;
}

CappedPadic CappedPadic::from_integer(const BigInt& x, uint32_t p, int e) {
  if (p < 2) throw DomainError("prime must be >= 2");
  if (e < 1) throw DomainError("precision must be >= 1");
  CappedPadic r;
  r.p_ = p;
  if (x == 0) {
    r.zero_ = true;
    r.zero_abs_ = kExactZeroAbs;
    return r;
  }
  BigInt pz(p), unit;
  r.v_ = static_cast<int>(mpz_remove(unit.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
  r.e_ = e;
  r.u_ = unit % prime_power(p, e);
  if (r.u_ < 0) r.u_ += prime_power(p, e);
  return r;
}

CappedPadic CappedPadic::from_integer(long x, uint32_t p, int e) {
  return from_integer(BigInt(x), p, e);
}

CappedPadic CappedPadic::from_residue(const BigInt& r, uint32_t p, int abs) {
  if (p < 2) throw DomainError("prime must be >= 2");
  if (abs < 1) throw DomainError("absolute precision must be >= 1");
  BigInt m = prime_power(p, abs);
  BigInt x = r % m;
  if (x < 0) x += m;
  CappedPadic out;
  out.p_ = p;
  if (x == 0) {
    out.zero_ = true;
    out.zero_abs_ = abs;
    return out;
  }
  BigInt pz(p), unit;
  out.v_ = static_cast<int>(mpz_remove(unit.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
  out.e_ = abs - out.v_;  // x != 0 and x < p^abs, so v < abs and e >= 1
  out.u_ = unit % prime_power(p, out.e_);
  return out;
}

CappedPadic CappedPadic::from_rational(const BigRational& r, uint32_t p, int e) {
  if (r == 0) return exact_zero(p);
  if (e < 1) throw DomainError("precision must be >= 1");
  int v = rational_valuation(r, p);
  if (v < 0) throw DomainError("rational with negative p-valuation");
  BigInt pz(p), num, den;
  mpz_remove(num.get_mpz_t(), r.get_num().get_mpz_t(), pz.get_mpz_t());
  mpz_remove(den.get_mpz_t(), r.get_den().get_mpz_t(), pz.get_mpz_t());
  BigInt m = prime_power(p, e);
  BigInt dinv;
  if (!mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()))
    throw DomainError("denominator not a unit");
  CappedPadic out;
  out.p_ = p;
  out.v_ = v;
  out.e_ = e;
  out.u_ = (num % m) * dinv % m;
  if (out.u_ < 0) out.u_ += m;
  return out;
}

CappedPadic CappedPadic::exact_zero(uint32_t p) {
  CappedPadic r;
  r.p_ = p;
  r.zero_ = true;
  r.zero_abs_ = kExactZeroAbs;
  return r;
}

CappedPadic CappedPadic::one(uint32_t p, int e) { return from_integer(1, p, e); }

int CappedPadic::valuation() const {
  if (zero_) throw DomainError("valuation of zero-at-precision value");
  return v_;
}

int CappedPadic::rel_prec() const {
  if (zero_) throw DomainError("relative precision of zero value");
  return e_;
}

int CappedPadic::abs_prec() const { return zero_ ? zero_abs_ : v_ + e_; }

const BigInt& CappedPadic::unit() const {
  if (zero_) throw DomainError("unit of zero value");
  return u_;
}

BigInt CappedPadic::residue_mod(int k) const {
  if (zero_) return BigInt(0);
  if (k <= v_) return BigInt(0);
  return prime_power(p_, v_) * (u_ % prime_power(p_, k - v_));
}

BigInt CappedPadic::residue(int k) const {
  if (k < 0) throw DomainError("negative modulus exponent");
  if (abs_prec() < k) throw PrecisionError("residue requested beyond carried precision");
  return residue_mod(k);
}

CappedPadic CappedPadic::operator-() const {
  if (zero_) return *this;
  CappedPadic r = *this;
  r.u_ = prime_power(p_, e_) - u_;
  return r;
}

CappedPadic operator+(const CappedPadic& a, const CappedPadic& b) {
  require_prime_match(a, b);
  if (a.zero_ && a.zero_abs_ == kExactZeroAbs) return b;
  if (b.zero_ && b.zero_abs_ == kExactZeroAbs) return a;
  int abs = std::min(a.abs_prec(), b.abs_prec());
  return CappedPadic::from_residue(a.residue_mod(abs) + b.residue_mod(abs), a.p_, abs);
}

CappedPadic operator-(const CappedPadic& a, const CappedPadic& b) { return a + (-b); }

CappedPadic operator*(const CappedPadic& a, const CappedPadic& b) {
  require_prime_match(a, b);
  if (a.zero_ || b.zero_) {
    if (a.zero_ && a.zero_abs_ == kExactZeroAbs) return a;
    if (b.zero_ && b.zero_abs_ == kExactZeroAbs) return b;
    // 0 (mod p^A) times a value of valuation v is 0 (mod p^{A+v})
    long abs = 0;
    if (a.zero_ && b.zero_)
      abs = static_cast<long>(a.zero_abs_) + b.zero_abs_;
    else if (a.zero_)
      abs = static_cast<long>(a.zero_abs_) + b.v_;
    else
      abs = static_cast<long>(b.zero_abs_) + a.v_;
    CappedPadic r;
    r.p_ = a.p_;
    r.zero_ = true;
    r.zero_abs_ = cap_abs(abs);
    return r;
  }
  CappedPadic r;
  r.p_ = a.p_;
  r.v_ = a.v_ + b.v_;
  r.e_ = std::min(a.e_, b.e_);
  BigInt m = prime_power(a.p_, r.e_);
  r.u_ = (a.u_ % m) * (b.u_ % m) % m;
  return r;
}

CappedPadic CappedPadic::invert() const {
  if (zero_) throw DomainError("inverting zero");
  if (v_ != 0) throw DomainError("inverting a non-unit (valuation > 0)");
  CappedPadic r = *this;
  BigInt m = prime_power(p_, e_);
  if (!mpz_invert(r.u_.get_mpz_t(), u_.get_mpz_t(), m.get_mpz_t()))
    throw DomainError("unit not invertible");  // unreachable for prime p
  return r;
}

CappedPadic CappedPadic::pow(unsigned long n) const {
  if (p_ == 0) throw DomainError("pow on unset value");
  if (n == 0) return one(p_, zero_ ? 1 : e_);
  if (zero_) {
    CappedPadic r = *this;
    r.zero_abs_ = cap_abs(static_cast<long>(zero_abs_) * static_cast<long>(std::min<unsigned long>(n, 64)));
    return r;
  }
  CappedPadic base = *this, acc = one(p_, e_);
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return acc;
}

CappedPadic CappedPadic::div_exact_p(int t) const {
  if (t < 0) throw DomainError("negative division exponent");
  if (t == 0) return *this;
  if (zero_) {
    if (zero_abs_ == kExactZeroAbs) return *this;
    if (zero_abs_ < t) throw DomainError("value not provably divisible by p^t");
    if (zero_abs_ == t) throw PrecisionError("division consumed all precision");
    CappedPadic r = *this;
    r.zero_abs_ = zero_abs_ - t;
    return r;
  }
  if (v_ < t) throw DomainError("value not divisible by p^t (valuation too small)");
  CappedPadic r = *this;
  r.v_ = v_ - t;
  return r;
}

bool congruent(const CappedPadic& a, const CappedPadic& b, int k) {
  require_prime_match(a, b);
  if (k < 0) throw DomainError("negative modulus exponent");
  if (k == 0) return true;
  if (a.abs_prec() < k || b.abs_prec() < k)
    throw PrecisionError("operands do not carry precision p^" + std::to_string(k));
  CappedPadic d = a - b;
  if (d.zero_) return d.zero_abs_ >= k;  // always true given the guard above
  return d.v_ >= k;
}

std::string CappedPadic::str() const {
  if (p_ == 0) return "<unset>";
  if (zero_) {
    if (zero_abs_ == kExactZeroAbs) return "0 (exact)";
    return "0 (mod p^" + std::to_string(zero_abs_) + ")";
  }
  return "p^" + std::to_string(v_) + " * " + u_.get_str() + " (rel prec " +
         std::to_string(e_) + ")";
}

}  // namespace sccheck
