#include "covol/interval.hpp"

#include <algorithm>

namespace covol {

namespace {

// floor(x * 2^bits) as an Integer.
Integer scale_floor(const Rational& x, long bits) {
  Integer num = x.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer scale_ceil(const Rational& x, long bits) {
  Integer num = x.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational from_scaled(const Integer& m, long bits) {
  Rational den(1);
  mpz_mul_2exp(den.get_den_mpz_t(), den.get_den_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  Rational r(m);
  r *= den;
  r.canonicalize();
  return r;
}

}  // namespace

Rational round_down(const Rational& x, Precision p) {
  return from_scaled(scale_floor(x, p.bits), p.bits);
}

Rational round_up(const Rational& x, Precision p) {
  return from_scaled(scale_ceil(x, p.bits), p.bits);
}

Interval::Interval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi) {
  if (lo_ > hi_) throw DomainError("interval endpoints out of order");
}

Interval Interval::outward(Precision p) const {
  return Interval(round_down(lo_, p), round_up(hi_, p));
}

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_);
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_);
}

Interval operator*(const Interval& a, const Interval& b) {
  const Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_;
  const Rational p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
  return Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                  std::max(std::max(p1, p2), std::max(p3, p4)));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo_ <= 0 && b.hi_ >= 0) throw DivisionByEnclosedZero();
  Interval inv(1 / b.hi_, 1 / b.lo_);
  return a * inv;
}

Interval Interval::pow(long e) const {
  if (e == 0) return Interval(Rational(1));
  if (e < 0) return Interval(Rational(1)) / pow(-e);
  Rational plo = pow_int(lo_, e), phi = pow_int(hi_, e);
  if (e % 2 == 1) return Interval(plo, phi);
  // even power
  if (lo_ >= 0) return Interval(plo, phi);
  if (hi_ <= 0) return Interval(phi, plo);
  return Interval(Rational(0), std::max(plo, phi));
}

Interval Interval::root(unsigned long q, Precision p) const {
  if (q == 0) throw DomainError("zeroth root");
  if (lo_ < 0) throw DomainError("root of an interval reaching below zero");
  if (q == 1) return *this;
  const long b = p.bits;
  // lower endpoint: floor of the q-th root of floor(lo * 2^(q b)), rescaled
  Integer slo = scale_floor(lo_, b * static_cast<long>(q));
  Integer rlo;
  mpz_root(rlo.get_mpz_t(), slo.get_mpz_t(), q);
  Integer shi = scale_ceil(hi_, b * static_cast<long>(q));
  Integer rhi;
  int exact = mpz_root(rhi.get_mpz_t(), shi.get_mpz_t(), q);
  if (!exact) rhi += 1;
  Rational den = pow_int(Rational(1, 2), b);
  return Interval(Rational(rlo) * den, Rational(rhi) * den);
}

Interval Interval::pow(long num, unsigned long den, Precision p) const {
  if (den == 0) throw DomainError("rational exponent with zero denominator");
  if (num % static_cast<long>(den) == 0) return pow(num / static_cast<long>(den));
  if (lo_ <= 0) throw DomainError("rational-exponent power of a nonpositive enclosure");
  if (num < 0) return Interval(Rational(1)) / pow(-num, den, p);
  return pow(num).root(den, p);
}

std::string Interval::str(int sig_digits) const {
  return "[" + to_sci_string(lo_, sig_digits) + ", " + to_sci_string(hi_, sig_digits) + "]";
}

}  // namespace covol
