#pragma once

#include <stdexcept>
#include <string>

#include "covol/rational.hpp"

namespace covol {

// Working precision for directed rounding, as a dyadic grid 2^-bits.
struct Precision {
  long bits = 128;
};

struct DivisionByEnclosedZero : std::domain_error {
  DivisionByEnclosedZero() : std::domain_error("interval divisor encloses zero") {}
};

struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Closed interval with exact rational endpoints. Every operation returns an
// enclosure of the exact image; +,-,*,/ and integer powers are exact, roots
// and transcendentals round outward at a requested precision.
class Interval {
 public:
  Interval() : lo_(0), hi_(0) {}
  explicit Interval(const Rational& v) : lo_(v), hi_(v) {}
  explicit Interval(long v) : lo_(v), hi_(v) {}
  Interval(const Rational& lo, const Rational& hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / 2; }

  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Interval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool strictly_positive() const { return lo_ > 0; }

  // Outward rounding of both endpoints to the dyadic grid 2^-p.bits.
  Interval outward(Precision p) const;

  Interval operator-() const { return Interval(-hi_, -lo_); }
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);

  // a^e, exact; even powers of sign-straddling intervals handled.
  Interval pow(long e) const;

  // a^(num/den) for strictly positive a, outward-rounded at p.
  Interval pow(long num, unsigned long den, Precision p) const;

  // q-th root for nonnegative a, outward-rounded at p.
  Interval root(unsigned long q, Precision p) const;

  std::string str(int sig_digits = 10) const;

 private:
  Rational lo_, hi_;
};

inline Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

// a < b certainly / a <= b certainly.
inline bool certainly_less(const Interval& a, const Interval& b) {
  return a.hi() < b.lo();
}
inline bool certainly_leq(const Interval& a, const Interval& b) {
  return a.hi() <= b.lo();
}

// Directed dyadic rounding of a single rational.
Rational round_down(const Rational& x, Precision p);
Rational round_up(const Rational& x, Precision p);

}  // namespace covol
