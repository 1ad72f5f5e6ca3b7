#include "covol/pi_monomial.hpp"

#include "covol/transcendental.hpp"

namespace covol {

Interval PiMonomial::to_interval(Precision p) const {
  Interval result(coeff);
  if (pi_exp != 0) {
    // Binary exponentiation with outward rounding after each multiply keeps
    // endpoint sizes near p bits; an exact power of the pi enclosure would
    // carry |pi_exp| * p bits through every later operation. The base
    // exceeds 1, so the absolute grid error stays relatively negligible.
    long e = pi_exp < 0 ? -pi_exp : pi_exp;
    Interval acc{Rational(1)};
    Interval base = enclose_pi(p);
    while (e > 0) {
      if (e & 1) acc = (acc * base).outward(p);
      e >>= 1;
      if (e) base = (base * base).outward(p);
    }
    result = (pi_exp < 0) ? result / acc : result * acc;
  }
  return result.outward(p);
}

PiMonomial v_n(long n) {
  if (n < 2) throw DomainError("v_n requires n >= 2");
  Rational coeff(1);
  long exp_two = 0;
  for (long i = 1; i <= n - 1; ++i) {
    coeff *= Rational(factorial(static_cast<unsigned long>(i)));
    exp_two += i + 1;
  }
  coeff /= Rational(pow_int(Integer(2), static_cast<unsigned long>(exp_two)));
  return {coeff, -exp_two};
}

}  // namespace covol
