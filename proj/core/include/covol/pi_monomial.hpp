#pragma once

#include "covol/interval.hpp"

namespace covol {

// Exact value coeff * pi^pi_exp. Closed under multiplication and division;
// conversion to an Interval is the only approximate step.
struct PiMonomial {
  Rational coeff{1};
  long pi_exp = 0;

  PiMonomial() = default;
  PiMonomial(Rational c, long e) : coeff(std::move(c)), pi_exp(e) {}

  PiMonomial operator*(const PiMonomial& o) const {
    return {coeff * o.coeff, pi_exp + o.pi_exp};
  }
  PiMonomial operator/(const PiMonomial& o) const {
    if (o.coeff == 0) throw DomainError("division by zero PiMonomial");
    return {coeff / o.coeff, pi_exp - o.pi_exp};
  }
  PiMonomial pow(long e) const { return {pow_int(coeff, e), pi_exp * e}; }

  Interval to_interval(Precision p) const;

  bool operator==(const PiMonomial& o) const = default;
};

// V_n = prod_{i=1}^{n-1} i! / (2 pi)^{i+1}, exactly, for n >= 2.
PiMonomial v_n(long n);

}  // namespace covol
