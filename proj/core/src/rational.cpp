#include "covol/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace covol {

Rational pow_int(const Rational& a, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (a == 0) throw std::domain_error("pow_int: 0 to a negative power");
    return 1 / pow_int(a, -e);
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), a.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), a.get_den_mpz_t(), static_cast<unsigned long>(e));
  r.canonicalize();
  return r;
}

Integer pow_int(const Integer& a, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

namespace {

struct DecimalParts {
  std::string digits;   // mantissa digits without the dot
  bool negative = false;
  long frac_len = 0;    // digits after the dot
  long exponent = 0;    // explicit e-exponent
};

DecimalParts split_decimal(std::string_view s) {
  DecimalParts p;
  size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    p.negative = (s[i] == '-');
    ++i;
  }
  bool seen_dot = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("malformed decimal");
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      p.digits.push_back(c);
      if (seen_dot) ++p.frac_len;
      seen_digit = true;
    } else if (c == 'e' || c == 'E') {
      ++i;
      if (i >= s.size()) throw std::invalid_argument("malformed exponent");
      p.exponent = std::strtol(std::string(s.substr(i)).c_str(), nullptr, 10);
      break;
    } else {
      throw std::invalid_argument("malformed decimal: " + std::string(s));
    }
  }
  if (!seen_digit) throw std::invalid_argument("empty decimal: " + std::string(s));
  return p;
}

}  // namespace

Rational rational_from_decimal(std::string_view s) {
  DecimalParts p = split_decimal(s);
  // base must be explicit: leading zeros would otherwise select octal
  Integer mant(p.digits.empty() ? "0" : p.digits, 10);
  Rational r(mant);
  long ten_exp = p.exponent - p.frac_len;
  Rational scale = pow_int(Rational(10), ten_exp);
  r *= scale;
  if (p.negative) r = -r;
  return r;
}

Rational printed_ulp(std::string_view s) {
  DecimalParts p = split_decimal(s);
  return pow_int(Rational(10), p.exponent - p.frac_len);
}

std::string to_sci_string(const Rational& x, int sig_digits) {
  if (x == 0) return "0";
  Rational a = abs(x);
  // decimal exponent d with 10^d <= a < 10^{d+1}
  long d = 0;
  Rational t = a;
  while (t >= 10) { t /= 10; ++d; }
  while (t < 1) { t *= 10; --d; }
  // round mantissa digits
  Integer scaled = floor_rational(a * pow_int(Rational(10), sig_digits - 1 - d) + Rational(1, 2));
  std::string digits = scaled.get_str();
  if (static_cast<int>(digits.size()) > sig_digits) {  // rounding carried over
    digits.pop_back();
    ++d;
  }
  std::string out;
  if (x < 0) out.push_back('-');
  out.push_back(digits[0]);
  if (digits.size() > 1) {
    out.push_back('.');
    out += digits.substr(1);
  }
  if (d != 0) out += "e" + std::to_string(d);
  return out;
}

std::string to_exact_string(const Rational& x) {
  Integer den = x.get_den();
  // strip factors of 2 and 5
  Integer d = den;
  long twos = static_cast<long>(mpz_scan1(d.get_mpz_t(), 0));
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), twos);
  long fives = 0;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
    mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 5);
    ++fives;
  }
  if (d != 1) {
    return x.get_num().get_str() + "/" + den.get_str();
  }
  long k = std::max(twos, fives);  // x * 10^k is integral
  Integer scaled = x.get_num() * pow_int(Integer(10), static_cast<unsigned long>(k)) / den;
  bool neg = scaled < 0;
  std::string digits = Integer(abs(scaled)).get_str();
  while (static_cast<long>(digits.size()) <= k) digits.insert(digits.begin(), '0');
  std::string out = neg ? "-" : "";
  out += digits.substr(0, digits.size() - k);
  if (k > 0) {
    std::string frac = digits.substr(digits.size() - k);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  }
  return out;
}

Integer floor_rational(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

}  // namespace covol
