#include "covol/transcendental.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace covol {

namespace {

Rational mpfr_to_rational(const mpfr_t x) {
  mpq_t q;
  mpq_init(q);
  mpfr_get_q(q, x);
  Rational r(q);
  mpq_clear(q);
  return r;
}

long working_prec(Precision p) { return std::max(64L, p.bits + 16); }

// Applies a monotonically increasing mpfr function to both endpoints with
// directed rounding; argument conversion is itself directed.
Interval monotone_increasing(const Interval& x, Precision p,
                             int (*fn)(mpfr_t, const mpfr_t, mpfr_rnd_t)) {
  const long wp = working_prec(p);
  mpfr_t a, r;
  mpfr_init2(a, wp);
  mpfr_init2(r, wp);

  mpfr_set_q(a, x.lo().get_mpq_t(), MPFR_RNDD);
  fn(r, a, MPFR_RNDD);
  Rational lo = mpfr_to_rational(r);

  mpfr_set_q(a, x.hi().get_mpq_t(), MPFR_RNDU);
  fn(r, a, MPFR_RNDU);
  Rational hi = mpfr_to_rational(r);

  mpfr_clear(a);
  mpfr_clear(r);
  return Interval(lo, hi);
}

std::mutex cache_mutex;

}  // namespace

Interval enclose_pi(Precision p) {
  static std::map<long, Interval> cache;
  const long wp = working_prec(p);
  {
    std::scoped_lock lk(cache_mutex);
    auto it = cache.find(wp);
    if (it != cache.end()) return it->second;
  }
  mpfr_t x;
  mpfr_init2(x, wp);
  mpfr_const_pi(x, MPFR_RNDD);
  Rational lo = mpfr_to_rational(x);
  mpfr_const_pi(x, MPFR_RNDU);
  Rational hi = mpfr_to_rational(x);
  mpfr_clear(x);
  Interval result(lo, hi);
  std::scoped_lock lk(cache_mutex);
  cache.emplace(wp, result);
  return result;
}

Interval enclose_exp(const Interval& x, Precision p) {
  return monotone_increasing(x, p, mpfr_exp);
}

Interval enclose_ln(const Interval& x, Precision p) {
  if (x.lo() <= 0) throw DomainError("ln of a nonpositive enclosure");
  return monotone_increasing(x, p, mpfr_log);
}

Interval zeta_enclosure(long s, Precision p) {
  if (s < 2) throw DomainError("zeta_enclosure requires s >= 2");
  static std::map<std::pair<long, long>, Interval> cache;
  {
    std::scoped_lock lk(cache_mutex);
    auto it = cache.find({s, p.bits});
    if (it != cache.end()) return it->second;
  }

  // Correctly-rounded evaluation with directed rounding brackets the true
  // value, like the other library-backed transcendentals here. A partial sum
  // with an explicit tail term would also be sound but needs a term count
  // exponential in the precision for s = 2.
  const long wp = working_prec(p);
  mpfr_t r;
  mpfr_init2(r, wp);
  mpfr_zeta_ui(r, static_cast<unsigned long>(s), MPFR_RNDD);
  Rational lo = mpfr_to_rational(r);
  mpfr_zeta_ui(r, static_cast<unsigned long>(s), MPFR_RNDU);
  Rational hi = mpfr_to_rational(r);
  mpfr_clear(r);

  Interval result(lo, hi);
  std::scoped_lock lk(cache_mutex);
  cache.emplace(std::make_pair(s, p.bits), result);
  return result;
}

Interval zeta_product_bound(int n_max, Precision p) {
  if (n_max != kInfiniteProduct && n_max < 2)
    throw DomainError("zeta_product_bound requires n_max >= 2 or the infinite sentinel");

  const int finite_top = (n_max == kInfiniteProduct) ? 8 : n_max;
  Interval prod(Rational(1));
  for (int i = 2; i <= finite_top; ++i) {
    prod = (prod * zeta_enclosure(i, p)).outward(p);
  }
  if (n_max != kInfiniteProduct) return prod;

  // prod_{i>=9} zeta(i) <= exp(2 zeta(9) - 2); the tail factors all exceed 1,
  // so the finite product is a valid lower endpoint.
  Interval z9 = zeta_enclosure(9, p);
  Interval tail_log = Interval(Rational(2)) * z9 - Interval(Rational(2));
  Interval tail = enclose_exp(tail_log, p);
  Interval upper = prod * tail;
  return Interval(prod.lo(), upper.hi());
}

}  // namespace covol
