#include "covol/volume.hpp"

#include "covol/transcendental.hpp"

namespace covol {

long s_qs(long n, Form form) {
  if (n < 3) throw DomainError("s_qs requires n >= 3");
  if (form == Form::inner) return 0;
  const long r = n - 1;
  return (r % 2 == 0) ? r * (r + 3) / 2 : (r - 1) * (r + 2) / 2;
}

Rational euler_factor_split_hyperspecial(long n, long q) {
  if (n < 2 || q < 2)
    throw DomainError("euler_factor_split_hyperspecial requires n, q >= 2");
  Rational result(1);
  for (long i = 2; i <= n; ++i) {
    Rational qi(pow_int(Integer(q), static_cast<unsigned long>(i)));
    result *= qi / (qi - 1);
  }
  return result;
}

Interval euler_factor_lower_bound(const LocalCase& c, long n,
                                  long exponent_denom) {
  if (c.n_v * c.d_v != n)
    throw InconsistentLocalCase("n_v * d_v != n");
  if (exponent_denom != 4 && exponent_denom != 3)
    throw DomainError("exponent_denom must be 3 or 4");
  const Rational q(c.q);
  switch (c.kind) {
    case LocalKind::T_place: {
      if (c.d_v < 2)
        throw InconsistentLocalCase("T_place requires d_v >= 2");
      // Xi^{-1} e(P_v) >= n^{-1} (q-1) q^{n^2/denom - 1}; the exponent is an
      // integer in every case the argument instantiates.
      long num = n * n - exponent_denom;
      if (num % exponent_denom != 0)
        throw DomainError("nonintegral exponent in T_place bound");
      Rational bound = Rational(1, n) * (q - 1) *
                       Rational(pow_int(Integer(c.q),
                                        static_cast<unsigned long>(num / exponent_denom)));
      return Interval(bound);
    }
    case LocalKind::special:
      // Xi trivial and e(P_v) > 1 strictly.
      return Interval(Rational(1));
    case LocalKind::nonspecial_nonsplit: {
      long rv = (n + 1) / 2;  // r_v + 1 with r_v = ceil((n-1)/2)
      Rational bound = Rational(1, n_tilde(n)) / (q + 1) *
                       Rational(pow_int(Integer(c.q),
                                        static_cast<unsigned long>(rv)));
      return Interval(bound);
    }
    case LocalKind::nonspecial_split: {
      Rational bound = Rational(1, n) *
                       Rational(pow_int(Integer(c.q),
                                        static_cast<unsigned long>(n - 1)));
      return Interval(bound);
    }
    case LocalKind::hyperspecial:
      return Interval(Rational(1));
  }
  throw DomainError("unreachable local kind");
}

Interval prasad_volume_bound(const CaseParams& cp, const DiscriminantData& dd,
                             const Interval& euler, Precision p) {
  if (cp.n < 3) throw InconsistentInput("prasad_volume_bound requires n >= 3");
  if (cp.form == Form::inner && dd.D_l != dd.D_k)
    throw InconsistentInput("inner form requires D_l = D_k");
  const long lk = (cp.form == Form::inner) ? 1 : 2;
  Integer dk_pow = pow_int(dd.D_k, static_cast<unsigned long>(lk));
  if (dd.rel_norm * dk_pow != dd.D_l)
    throw InconsistentInput("rel_norm inconsistent with D_l, D_k");
  if (!euler.strictly_positive())
    throw InconsistentInput("euler factor must be positive");

  const long s = s_qs(cp.n, cp.form);
  const long dim = cp.n * cp.n - 1;  // dim G, paired with exponent dim/2

  Interval dk(Rational(dd.D_k));
  Interval result = dk.pow(dim, 2, p);
  if (s != 0) {
    Interval rel(Rational(dd.rel_norm));
    result = result * rel.pow(s, 2, p);
  }
  Interval vn = v_n(cp.n).pow(cp.m).to_interval(p);
  result = result * vn * euler;
  return result.outward(p);
}

Interval covolume_slnz(long n, Precision p) {
  if (n < 2) throw DomainError("covolume_slnz requires n >= 2");
  Interval vn = v_n(n).to_interval(p);
  Interval zp = zeta_product_bound(static_cast<int>(n), p);
  return (vn * zp).outward(p);
}

}  // namespace covol
