#include <doctest.h>

#include "covol/transcendental.hpp"
#include "covol/volume.hpp"

using namespace covol;

TEST_CASE("v_n exact closed forms") {
  PiMonomial v2 = v_n(2);
  CHECK(v2.coeff == Rational(1, 4));
  CHECK(v2.pi_exp == -2);
  PiMonomial v3 = v_n(3);
  CHECK(v3.coeff == Rational(1, 16));
  CHECK(v3.pi_exp == -5);
  PiMonomial v4 = v_n(4);
  CHECK(v4.coeff == Rational(3, 128));
  CHECK(v4.pi_exp == -9);
  CHECK_THROWS_AS(v_n(1), DomainError);
}

TEST_CASE("v_n ratio identity") {
  for (long n = 2; n <= 9; ++n) {
    PiMonomial ratio = v_n(n + 1) / v_n(n);
    CHECK(ratio.coeff ==
          Rational(factorial(static_cast<unsigned long>(n))) /
              pow_int(Rational(2), n + 1));
    CHECK(ratio.pi_exp == -(n + 1));
  }
}

TEST_CASE("PiMonomial conversion encloses the true value") {
  Precision p{128};
  Interval v2 = v_n(2).to_interval(p);  // 1/(4 pi^2) = 0.0253302959105844...
  CHECK(abs(v2.mid() - rational_from_decimal("0.0253302959105844")) <
        rational_from_decimal("1e-15"));
  // Large exponents stay enclosing despite the rounded power chain.
  PiMonomial big{Rational(1), 100};
  PiMonomial inv{Rational(1), -100};
  Interval prod = big.to_interval(p) * inv.to_interval(p);
  CHECK(prod.contains(Rational(1)));
}

TEST_CASE("s exponent of the quasi-split form") {
  CHECK(s_qs(3, Form::inner) == 0);
  CHECK(s_qs(3, Form::outer) == 5);
  CHECK(s_qs(4, Form::outer) == 5);   // r = 3 odd: (r-1)(r+2)/2
  CHECK(s_qs(5, Form::outer) == 14);  // r = 4 even: r(r+3)/2
}

TEST_CASE("split hyperspecial Euler factor") {
  CHECK(euler_factor_split_hyperspecial(2, 2) == Rational(4, 3));
  CHECK(euler_factor_split_hyperspecial(3, 2) == Rational(32, 21));
  CHECK(euler_factor_split_hyperspecial(2, 3) == Rational(9, 8));
  for (long q : {2L, 3L, 5L})
    CHECK(euler_factor_split_hyperspecial(4, q) > 1);
}

TEST_CASE("local factor lower bounds by kind") {
  LocalCase t{2, 2, 2, LocalKind::T_place};
  CHECK(euler_factor_lower_bound(t, 4).contains(Rational(2)));

  LocalCase sp{2, 4, 1, LocalKind::special};
  CHECK(euler_factor_lower_bound(sp, 4).lo() >= 1);

  LocalCase nn{2, 3, 1, LocalKind::nonspecial_nonsplit};
  CHECK(euler_factor_lower_bound(nn, 3, 3).contains(Rational(4, 3)));

  LocalCase bad{2, 4, 1, LocalKind::T_place};  // T place needs d_v >= 2
  CHECK_THROWS_AS(euler_factor_lower_bound(bad, 4), InconsistentLocalCase);
}

TEST_CASE("covolume of SL_n(Z)") {
  Precision p{256};
  Interval c2 = covolume_slnz(2, p);
  CHECK(c2.contains(Rational(1, 24)));
  Interval c3 = covolume_slnz(3, p);
  CHECK(c3.lo() > rational_from_decimal("4.038e-4"));
  CHECK(c3.hi() < rational_from_decimal("4.039e-4"));
  for (long n = 2; n <= 6; ++n) {
    Interval cap = Interval(rational_from_decimal("2.3")) *
                   v_n(n).to_interval(p);
    CHECK(covolume_slnz(n, p).hi() < cap.hi());
  }
}

TEST_CASE("volume formula consistency") {
  Precision p{256};
  CaseParams cp{1, 3, Form::inner};
  DiscriminantData dd;  // D_k = D_l = rel_norm = 1

  Interval trivial = prasad_volume_bound(cp, dd, Interval(Rational(1)), p);
  CHECK(trivial.contains(v_n(3).to_interval(Precision{512}).mid()));

  Interval zz = zeta_product_bound(3, p);
  Interval full = prasad_volume_bound(cp, dd, zz, p);
  CHECK(full.contains(covolume_slnz(3, Precision{512}).mid()));

  // Outer form over Q with D_l = 5: scales by 5^(s/2), s = 5.
  CaseParams co{1, 3, Form::outer};
  DiscriminantData od{Integer(1), Integer(5), Integer(5)};
  Interval outer = prasad_volume_bound(co, od, Interval(Rational(1)), p);
  Interval expected = Interval(Rational(5)).pow(5, 2, p) *
                      v_n(3).to_interval(p);
  CHECK(outer.contains(expected.mid()));

  // Monotone in the discriminant.
  DiscriminantData bigger{Integer(1), Integer(8), Integer(8)};
  CHECK(prasad_volume_bound(co, bigger, Interval(Rational(1)), p).lo() >
        outer.hi());
}
