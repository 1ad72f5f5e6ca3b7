#include <doctest.h>

#include "covol/bounds.hpp"
#include "covol/printed_tables.hpp"

using namespace covol;

TEST_CASE("index bounds are exact integers") {
  CHECK(index_bound_inner(Integer(1), 4, 1, {}) == Integer(2));
  CHECK(index_bound_inner(Integer(1), 3, 1, {3, 3}) == Integer(9));
  CHECK(index_bound_inner(Integer(1), 4, 2, {2}) == Integer(16));

  CHECK(index_bound_outer(Integer(1), 3, 2, {}, {}, false) == Integer(3));
  CHECK(index_bound_outer(Integer(1), 4, 1, {}, {}, true) == Integer(16));
  CHECK(index_bound_outer(Integer(2), 4, 2, {2}, {4}, false) == Integer(256));
}

TEST_CASE("Dirichlet-type unit bound") {
  CHECK(dirichlet_units_bound(3, 2, 1, Integer(1), Integer(1), false) ==
        Integer(3));
  CHECK(dirichlet_units_bound(4, 2, 1, Integer(2), Integer(1), true) ==
        Integer(8));
  // n odd makes the norm-surjectivity flag irrelevant.
  CHECK(dirichlet_units_bound(5, 3, 2, Integer(1), Integer(2), false) ==
        dirichlet_units_bound(5, 3, 2, Integer(1), Integer(2), true));
}

TEST_CASE("E functions take their exact rational values") {
  CHECK(fn_E1(4, 2, 4).contains(Rational(2)));
  CHECK(fn_E1(4, 2, 4).is_point());
  CHECK(fn_E1(3, 3, 3).contains(Rational(6)));
  CHECK(fn_E2(3, 2).contains(Rational(4, 3)));
  CHECK(fn_E2(3, 2).is_point());
}

TEST_CASE("M, M', N, N', C reproduce their printed values") {
  Precision p{512};
  CHECK(tables::matches_printed(fn_M(2, 9, p), "685.655"));
  CHECK(tables::matches_printed(fn_Mprime(6, 4, p), "6.73878"));
  Interval mp163 = fn_Mprime(16, 3, p);
  CHECK(abs(mp163.mid() - rational_from_decimal("4.6751")) <
        rational_from_decimal("1e-3"));

  Interval n4 = fn_N(4, p);
  CHECK(n4.lo() > rational_from_decimal("2.3"));
  CHECK(tables::matches_printed(n4, "2.30692"));

  Interval np4 = fn_Nprime(4, p);  // 5^(5/2)/16 = 3.49385621484342...
  CHECK(abs(np4.mid() - rational_from_decimal("3.4938562148434213")) <
        rational_from_decimal("1e-15"));
  CHECK(abs(np4.mid() - rational_from_decimal("3.49385")) <
        rational_from_decimal("1e-5"));
  // N'(2) = (1/4)(1/2) 5^0 exactly.
  CHECK(fn_Nprime(2, p).contains(Rational(1, 8)));

  CHECK(tables::matches_printed(fn_C(4, 4, p), "1741.42"));
  CHECK(tables::matches_printed(fn_C(5, 4, p), "15627.4"));
  CHECK(tables::matches_printed(fn_C(2, 6, p), "6.73460"));
}

TEST_CASE("relative discriminant bound") {
  Precision p{512};
  CHECK(rel_disc_bound(5, 4, Integer(14641), p).hi() <
        rational_from_decimal("1.271"));
  CHECK(rel_disc_bound(3, 4, Integer(169), p).hi() <
        rational_from_decimal("1.661"));
  CHECK(rel_disc_bound(4, 4, Integer(1600), p).hi() <
        rational_from_decimal("1.365"));
  // The refined m=4 constant (67.9029 in place of 230) tightens the bound.
  Interval plain = rel_disc_bound(4, 4, Integer(725), p);
  Interval refined = rel_disc_bound(4, 4, Integer(725), p, true);
  CHECK(refined.hi() < plain.hi());
  // Decreasing in D_k.
  CHECK(rel_disc_bound(3, 4, Integer(169), p).hi() <
        rel_disc_bound(3, 4, Integer(49), p).hi());
  // Ranks below the outer-case minimum are rejected.
  CHECK_THROWS_AS(rel_disc_bound(2, 2, Integer(5), p), DomainError);
}

TEST_CASE("class number upper bound is linear in the discriminant") {
  Precision p{256};
  Interval one = class_number_upper(4, Integer(1), p);
  Interval two = class_number_upper(4, Integer(2), p);
  Interval doubled = one * Interval(Rational(2));
  CHECK(two.contains(doubled.mid()));
}

TEST_CASE("H(m) and the Hilbert class field bound") {
  Precision p{256};
  CHECK(tables::matches_printed(fn_H(5, p), "87.71"));
  CHECK(tables::matches_printed(fn_H(9, p), "149118"));
  CHECK_THROWS_AS(fn_H(4, p), MissingDiscriminantOverride);
  CHECK(tables::matches_printed(fn_H(2, p, Integer(275)), "2.603"));

  Interval h3 = fn_H(3, p, Integer(28037));
  CHECK(tables::matches_printed(hilbert_cf_disc_bound(3, h3, p), "454.01"));
  Interval b5 = hilbert_cf_disc_bound(5, fn_H(5, p), p);
  CHECK(b5.mid() > rational_from_decimal("8.56e13"));
  CHECK(b5.mid() < rational_from_decimal("8.58e13"));
  // h -> infinity limit: the exponential factor tends to 1 from below.
  Interval hi_h = hilbert_cf_disc_bound(3, Interval(Rational(1000000)), p);
  Interval limit = Interval(rational_from_decimal("60.015")).pow(2) *
                   Interval(rational_from_decimal("22.210")).pow(4);
  CHECK(hi_h.hi() <= limit.hi());
  CHECK(hi_h.lo() > limit.lo() * rational_from_decimal("0.999"));
}

TEST_CASE("Minkowski and Odlyzko discriminant lower bounds") {
  CHECK(minkowski_disc_lower(2) == Rational(4));
  CHECK(minkowski_disc_lower(3) == Rational(81, 4));

  Precision p{256};
  const OdlyzkoTable& t = OdlyzkoTable::builtin();
  Interval tr5 = odlyzko_disc_lower(t.row("totally_real"), 5, 0, p);
  CHECK(tr5.hi() < Rational(14641));  // the degree-5 minimum is admissible
  Interval s28 = odlyzko_disc_lower(t.row("sig_2_complex"), 2, 4, p);
  CHECK(s28.lo() > rational_from_decimal("4.66e8"));
  CHECK(s28.hi() < rational_from_decimal("4.68e8"));
}

TEST_CASE("odlyzko table round-trips through the configuration file") {
  OdlyzkoTable loaded = OdlyzkoTable::load(COVOL_DATA_DIR "/odlyzko.json");
  const OdlyzkoRow& row = loaded.row("hilbert");
  CHECK(row.a_real == rational_from_decimal("60.015"));
  CHECK(row.a_complex == rational_from_decimal("22.210"));
  CHECK(row.e_const == rational_from_decimal("80.001"));
  CHECK_THROWS(loaded.row("no-such-row"));
}

TEST_CASE("monotonicity certification passes on a small grid") {
  CertBuilder cb;
  verify_monotonicity(MonotoneLemma::E1, cb, 8);
  verify_monotonicity(MonotoneLemma::N, cb, 8);
  REQUIRE(!cb.steps().empty());
  for (const Step& s : cb.steps())
    CHECK(s.status == StepStatus::Verified);
}
