#include <doctest.h>

#include "covol/interval.hpp"

using namespace covol;

namespace {

// True when |mid(i) - d| <= tol and d lies inside i.
bool encloses(const Interval& i, const char* decimal, const char* tol) {
  Rational d = rational_from_decimal(decimal);
  Rational t = rational_from_decimal(tol);
  return i.contains(d) && abs(i.mid() - d) <= t;
}

}  // namespace

TEST_CASE("exact arithmetic on point intervals") {
  Interval one{Rational(1)}, two{Rational(2)};
  Interval sum = one + two;
  CHECK(sum.is_point());
  CHECK(sum.lo() == 3);

  Interval prod = Interval(Rational(1), Rational(2)) *
                  Interval(Rational(-1), Rational(1));
  CHECK(prod.lo() == -2);
  CHECK(prod.hi() == 2);
}

TEST_CASE("expressions over rationals have zero width") {
  Interval a{Rational(3, 7)}, b{Rational(-2, 5)};
  Interval r = (a + b) * a - b / a;
  CHECK(r.is_point());
  CHECK(r.lo() == (Rational(3, 7) + Rational(-2, 5)) * Rational(3, 7) -
                      Rational(-2, 5) / Rational(3, 7));
}

TEST_CASE("division by an enclosure of zero throws") {
  Interval a{Rational(1)};
  Interval z(Rational(-1), Rational(1));
  CHECK_THROWS_AS(a / z, DivisionByEnclosedZero);
}

TEST_CASE("integer powers, including even powers of straddling intervals") {
  CHECK(Interval(Rational(2)).pow(3).lo() == 8);
  Interval s(Rational(-2), Rational(1));
  Interval sq = s.pow(2);
  CHECK(sq.lo() == 0);
  CHECK(sq.hi() == 4);
  Interval inv = Interval(Rational(2)).pow(-2);
  CHECK(inv.lo() == Rational(1, 4));
}

TEST_CASE("rational-exponent power encloses 2^(3/2)") {
  Interval r = Interval(Rational(2)).pow(3, 2, Precision{128});
  CHECK(abs(r.mid() - rational_from_decimal("2.82842712474619009760")) <=
        rational_from_decimal("1e-19"));
  CHECK(r.width() <= rational_from_decimal("1e-30"));
  CHECK_THROWS_AS(Interval(Rational(-1), Rational(1)).pow(1, 2, Precision{128}),
                  DomainError);
}

TEST_CASE("roots") {
  Interval r = Interval(Rational(8)).root(3, Precision{128});
  CHECK(r.contains(Rational(2)));
  CHECK(r.width() <= rational_from_decimal("1e-30"));
}

TEST_CASE("outward rounding is nested under refinement") {
  Interval third{Rational(1, 3)};
  Interval coarse = third.outward(Precision{8});
  Interval fine = third.outward(Precision{64});
  CHECK(coarse.contains(fine));
  CHECK(fine.contains(Rational(1, 3)));
  CHECK(coarse.lo() <= Rational(1, 3));
  CHECK(coarse.hi() >= Rational(1, 3));
}

TEST_CASE("directed rounding moves endpoints the right way") {
  Rational x(1, 3);
  CHECK(round_down(x, Precision{16}) <= x);
  CHECK(round_up(x, Precision{16}) >= x);
  // Dyadic values are fixed points of rounding at sufficient precision.
  Rational d(5, 8);
  CHECK(round_down(d, Precision{16}) == d);
  CHECK(round_up(d, Precision{16}) == d);
}

TEST_CASE("comparison and hull helpers") {
  Interval a(Rational(1), Rational(2)), b(Rational(3), Rational(4));
  CHECK(certainly_less(a, b));
  CHECK_FALSE(certainly_less(b, a));
  CHECK(certainly_leq(Interval(Rational(2)), Interval(Rational(2))));
  Interval h = hull(a, b);
  CHECK(h.lo() == 1);
  CHECK(h.hi() == 4);
}

TEST_CASE("decimal parsing round-trips, including leading zeros") {
  CHECK(rational_from_decimal("0.0486342") == Rational(243171, 5000000));
  CHECK(rational_from_decimal("-1.5e2") == Rational(-150));
  CHECK(printed_ulp("685.655") == Rational(1, 1000));
  CHECK(printed_ulp("7.27644e311") ==
        pow_int(Rational(10), 311 - 5));
}
