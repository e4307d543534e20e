#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2cal/ring.hpp"

using namespace g2cal;

TEST_CASE("rational formatting and parsing") {
  CHECK(rational_str(make_rational(3, 6)) == "1/2");
  CHECK(rational_str(make_rational(-4, 2)) == "-2");
  CHECK(parse_rational("7/3") == make_rational(7, 3));
  CHECK(parse_rational("-5") == make_rational(-5));
  CHECK(!parse_rational("1/ 2").has_value());
  CHECK(!parse_rational("x").has_value());
}

TEST_CASE("rational square roots") {
  CHECK(rational_sqrt(make_rational(9, 4)) == make_rational(3, 2));
  CHECK(rational_sqrt(Rational(0)) == Rational(0));
  CHECK(!rational_sqrt(Rational(2)).has_value());
  CHECK(!rational_sqrt(Rational(-1)).has_value());
}

TEST_CASE("ring arithmetic") {
  RingElement a = RingElement::monomial(2, Rational(3));   // 3 t^2
  RingElement b = RingElement::monomial(-1, Rational(2));  // 2 t^-1
  CHECK(a * b == RingElement::monomial(1, Rational(6)));
  CHECK((a + a) == RingElement::monomial(2, Rational(6)));
  CHECK((a - a).is_zero());
  RingElement s = a + b;
  CHECK(!s.is_monomial());
  CHECK(s.min_exponent() == -1);
  CHECK(s.max_exponent() == 2);
  CHECK(s.eval(Rational(2)) == Rational(13));  // 12 + 1
  CHECK(s.derivative() == RingElement::monomial(1, Rational(6)) +
                              RingElement::monomial(-2, Rational(-2)));
}

TEST_CASE("ring inverse and exact division") {
  RingElement m = RingElement::monomial(3, make_rational(2, 5));
  CHECK(m.inverse() == RingElement::monomial(-3, make_rational(5, 2)));
  CHECK_THROWS_AS((m + RingElement(1)).inverse(), RingError);
  RingElement p = (RingElement::monomial(1) + RingElement(2)) *
                  RingElement::monomial(2, Rational(3));
  CHECK(RingElement::divide_exact(
            p, RingElement::monomial(1) + RingElement(2)) ==
        RingElement::monomial(2, Rational(3)));
  CHECK(!RingElement::divide_exact(RingElement(1),
                                   RingElement::monomial(1) + RingElement(2))
             .has_value());
}

TEST_CASE("fraction field normalizes and converts back") {
  RingElement num = RingElement::monomial(2) - RingElement::monomial(0);
  RingElement den = RingElement::monomial(1) - RingElement::monomial(0);
  RingFraction f(num, den);  // (t^2 - 1)/(t - 1) = t + 1
  CHECK(f.to_ring() == RingElement::monomial(1) + RingElement(1));
  RingFraction g = RingFraction(RingElement(1)) /
                   RingFraction(RingElement::monomial(1) + RingElement(1));
  CHECK(!g.to_ring().has_value());
  CHECK(g * RingFraction(RingElement::monomial(1) + RingElement(1)) ==
        RingFraction(RingElement(1)));
  CHECK((f - f).is_zero());
}

TEST_CASE("ring string forms round through values") {
  RingElement s = RingElement::monomial(-2, make_rational(1, 2)) +
                  RingElement(Rational(3));
  CHECK(s.str() == "3 + 1/2*t^-2");
}
