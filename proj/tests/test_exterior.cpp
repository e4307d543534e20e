#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "g2cal/form.hpp"

using namespace g2cal;

namespace {

RingElement rat(long long p, long long q = 1) {
  return RingElement(make_rational(p, q));
}

Form random_form(std::mt19937& rng, int n, int degree, const Metric& m) {
  Form f(n, degree);
  for (Blade b : blades_of(degree, m.slot_mask())) {
    int c = int(rng() % 7) - 3;
    if (c != 0) f.add_term(b, rat(c));
  }
  return f;
}

}  // namespace

TEST_CASE("blade wedge signs") {
  CHECK(wedge_sign(Blade({1}), Blade({2})) == 1);
  CHECK(wedge_sign(Blade({2}), Blade({1})) == -1);
  CHECK(wedge_sign(Blade({1, 3}), Blade({2})) == -1);
  CHECK(wedge_sign(Blade({1}), Blade({1, 2})) == 0);
  CHECK(Blade({2, 1}).str() == "e12");
  CHECK(Blade({0, 1, 3}).str() == "dt.e13");
}

TEST_CASE("blade enumeration") {
  auto b2 = blades_of(2, Metric::orthonormal(6).slot_mask());
  CHECK(b2.size() == 15);
  auto b3 = blades_of(3, Metric::orthonormal(6, true).slot_mask());
  CHECK(b3.size() == 35);
}

TEST_CASE("wedge algebra over random forms") {
  std::mt19937 rng(11);
  const Metric m = Metric::orthonormal(6);
  for (int i = 0; i < 120; ++i) {
    int p = 1 + int(rng() % 2), q = 1 + int(rng() % 2),
        r = 1 + int(rng() % 2);
    Form a = random_form(rng, 6, p, m);
    Form b = random_form(rng, 6, q, m);
    Form c = random_form(rng, 6, r, m);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    Form ba = wedge(b, a);
    CHECK(wedge(a, b) == (p * q % 2 ? -ba : ba));
    CHECK(wedge(a + a, b) == wedge(a, b) + wedge(a, b));
  }
}

TEST_CASE("hodge is an involution up to degree sign") {
  std::mt19937 rng(12);
  const Metric m6 = Metric::orthonormal(6);
  const Metric m7 = Metric::orthonormal(6, true);
  for (int i = 0; i < 120; ++i) {
    int k = 1 + int(rng() % 5);
    Form a = random_form(rng, 6, k, m6);
    CHECK(hodge(hodge(a, m6), m6) == (k % 2 ? -a : a));
    Form b = random_form(rng, 6, 1 + int(rng() % 6), m7);
    CHECK(hodge(hodge(b, m7), m7) == b);
  }
}

TEST_CASE("contraction is adjoint to wedging") {
  std::mt19937 rng(13);
  const Metric m = Metric::orthonormal(6);
  for (int i = 0; i < 120; ++i) {
    int q = 1 + int(rng() % 3);
    Form a = random_form(rng, 6, 1, m);
    Form b = random_form(rng, 6, q, m);
    Form c = random_form(rng, 6, q + 1, m);
    CHECK(inner(wedge(a, b), c, m) == inner(b, contract(a, c, m), m));
  }
}

TEST_CASE("weighted metrics scale the inner product") {
  Metric m = Metric::orthonormal(2);
  m.n = 2;
  m.scales[1] = RingElement::monomial(1);  // |e1| = t^-1
  Form e1 = Form::term(2, Blade({1}), rat(1));
  CHECK(inner(e1, e1, m) == RingElement::monomial(-2));
  // a ∧ *a = <a,a> vol with vol = t e12, so e1 ∧ *e1 = t^-1 e12.
  Form e2 = Form::term(2, Blade({2}), rat(1));
  CHECK(wedge(e1, hodge(e1, m)) == RingElement::monomial(-1) * wedge(e1, e2));
  CHECK(hodge(hodge(e1, m), m) == -e1);
}

TEST_CASE("split_dt reassembles the form") {
  std::mt19937 rng(14);
  const Metric m = Metric::orthonormal(6, true);
  Form dt = Form::term(6, Blade::single(Blade::kDt), rat(1));
  for (int i = 0; i < 30; ++i) {
    Form a = random_form(rng, 6, 3, m);
    auto [spatial, rest] = a.split_dt();
    CHECK(a == spatial + wedge(dt, rest));
    CHECK(spatial.split_dt().second.is_zero());
  }
}

TEST_CASE("degree mismatches are rejected") {
  Form a = Form::term(6, Blade({1, 2}), rat(1));
  Form b = Form::term(6, Blade({1, 2, 3}), rat(1));
  CHECK_THROWS_AS(a + b, FormError);
  CHECK_THROWS_AS(a.add_term(Blade({1, 2, 3}), rat(1)), FormError);
  CHECK_THROWS_AS(inner(a, b, Metric::orthonormal(6)), FormError);
}
