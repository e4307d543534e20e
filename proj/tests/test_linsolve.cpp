#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "g2cal/formlin.hpp"

using namespace g2cal;

namespace {

RingElement rat(long long p, long long q = 1) {
  return RingElement(make_rational(p, q));
}

}  // namespace

TEST_CASE("rank and solve over rationals") {
  ExactMat<Rational> a(3, 3);
  int vals[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a.at(i, j) = vals[i][j];
  CHECK(exact_rank(a) == 2);
  std::vector<Rational> b{Rational(6), Rational(15), Rational(24)};
  auto x = exact_solve(a, b);
  REQUIRE(x.has_value());
  for (int i = 0; i < 3; ++i) {
    Rational acc(0);
    for (int j = 0; j < 3; ++j) acc += a.at(i, j) * (*x)[std::size_t(j)];
    CHECK(acc == b[std::size_t(i)]);
  }
  std::vector<Rational> bad{Rational(1), Rational(0), Rational(0)};
  CHECK(!exact_solve(a, bad).has_value());
  auto null = exact_nullspace(a);
  REQUIRE(null.size() == 1);
  for (int i = 0; i < 3; ++i) {
    Rational acc(0);
    for (int j = 0; j < 3; ++j) acc += a.at(i, j) * null[0][std::size_t(j)];
    CHECK(acc == 0);
  }
}

TEST_CASE("solve over the Laurent fraction field") {
  // [t 1; 0 t] x = [t^2 + 1, t]  =>  x = (t, 1).
  ExactMat<RingFraction> a(2, 2);
  a.at(0, 0) = RingFraction(RingElement::monomial(1));
  a.at(0, 1) = RingFraction(RingElement(1));
  a.at(1, 0) = RingFraction(RingElement(0));
  a.at(1, 1) = RingFraction(RingElement::monomial(1));
  std::vector<RingFraction> b{
      RingFraction(RingElement::monomial(2) + RingElement(1)),
      RingFraction(RingElement::monomial(1))};
  auto x = exact_solve(a, b);
  REQUIRE(x.has_value());
  CHECK((*x)[0].to_ring() == RingElement::monomial(1));
  CHECK((*x)[1].to_ring() == RingElement(1));
}

TEST_CASE("solve_combination finds exact coefficients") {
  Form e12 = Form::term(6, Blade({1, 2}), rat(1));
  Form e34 = Form::term(6, Blade({3, 4}), rat(1));
  Form target = rat(2) * e12 - rat(5, 3) * e34;
  auto c = solve_combination({e12, e34}, target);
  REQUIRE(c.has_value());
  CHECK((*c)[0] == rat(2));
  CHECK((*c)[1] == rat(-5, 3));
  Form e56 = Form::term(6, Blade({5, 6}), rat(1));
  CHECK(!solve_combination({e12, e34}, e56).has_value());
  CHECK(solve_combination({}, Form(6, 2)).has_value());
  CHECK(!solve_combination({}, e56).has_value());
}

TEST_CASE("orthogonal projection via Gram solve") {
  const Metric m = Metric::orthonormal(6);
  Form e1 = Form::term(6, Blade({1}), rat(1));
  Form e2 = Form::term(6, Blade({2}), rat(1));
  Form mix = e1 + rat(3) * e2;
  auto coeffs = orthogonal_coefficients({e1, e2}, mix, m);
  CHECK(coeffs[0] == rat(1));
  CHECK(coeffs[1] == rat(3));
  // Dependent span is rejected.
  CHECK_THROWS_AS(orthogonal_coefficients({e1, rat(2) * e1}, mix, m),
                  FormError);
}

TEST_CASE("OrthoProjector is idempotent and orthogonal") {
  std::mt19937 rng(5);
  const Metric m = Metric::orthonormal(6);
  std::vector<Form> span;
  for (int k = 0; k < 3; ++k) {
    Form f(6, 2);
    for (Blade b : blades_of(2, m.slot_mask()))
      f.add_term(b, rat(int(rng() % 7) - 3));
    span.push_back(f);
  }
  OrthoProjector proj(span, m);
  CHECK(proj.subspace_dim() == 3);
  for (int trial = 0; trial < 20; ++trial) {
    Form f(6, 2);
    for (Blade b : blades_of(2, m.slot_mask()))
      f.add_term(b, rat(int(rng() % 9) - 4));
    Form p = proj.apply(f);
    CHECK(proj.apply(p) == p);
    for (const auto& s : span) CHECK(inner(f - p, s, m).is_zero());
  }
}

TEST_CASE("form coordinates round-trip") {
  const Metric m = Metric::orthonormal(6, true);
  auto basis = form_basis(2, m);
  CHECK(basis.size() == 21);
  Form f = Form::term(6, Blade({0, 3}), RingElement::monomial(2)) +
           Form::term(6, Blade({1, 2}), rat(-7));
  auto coords = form_coords(f, basis);
  CHECK(form_from_coords(6, 2, basis, coords) == f);
  CHECK(!rational_coords(f, basis).has_value());
}
