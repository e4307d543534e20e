#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2cal/model.hpp"

using namespace g2cal;

namespace {

RingElement rat(long long p, long long q = 1) {
  return RingElement(make_rational(p, q));
}

}  // namespace

TEST_CASE("parser handles the full grammar") {
  const std::string text =
      "# a three-step nilpotent example\n"
      "dim 6\n"
      "param t\n"
      "warp e1 = t\n"
      "warp dt = 2*t^4\n"
      "d e3 = e25          # comment after a directive\n"
      "d e6 = e14 - e23\n"
      "omega = e12 + e34 + e56\n"
      "psi+ = e135 - e146 - e236 - e245\n"
      "rho = 1/2*e12 - 3*t^2*e34\n";
  ModelFile f = parse_model(text);
  CHECK(f.model.n() == 6);
  CHECK(f.model.has_dt());
  CHECK(f.model.metric().scales.at(1) == RingElement::monomial(1));
  CHECK(f.model.metric().scales.at(Blade::kDt) ==
        RingElement::monomial(4, Rational(2)));
  CHECK(f.model.d_generator(3) == Form::term(6, Blade({2, 5}), rat(1)));
  CHECK(f.model.d_generator(6) ==
        Form::term(6, Blade({1, 4}), rat(1)) -
            Form::term(6, Blade({2, 3}), rat(1)));
  CHECK(f.model.d_generator(1).is_zero());
  REQUIRE(f.omega.has_value());
  REQUIRE(f.psi_plus.has_value());
  CHECK(!f.psi_minus.has_value());
  REQUIRE(f.rho.has_value());
  CHECK(*f.rho == Form::term(6, Blade({1, 2}), rat(1, 2)) -
                      Form::term(6, Blade({3, 4}),
                                 RingElement::monomial(2, Rational(3))));
}

TEST_CASE("index monomials are order sensitive") {
  ModelFile f = parse_model("dim 6\nd e3 = e52\n");
  CHECK(f.model.d_generator(3) == Form::term(6, Blade({2, 5}), rat(-1)));
  ModelFile g = parse_model("dim 6\nrho = e12 + e21\n");
  CHECK(g.rho->is_zero());
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_model("dim 6\nd e3 = e25 +\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column > 1);
  }
  CHECK_THROWS_AS(parse_model("frobnicate 3\n"), ParseError);
  CHECK_THROWS_AS(parse_model("dim 9\n"), ParseError);
  CHECK_THROWS_AS(parse_model("dim 6\nd e3 = e78\n"), ParseError);
  CHECK_THROWS_AS(parse_model("dim 6\nd e9 = e12\n"), ParseError);
  CHECK_THROWS_AS(parse_model("dim 6\nwarp e1 = e12\n"), ParseError);
  CHECK_THROWS_AS(parse_model("dim 6\nwarp e1 = 1 + t\n"), ParseError);
  CHECK_THROWS_AS(parse_model("dim 6\nomega = e12 + e345\n"), ParseError);
  CHECK_THROWS_AS(parse_model("dim 6\nalpha = e6\n"), ParseError);
  CHECK_THROWS_AS(parse_model("dim 6\nrho = 1/0*e12\n"), ParseError);
}

TEST_CASE("Jacobi identity is enforced") {
  // d e2 = e34 with d e4 = e12 fails d^2 = 0 on both generators.
  CHECK_THROWS_AS(parse_model("dim 4\nd e2 = e34\nd e4 = e12\n"), JacobiError);
  std::vector<Form> gens(4, Form(4, 2));
  gens[1] = Form::term(4, Blade({3, 4}), rat(1));
  gens[3] = Form::term(4, Blade({1, 2}), rat(1));
  auto bad = jacobi_report(4, gens, Metric::orthonormal(4));
  REQUIRE(bad.size() == 2);
  CHECK(bad[0].first == 2);
  CHECK(bad[1].first == 4);
  gens[1] = Form(4, 2);
  CHECK(jacobi_report(4, gens, Metric::orthonormal(4)).empty());
}

TEST_CASE("t-dependence requires a dt slot") {
  CHECK_THROWS_AS(parse_model("dim 6\nwarp e1 = t\n"), FormError);
  CHECK_NOTHROW(parse_model("dim 6\nparam t\nwarp e1 = t\n"));
}

TEST_CASE("d differentiates coefficients only with a dt slot") {
  FrameModel plain = FrameModel::abelian(6);
  FrameModel warped = FrameModel::abelian(6, true);
  Form a = Form::term(6, Blade({1, 2}), RingElement::monomial(2));
  CHECK(plain.d_spatial(a).is_zero());
  Form da = warped.d(a);
  CHECK(da == Form::term(6, Blade({0, 1, 2}), RingElement::monomial(1, Rational(2))));
  CHECK(warped.d_spatial(a).is_zero());
  // d^2 = 0 through the dt slot as well.
  CHECK(warped.d(da).is_zero());
}

TEST_CASE("d matches the structure constants") {
  ModelFile f = parse_model("dim 6\nd e3 = e25\nd e6 = e14 - e23\n");
  Form e3 = Form::term(6, Blade({3}), rat(1));
  CHECK(f.model.d(e3) == Form::term(6, Blade({2, 5}), rat(1)));
  // Leibniz on a decomposable: d(e3 ∧ e6) = de3 ∧ e6 - e3 ∧ de6.
  Form e6 = Form::term(6, Blade({6}), rat(1));
  CHECK(f.model.d(wedge(e3, e6)) ==
        wedge(f.model.d(e3), e6) - wedge(e3, f.model.d(e6)));
}

TEST_CASE("format and parse round-trip") {
  const std::string text =
      "dim 6\n"
      "param t\n"
      "warp e1 = t\n"
      "warp e5 = 1/3*t^-2\n"
      "warp dt = 2*t^4\n"
      "d e3 = e25\n"
      "d e6 = e14 - e23\n"
      "omega = e12 + e34 + e56\n"
      "psi+ = e135 - e146 - e236 - e245\n"
      "psi- = e136 + e145 + e235 - e246\n"
      "rho = 1/2*e12 - 3*t^2*e34\n"
      "alpha = e7\n";
  ModelFile f = parse_model(text);
  std::string printed = format_model(f);
  ModelFile g = parse_model(printed);
  CHECK(f.model == g.model);
  CHECK(*f.omega == *g.omega);
  CHECK(*f.psi_plus == *g.psi_plus);
  CHECK(*f.psi_minus == *g.psi_minus);
  CHECK(*f.rho == *g.rho);
  CHECK(g.has_alpha_e7);
  // Printing is idempotent.
  CHECK(format_model(g) == printed);
}
