#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "g2cal/catalog.hpp"
#include "g2cal/stable.hpp"

using namespace g2cal;

namespace {

RingElement rat(long long p, long long q = 1) {
  return RingElement(make_rational(p, q));
}

}  // namespace

TEST_CASE("the standard 3-form has lambda = -4 and recovers its partner") {
  auto data = stable_data(standard_psi_plus());
  CHECK(data.lambda == rat(-4));
  REQUIRE(data.j.has_value());
  REQUIRE(data.psi_minus.has_value());
  CHECK(*data.psi_minus == standard_psi_minus());
  // J² = -I, exactly.
  const Mat6& J = *data.j;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      RingElement acc;
      for (int k = 0; k < 6; ++k)
        acc += J[std::size_t(6 * i + k)] * J[std::size_t(6 * k + j)];
      CHECK(acc == (i == j ? rat(-1) : RingElement()));
    }
}

TEST_CASE("lambda scales quartically and psi- rotates with psi+") {
  auto scaled = stable_data(rat(3) * standard_psi_plus());
  CHECK(scaled.lambda == rat(-324));  // (-4) · 3^4
  auto rot = stable_data(rat(3, 5) * standard_psi_plus() +
                         rat(4, 5) * standard_psi_minus());
  CHECK(rot.lambda == rat(-4));
  REQUIRE(rot.psi_minus.has_value());
  CHECK(*rot.psi_minus ==
        rat(-4, 5) * standard_psi_plus() + rat(3, 5) * standard_psi_minus());
}

TEST_CASE("degenerate 3-forms are rejected") {
  CHECK_THROWS_AS(stable_data(Form::term(6, Blade({1, 2, 3}), rat(1))),
                  StabilityError);
}

TEST_CASE("warped catalog structures close symbolically") {
  for (const char* name : {"iwasawa-variant", "nil2step"}) {
    auto e = get_example(name);
    REQUIRE(e.g2.has_value());
    auto res = symbolic_verify_closed(*e.g2);
    CHECK(res.d_phi.is_zero());
    CHECK(res.d_star_phi.is_zero());
    CHECK(res.closed());
  }
}

TEST_CASE("flow on the torus is stationary") {
  FrameModel m = FrameModel::abelian(6);
  auto states = flow_run(m, standard_omega(), standard_psi_plus(), 1.0, 1.1,
                         0.01);
  REQUIRE(states.size() == 11);
  for (const auto& st : states) {
    CHECK(st.lambda == doctest::Approx(-4.0).epsilon(1e-12));
    CHECK(st.compat_residual < 1e-12);
    CHECK(st.closure_residual < 1e-12);
    for (std::size_t i = 0; i < st.omega.size(); ++i)
      CHECK(st.omega[i] == doctest::Approx(states[0].omega[i]).epsilon(1e-12));
  }
}

TEST_CASE("flow requires half-flat initial data") {
  // de6 = -e24 alone gives d psi+ != 0 for the standard forms.
  std::vector<Form> gens(6, Form(6, 2));
  gens[5] = Form::term(6, Blade({1, 2}), rat(1));
  FrameModel m(6, std::move(gens));
  CHECK_THROWS_AS(
      flow_run(m, standard_omega(), standard_psi_plus(), 1.0, 1.05, 0.01),
      StabilityError);
}

TEST_CASE("flow reproduces the closed-form warped trajectory") {
  auto e = get_example("iwasawa-variant");
  std::vector<Form> gens;
  for (int i = 1; i <= 6; ++i) gens.push_back(e.su3->model.d_generator(i));
  FrameModel model(6, std::move(gens), Metric::orthonormal(6));
  // Initial data: the warped coefficients at t = 1.
  Rational one(1);
  auto at1 = [&](const Form& f) {
    return f.map_coeffs(
        [&](const RingElement& c) { return RingElement(c.eval(one)); });
  };
  auto states = flow_run(model, at1(e.su3->omega), at1(e.su3->psi_plus), 1.0,
                         1.5, 1e-3);
  // Arc length s relates to the warp parameter by t(s) = (1 + 3(s-1))^{1/3}.
  auto basis = flow_basis2();
  double worst = 0;
  for (const auto& st : states) {
    double t = std::cbrt(1.0 + 3.0 * (st.t - 1.0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      double want = 0;
      if (basis[i] == Blade({1, 2}) || basis[i] == Blade({3, 4}))
        want = t * t;
      else if (basis[i] == Blade({5, 6}))
        want = 1.0 / (t * t);
      worst = std::max(worst, std::abs(st.omega[i] - want));
    }
    worst = std::max(worst, st.compat_residual);
  }
  CHECK(worst < 1e-9);
}
