#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "g2cal/catalog.hpp"
#include "g2cal/formlin.hpp"
#include "g2cal/g2.hpp"

using namespace g2cal;

namespace {

RingElement rat(long long p, long long q = 1) {
  return RingElement(make_rational(p, q));
}

Form term7(std::initializer_list<int> idx, long long p, long long q = 1) {
  return Form::term(7, Blade(idx), rat(p, q));
}

G2Structure torus_extension() {
  auto s = *get_example("torus6").su3;
  return build_circle_extension(s, Form(6, 2));
}

/// True when a lies entirely in the component of the given dimension.
bool pure(const Form& a, int dim, const G2Structure& g) {
  auto parts = irrep_project(a, g);
  for (const auto& [d, f] : parts)
    if (d != dim && !f.is_zero()) return false;
  return parts.count(dim) && parts.at(dim) == a;
}

}  // namespace

TEST_CASE("products and extensions satisfy the defining identities") {
  auto s = *get_example("torus6").su3;
  for (const G2Structure& g : {build_product(s), torus_extension(),
                               build_cone(s)}) {
    CHECK(g.phi == wedge(g.omega, g.alpha) + g.psi_plus);
    CHECK(g.star_phi ==
          wedge(g.psi_minus, g.alpha) + rat(1, 2) * wedge(g.omega, g.omega));
    CHECK(hodge(g.phi, g.model.metric()) == g.star_phi);
  }
}

TEST_CASE("make_g2 rejects a mismatched dual") {
  auto g = torus_extension();
  CHECK_THROWS_AS(make_g2(g.model, g.alpha, rat(2) * g.omega, g.psi_plus,
                          g.psi_minus, g.rho),
                  ValidationError);
}

TEST_CASE("circle extension curvature must be closed") {
  auto s = *get_example("nil3step").su3;
  // e36 is not closed on this base since de3 = e25 and de6 = e14 - e23.
  Form bad = Form::term(6, Blade({3, 6}), rat(1));
  CHECK_THROWS_AS(build_circle_extension(s, bad), ValidationError);
}

TEST_CASE("component dimensions on the blade basis") {
  auto g = torus_extension();
  const int n = g.model.n();
  std::map<int, std::map<int, int>> expected = {
      {2, {{7, 7}, {14, 14}}},
      {3, {{1, 1}, {7, 7}, {27, 27}}},
      {4, {{1, 1}, {7, 7}, {27, 27}}},
      {5, {{7, 7}, {14, 14}}},
  };
  for (const auto& [deg, dims] : expected) {
    auto blades = blades_of(deg, g.model.metric().slot_mask());
    for (const auto& [dim, want] : dims) {
      // The exact rank of the projection on the blade basis equals the
      // dimension of the component.
      ExactMat<Rational> m(int(blades.size()), int(blades.size()));
      for (int col = 0; col < int(blades.size()); ++col) {
        Form basis = Form::term(n, blades[std::size_t(col)], rat(1));
        auto parts = irrep_project(basis, g);
        const Form& img = parts.at(dim);
        for (int row = 0; row < int(blades.size()); ++row) {
          RingElement c = img.coeff(blades[std::size_t(row)]);
          if (c.is_zero()) continue;
          auto [k, q] = c.monomial_value();
          REQUIRE(k == 0);
          m.at(row, col) = q;
        }
      }
      CHECK(exact_rank(m) == want);
    }
  }
}

TEST_CASE("hodge eigen-operator splits the 2-forms as 7 + 14") {
  // The operator A(beta) = *(phi ∧ beta) on 2-forms satisfies
  // (A - 2)(A + 1) = 0 with eigenspace dimensions 7 and 14.
  auto g = torus_extension();
  auto blades = blades_of(2, g.model.metric().slot_mask());
  REQUIRE(blades.size() == 21);
  std::array<std::array<Rational, 21>, 21> A{};
  for (int col = 0; col < 21; ++col) {
    Form b = Form::term(g.model.n(), blades[std::size_t(col)], rat(1));
    Form img = hodge(wedge(g.phi, b), g.model.metric());
    for (int row = 0; row < 21; ++row) {
      RingElement c = img.coeff(blades[std::size_t(row)]);
      if (c.is_zero()) continue;
      auto [k, q] = c.monomial_value();
      REQUIRE(k == 0);
      A[std::size_t(row)][std::size_t(col)] = q;
    }
  }
  // (A - 2)(A + 1) = 0, exactly.
  Rational trace(0);
  for (int i = 0; i < 21; ++i) {
    trace += A[std::size_t(i)][std::size_t(i)];
    for (int j = 0; j < 21; ++j) {
      Rational acc(0);
      for (int k = 0; k < 21; ++k)
        acc += A[std::size_t(i)][std::size_t(k)] * A[std::size_t(k)][std::size_t(j)];
      // A² - A - 2 = 0 entrywise.
      acc -= A[std::size_t(i)][std::size_t(j)];
      if (i == j) acc -= 2;
      CHECK(acc == 0);
    }
  }
  // Trace 2·7 - 14 = 0 fixes the eigenspace dimensions as (7, 14).
  CHECK(trace == 0);
}

TEST_CASE("wedge with the coframe lands in single components") {
  auto g = torus_extension();
  Form e1 = term7({1}, 1);
  Form phi = reframe(g.phi, 7);
  Form star = reframe(g.star_phi, 7);
  Form zeta = wedge(e1, phi);
  CHECK(zeta == term7({1, 3, 4, 7}, 1) + term7({1, 5, 6, 7}, 1) -
                    term7({1, 2, 3, 6}, 1) - term7({1, 2, 4, 5}, 1));
  CHECK(pure(zeta, 7, g));
  Form eta = term7({1, 3, 4, 7}, 1) + term7({1, 5, 6, 7}, 1) +
             term7({1, 2, 3, 6}, 1) + term7({1, 2, 4, 5}, 1);
  CHECK(pure(eta, 27, g));
  Form xi = wedge(e1, star);
  CHECK(xi == term7({1, 3, 4, 5, 6}, 1) + term7({1, 2, 3, 5, 7}, 1) -
                  term7({1, 2, 4, 6, 7}, 1));
  CHECK(pure(xi, 7, g));
  Form theta = term7({1, 3, 4, 5, 6}, 2) - term7({1, 2, 3, 5, 7}, 1) +
               term7({1, 2, 4, 6, 7}, 1);
  CHECK(pure(theta, 14, g));
}

TEST_CASE("structure forms of the base sit in fixed components") {
  auto g = torus_extension();
  Form omega = reframe(g.omega, 7);
  Form psi_p = reframe(g.psi_plus, 7);
  Form psi_m = reframe(g.psi_minus, 7);
  Form alpha = reframe(g.alpha, 7);
  CHECK(pure(psi_m, 7, g));
  CHECK(pure(rat(3) * psi_p - rat(4) * wedge(omega, alpha), 27, g));
  CHECK(pure(wedge(psi_p, alpha), 7, g));
  CHECK(pure(rat(3) * wedge(psi_m, alpha) - rat(2) * wedge(omega, omega), 27,
             g));
}

TEST_CASE("formal derivatives isolate the coclosed classes") {
  auto g = torus_extension();
  const int n = g.model.n();
  Form e1 = reframe(term7({1}, 1), n);
  Form omega = reframe(g.omega, n);
  Form psi_m = reframe(g.psi_minus, n);
  Form alpha = reframe(g.alpha, n);
  // d omega = omega ∧ e1, d psi- = psi- ∧ e1 puts the 5-form torsion in
  // the 14-dimensional class with vanishing vector part.
  Form dphi(n, 4);
  Form dstar = wedge(wedge(psi_m, e1), alpha) +
               wedge(omega, wedge(omega, e1));
  auto rep = g2_torsion_from_derivatives(g, dphi, dstar);
  CHECK(rep.x4vec.is_zero());
  CHECK(rep.dstarphi_7.is_zero());
  CHECK(!rep.dstarphi_14.is_zero());
  CHECK(rep.classes() == std::set<std::string>{"X2"});
  // d omega = ½ omega ∧ e1, d psi- = -psi- ∧ e1 flips it into the
  // 7-dimensional class.
  Form dstar2 = wedge(wedge(-psi_m, e1), alpha) +
                rat(1, 2) * wedge(omega, wedge(omega, e1));
  auto rep2 = g2_torsion_from_derivatives(g, dphi, dstar2);
  CHECK(rep2.dstarphi_14.is_zero());
  CHECK(!rep2.dstarphi_7.is_zero());
  CHECK(!rep2.x4vec.is_zero());
  CHECK(rep2.classes() == std::set<std::string>{"X4"});
}

TEST_CASE("torsion reports on catalog structures") {
  auto torus = g2_torsion(build_product(*get_example("torus6").su3));
  CHECK(torus.calibrated);
  CHECK(torus.cocalibrated);
  CHECK(torus.classes().empty());

  auto half_flat = g2_torsion(build_product(*get_example("nil3step").su3));
  CHECK(!half_flat.calibrated);
  CHECK(!half_flat.cocalibrated);
  // W1- feeds the vector part even though W4 = W5 = 0.
  CHECK(!half_flat.x4vec.is_zero());
  CHECK(half_flat.classes() == std::set<std::string>{"X2", "X3", "X4"});

  auto w2m = g2_torsion(build_product(*get_example("nil-sec3ex2").su3));
  CHECK(w2m.calibrated);
  CHECK(!w2m.cocalibrated);
  CHECK(w2m.classes() == std::set<std::string>{"X2"});

  auto warped = g2_torsion(*get_example("nil2step").g2);
  CHECK(warped.calibrated);
  CHECK(warped.cocalibrated);
  CHECK(warped.classes().empty());

  auto iwasawa = g2_torsion(*get_example("iwasawa-variant").g2);
  CHECK(iwasawa.calibrated);
  CHECK(iwasawa.cocalibrated);
  CHECK(iwasawa.nearly_parallel);
  CHECK(iwasawa.classes().empty());
}

TEST_CASE("reframe preserves blades across frame dimensions") {
  Form a = Form::term(6, Blade({0, 1, 5}), rat(3));
  Form b = reframe(a, 7);
  CHECK(b.frame_dim() == 7);
  CHECK(b.coeff(Blade({0, 1, 5})) == rat(3));
  CHECK(reframe(b, 6) == a);
}
