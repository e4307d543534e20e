#include "g2cal/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "g2cal/catalog.hpp"
#include "g2cal/correspond.hpp"
#include "g2cal/formlin.hpp"

namespace g2cal {

namespace {

/// Collects identity failures; the first failure message is kept.
struct Checker {
  bool ok = true;
  std::string first;
  int count = 0;

  void require(bool cond, const std::string& what) {
    ++count;
    if (!cond && ok) {
      ok = false;
      first = what;
    }
  }
};

RingElement rat(long long p, long long q = 1) {
  return RingElement(make_rational(p, q));
}

Form covector(int n, int slot) {
  return Form::term(n, Blade::single(slot), rat(1));
}

Form blade_form(int n, std::initializer_list<int> idx, long long c) {
  return Form::term(n, Blade(idx), rat(c));
}

/// The 6-dimensional algebras of the catalog with the standard unwarped
/// structure attached (warped entries contribute their structure constants).
std::vector<std::pair<std::string, SU3Structure>> standard_structures() {
  std::vector<std::pair<std::string, SU3Structure>> out;
  for (const auto& name : catalog_names()) {
    auto e = get_example(name);
    const FrameModel& src = e.su3 ? e.su3->model : e.g2->model;
    std::vector<Form> gens;
    for (int i = 1; i <= 6; ++i) gens.push_back(src.d_generator(i));
    FrameModel plain(6, std::move(gens), Metric::orthonormal(6));
    out.emplace_back(name, make_su3(plain, standard_omega(),
                                    standard_psi_plus(),
                                    standard_psi_minus()));
  }
  return out;
}

Form random_form(std::mt19937& rng, int n, int degree, const Metric& m) {
  Form f(n, degree);
  for (Blade b : blades_of(degree, m.slot_mask())) {
    int c = int(rng() % 7) - 3;
    if (c != 0) f.add_term(b, rat(c));
  }
  return f;
}

// ---------------------------------------------------------------------------

void check_canonical_identities(Checker& c) {
  Form w = standard_omega();
  Form pp = standard_psi_plus();
  Form pm = standard_psi_minus();
  Form w3 = wedge(w, wedge(w, w));
  c.require(wedge(w, pp).is_zero(), "omega ^ psi+ = 0");
  c.require(wedge(w, pm).is_zero(), "omega ^ psi- = 0");
  c.require(wedge(pp, pm) == rat(2, 3) * w3, "psi+ ^ psi- = (2/3) omega^3");
  c.require(w3 == blade_form(6, {1, 2, 3, 4, 5, 6}, 6), "omega^3 = 6 vol");

  auto s = make_su3(FrameModel::abelian(6), w, pp, pm);
  for (bool product : {true, false}) {
    auto g = product ? build_product(s)
                     : build_circle_extension(s, Form(6, 2));
    const Metric& m = g.model.metric();
    c.require(hodge(g.phi, m) == g.star_phi, "*phi matches the canonical form");
    Form vol = Form::term(g.phi.frame_dim(), m.volume_blade(), rat(1));
    c.require(wedge(g.phi, g.star_phi) == rat(7) * vol, "phi ^ *phi = 7 vol");
  }
}

void check_w4_w5_normalization(Checker& c) {
  Form w = standard_omega();
  Form pp = standard_psi_plus();
  Form pm = standard_psi_minus();
  Form e1 = covector(6, 1);
  auto s = make_su3(FrameModel::abelian(6), w, pp, pm);
  auto rep = su3_torsion_from_derivatives(s, wedge(w, e1), wedge(pp, e1),
                                          wedge(pm, e1));
  c.require(rep.w4 == e1, "W4 = e1");
  c.require(rep.w5 == e1, "W5 = e1");
}

void check_w2_minus_nilmanifold(Checker& c) {
  auto e = get_example("nil-sec3ex2");
  auto rep = su3_torsion(*e.su3);
  c.require(rep.classes() == std::set<std::string>{"W2-"},
            "torsion classes are exactly {W2-}");
  auto g = build_product(*e.su3);
  c.require(g2_torsion(g).calibrated, "product is calibrated");
  auto swapped = rotate_B(*e.su3, Rational(0), Rational(1));
  auto gs = g2_torsion(build_product(swapped));
  c.require(gs.cocalibrated, "swapped product is cocalibrated");
  c.require(gs.dphi_1.is_zero() && gs.dphi_7.is_zero() &&
                !gs.dphi_27.is_zero(),
            "swapped d phi is pure 27-part");
  c.require(gs.classes() == std::set<std::string>{"X3"},
            "swapped classes are exactly {X3}");
}

void check_irrep_memberships(Checker& c) {
  Form w = standard_omega();
  Form pp = standard_psi_plus();
  Form pm = standard_psi_minus();
  auto s = make_su3(FrameModel::abelian(6), w, pp, pm);
  auto g = build_circle_extension(s, Form(6, 2));  // alpha = e7
  const int n = 7;
  auto pure = [&](const Form& a, int key, const std::string& what) {
    auto comps = irrep_project(a, g);
    bool ok = comps.at(key) == a;
    for (const auto& [k, comp] : comps)
      if (k != key) ok = ok && comp.is_zero();
    c.require(ok, what);
  };
  Form alpha = covector(n, 7);
  pure(reframe(pm, n), 7, "psi- is pure 7 in degree 3");
  pure(rat(3) * reframe(pp, n) - rat(4) * wedge(reframe(w, n), alpha), 27,
       "3 psi+ - 4 omega ^ alpha is pure 27 in degree 3");
  pure(wedge(reframe(pp, n), alpha), 7, "psi+ ^ alpha is pure 7 in degree 4");
  pure(rat(3) * wedge(reframe(pm, n), alpha) -
           rat(2) * wedge(reframe(w, n), reframe(w, n)),
       27, "3 psi- ^ alpha - 2 omega^2 is pure 27 in degree 4");
  Form zeta = blade_form(n, {1, 3, 4, 7}, 1) + blade_form(n, {1, 5, 6, 7}, 1) +
              blade_form(n, {1, 2, 3, 6}, -1) + blade_form(n, {1, 2, 4, 5}, -1);
  Form eta = blade_form(n, {1, 3, 4, 7}, 1) + blade_form(n, {1, 5, 6, 7}, 1) +
             blade_form(n, {1, 2, 3, 6}, 1) + blade_form(n, {1, 2, 4, 5}, 1);
  Form xi = blade_form(n, {1, 3, 4, 5, 6}, 1) +
            blade_form(n, {1, 2, 3, 5, 7}, 1) +
            blade_form(n, {1, 2, 4, 6, 7}, -1);
  Form theta = blade_form(n, {1, 3, 4, 5, 6}, 2) +
               blade_form(n, {1, 2, 3, 5, 7}, -1) +
               blade_form(n, {1, 2, 4, 6, 7}, 1);
  c.require(zeta == wedge(covector(n, 1), g.phi), "zeta = e1 ^ phi");
  c.require(xi == wedge(covector(n, 1), g.star_phi), "xi = e1 ^ *phi");
  pure(zeta, 7, "zeta is pure 7 in degree 4");
  pure(eta, 27, "eta is pure 27 in degree 4");
  pure(xi, 7, "xi is pure 7 in degree 5");
  pure(theta, 14, "theta is pure 14 in degree 5");
}

void check_conformal_invariant(Checker& c) {
  for (const auto& [name, s] : standard_structures()) {
    auto base = su3_torsion(s);
    Form before = rat(3) * base.w4 + rat(2) * base.w5;
    for (int k : {1, 2, 3}) {
      auto rep = su3_torsion(conformal_rescale(s, k), DtMode::full);
      Form after = rat(3) * rep.w4 + rat(2) * rep.w5;
      c.require(after == before,
                "3W4 + 2W5 invariant on " + name + " at k=" +
                    std::to_string(k));
    }
  }
}

void check_warped_iwasawa(Checker& c) {
  auto e = get_example("iwasawa-variant");
  auto res = symbolic_verify_closed(*e.g2);
  c.require(res.d_phi.is_zero(), "d phi = 0 symbolically");
  c.require(res.d_star_phi.is_zero(), "d *phi = 0 symbolically");
  const auto& s = *e.su3;
  c.require(s.model.d_spatial(s.omega) ==
                RingElement::monomial(-3) * s.psi_plus,
            "spatial d omega = t^-3 psi+");
  c.require(s.model.d_spatial(s.psi_minus) ==
                Form::term(6, Blade({1, 2, 3, 4}),
                           RingElement::monomial(1, Rational(-4))),
            "spatial d psi- = -4t e1234");
}

void check_warped_two_step(Checker& c) {
  auto e = get_example("nil2step");
  auto res = symbolic_verify_closed(*e.g2);
  c.require(res.d_phi.is_zero(), "d phi = 0 symbolically");
  c.require(res.d_star_phi.is_zero(), "d *phi = 0 symbolically");
}

void check_three_step_half_flat(Checker& c) {
  auto e = get_example("nil3step");
  c.require(half_flat_check(*e.su3), "half-flat");
  c.require(e.su3->model.d_spatial(e.su3->psi_minus) ==
                blade_form(6, {1, 2, 5, 6}, -1),
            "d psi- = -e1256");
}

void check_flow_regression(Checker& c) {
  auto start = std::chrono::steady_clock::now();
  auto e = get_example("iwasawa-variant");
  std::vector<Form> gens;
  for (int i = 1; i <= 6; ++i) gens.push_back(e.su3->model.d_generator(i));
  FrameModel model(6, std::move(gens), Metric::orthonormal(6));
  // Initial data: the warped forms evaluated at t = 1 carry the same
  // coefficients as the symbolic ones.
  Form omega0(6, 2);
  omega0.add_term(Blade({1, 2}), RingElement::monomial(2));
  omega0.add_term(Blade({3, 4}), RingElement::monomial(2));
  omega0.add_term(Blade({5, 6}), RingElement::monomial(-2));
  Form pp0 = RingElement::monomial(1) * standard_psi_plus();

  auto b2 = flow_basis2();
  // Flow time s is metric arc length; the closed form in the geometric
  // parameter is t(s) = (1 + 3(s-1))^{1/3} with omega = t^2(e12+e34)
  // + t^-2 e56.
  auto max_error = [&](const std::vector<FlowState>& states) {
    double worst = 0;
    for (const auto& st : states) {
      double tg = std::cbrt(1.0 + 3.0 * (st.t - 1.0));
      for (std::size_t i = 0; i < b2.size(); ++i) {
        double expect = 0;
        if (b2[i] == Blade({1, 2}) || b2[i] == Blade({3, 4}))
          expect = tg * tg;
        if (b2[i] == Blade({5, 6})) expect = 1.0 / (tg * tg);
        worst = std::max(worst, std::abs(st.omega[i] - expect));
      }
    }
    return worst;
  };
  auto states = flow_run(model, omega0, pp0, 1.0, 1.2, 1e-3);
  double err = max_error(states);
  double compat = 0;
  for (const auto& st : states)
    compat = std::max(compat, st.compat_residual);
  c.require(err < 1e-6, "trajectory matches the closed form within 1e-6");
  c.require(compat <= 1e-8, "compatibility residual at most 1e-8");

  auto coarse = flow_run(model, omega0, pp0, 1.0, 1.2, 2e-2);
  auto fine = flow_run(model, omega0, pp0, 1.0, 1.2, 1e-2);
  auto terminal = [&](const std::vector<FlowState>& states_in) {
    return max_error({states_in.back()});
  };
  double e_coarse = terminal(coarse);
  double e_fine = terminal(fine);
  c.require(e_fine > 0 && e_coarse / e_fine >= 8.0,
            "halving dt improves the terminal error by a factor of 8");
  double elapsed = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  c.require(elapsed < 10.0, "flow regression finishes within 10 s");
}

void check_torus_bundle_criteria(Checker& c) {
  auto s = make_su3(FrameModel::abelian(6), standard_omega(),
                    standard_psi_plus(), standard_psi_minus());
  Form w = s.omega;
  auto f2 = [&](std::initializer_list<std::pair<Blade, long long>> ts) {
    Form f(6, 2);
    for (const auto& [b, v] : ts) f.add_term(b, rat(v));
    return f;
  };
  // Pure primitive (1,1) and pure (2,0)+(0,2) generators under the fixed
  // coordinate pairing.
  std::vector<Form> rho1 = {
      f2({{Blade({1, 2}), 1}, {Blade({3, 4}), -1}}),
      f2({{Blade({3, 4}), 1}, {Blade({5, 6}), -1}}),
      f2({{Blade({1, 3}), 1}, {Blade({2, 4}), 1}}),
      f2({{Blade({1, 4}), 1}, {Blade({2, 3}), -1}}),
      f2({{Blade({3, 5}), 1}, {Blade({4, 6}), 1}}),
      f2({{Blade({3, 6}), 1}, {Blade({4, 5}), -1}}),
  };
  std::vector<Form> rho2 = {
      f2({{Blade({1, 3}), 1}, {Blade({2, 4}), -1}}),
      f2({{Blade({1, 4}), 1}, {Blade({2, 3}), 1}}),
      f2({{Blade({1, 5}), 1}, {Blade({2, 6}), -1}}),
      f2({{Blade({1, 6}), 1}, {Blade({2, 5}), 1}}),
      f2({{Blade({3, 5}), 1}, {Blade({4, 6}), -1}}),
      f2({{Blade({3, 6}), 1}, {Blade({4, 5}), 1}}),
  };
  std::vector<Form> grid;
  grid.push_back(Form(6, 2));
  grid.push_back(w);
  grid.push_back(rat(-2) * w);
  for (const auto& r : rho1) grid.push_back(r);
  for (const auto& r : rho2) grid.push_back(r);
  grid.push_back(w + rho2[0]);
  grid.push_back(rho1[0] + rho2[1]);
  grid.push_back(w + rho1[0]);
  grid.push_back(w + rho1[0] + rho2[4]);
  grid.push_back(rat(2) * w - rho2[5]);
  c.require(grid.size() == 20, "grid has 20 samples");

  for (const auto& r : rho1) {
    auto rs = rho_split(r, s);
    c.require(rs.rho0.is_zero() && rs.rho2.is_zero(),
              "rho1 generator is primitive (1,1)");
  }
  for (const auto& r : rho2) {
    auto rs = rho_split(r, s);
    c.require(rs.rho0.is_zero() && rs.rho1.is_zero(),
              "rho2 generator has type (2,0)+(0,2)");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Form& rho = grid[i];
    auto rs = rho_split(rho, s);
    c.require(rs.rho0 * w + rs.rho1 + rs.rho2 == rho,
              "rho split recombines");
    auto g = build_circle_extension(s, rho);
    auto gs = g2_torsion(g);
    std::string tag = " (sample " + std::to_string(i) + ")";
    c.require(gs.calibrated == rho.is_zero(),
              "calibrated iff rho = 0" + tag);
    c.require(gs.cocalibrated == rs.rho2.is_zero(),
              "cocalibrated iff rho2 = 0" + tag);
    c.require(verify_correspondence(s, rho, g).ok(),
              "correspondence table verified" + tag);
  }
}

void check_stable_form_recovery(Checker& c) {
  Form pp = standard_psi_plus();
  Form pm = standard_psi_minus();
  auto sd = stable_data(pp);
  c.require(sd.lambda == rat(-4), "lambda(psi+) = -4");
  c.require(sd.psi_minus && *sd.psi_minus == pm, "psi- recovered exactly");
  c.require(sd.j.has_value(), "J is exact");
  if (sd.j) {
    bool ok = true;
    for (int i = 0; i < 6 && ok; ++i)
      for (int j = 0; j < 6 && ok; ++j) {
        RingElement acc;
        for (int k = 0; k < 6; ++k)
          acc += (*sd.j)[std::size_t(6 * i + k)] *
                 (*sd.j)[std::size_t(6 * k + j)];
        ok = acc == (i == j ? rat(-1) : RingElement());
      }
    c.require(ok, "J^2 = -I");
  }
  Form rotated = rat(3, 5) * pp + rat(4, 5) * pm;
  auto sr = stable_data(rotated);
  c.require(sr.psi_minus &&
                *sr.psi_minus == rat(-4, 5) * pp + rat(3, 5) * pm,
            "rotation by (3/5, 4/5) recovered");
  c.require(sr.lambda == rat(-4), "rotation preserves lambda");
  bool rejected = false;
  try {
    stable_data(blade_form(6, {1, 2, 3}, 1));
  } catch (const StabilityError&) {
    rejected = true;
  }
  c.require(rejected, "e123 rejected as non-stable");
  c.require(stable_data(rat(3) * pp).lambda == rat(-324),
            "lambda scales quartically");
}

void check_property_suites(Checker& c) {
  std::mt19937 rng(97);
  const Metric m6 = Metric::orthonormal(6);
  const Metric m7 = Metric::orthonormal(7);

  // Exterior-algebra laws, 100 random cases each.
  for (int i = 0; i < 100; ++i) {
    int p = 1 + int(rng() % 2), q = 1 + int(rng() % 2),
        r = 1 + int(rng() % 2);
    Form a = random_form(rng, 6, p, m6);
    Form b = random_form(rng, 6, q, m6);
    Form d = random_form(rng, 6, r, m6);
    c.require(wedge(wedge(a, b), d) == wedge(a, wedge(b, d)),
              "wedge associativity");
    Form ba = wedge(b, a);
    c.require(wedge(a, b) == (p * q % 2 ? -ba : ba),
              "graded anticommutativity");
    Form cc = random_form(rng, 6, q + 1, m6);
    Form e1f = random_form(rng, 6, 1, m6);
    c.require(inner(wedge(e1f, b), cc, m6) ==
                  inner(b, contract(e1f, cc, m6), m6),
              "contraction adjoint to wedge");
    int k = 1 + int(rng() % 5);
    Form h = random_form(rng, 6, k, m6);
    c.require(hodge(hodge(h, m6), m6) == (k % 2 ? -h : h),
              "hodge involution in 6 slots");
    Form h7 = random_form(rng, 7, 1 + int(rng() % 6), m7);
    c.require(hodge(hodge(h7, m7), m7) == h7,
              "hodge involution in 7 slots");
  }

  // Leibniz and d² on every catalog model, 100 random cases each.
  for (const auto& name : catalog_names()) {
    auto e = get_example(name);
    const FrameModel& model = e.su3 ? e.su3->model : e.g2->model;
    const Metric& met = model.metric();
    const int n = model.n();
    for (int i = 0; i < 100; ++i) {
      int p = 1 + int(rng() % 2), q = 1 + int(rng() % 2);
      Form a = random_form(rng, n, p, met);
      Form b = random_form(rng, n, q, met);
      Form lhs = model.d(wedge(a, b));
      Form rhs = wedge(model.d(a), b) +
                 (p % 2 ? -wedge(a, model.d(b)) : wedge(a, model.d(b)));
      c.require(lhs == rhs, "Leibniz rule on " + name);
      Form f = random_form(rng, n, 1 + int(rng() % 3), met);
      c.require(model.d(model.d(f)).is_zero(), "d^2 = 0 on " + name);
    }
  }

  // Projection completeness and orthogonality, 200 random forms per degree.
  auto s = make_su3(FrameModel::abelian(6), standard_omega(),
                    standard_psi_plus(), standard_psi_minus());
  auto g = build_circle_extension(s, Form(6, 2));
  const std::map<int, std::vector<int>> expected_dims = {
      {2, {7, 14}}, {3, {1, 7, 27}}, {4, {1, 7, 27}}, {5, {7, 14}}};
  for (const auto& [deg, dims] : expected_dims) {
    auto basis = form_basis(deg, m7);
    // Exact rank of each projection operator on the blade basis.
    std::map<int, ExactMat<RingFraction>> mats;
    for (int dim : dims)
      mats.emplace(dim, ExactMat<RingFraction>(int(basis.size()),
                                               int(basis.size())));
    for (std::size_t col = 0; col < basis.size(); ++col) {
      auto comps = irrep_project(Form::term(7, basis[col], rat(1)), g);
      for (const auto& [dim, comp] : comps)
        for (std::size_t row = 0; row < basis.size(); ++row)
          mats.at(dim).at(int(row), int(col)) =
              RingFraction(comp.coeff(basis[row]));
    }
    for (int dim : dims)
      c.require(exact_rank(mats.at(dim)) == dim,
                "component rank " + std::to_string(dim) + " in degree " +
                    std::to_string(deg));
    for (int i = 0; i < 200; ++i) {
      Form a = random_form(rng, 7, deg, m7);
      auto comps = irrep_project(a, g);
      Form sum(7, deg);
      for (const auto& [dim, comp] : comps) sum += comp;
      c.require(sum == a, "components sum to the input in degree " +
                              std::to_string(deg));
      for (auto it = comps.begin(); it != comps.end(); ++it)
        for (auto jt = std::next(it); jt != comps.end(); ++jt)
          c.require(inner(it->second, jt->second, m7).is_zero(),
                    "components orthogonal in degree " +
                        std::to_string(deg));
    }
  }

  // The two contraction identities on every catalog 6-structure.
  for (const auto& name : catalog_names()) {
    auto e = get_example(name);
    if (!e.su3) continue;
    const auto& st = *e.su3;
    const Metric& met = st.model.metric();
    Form dpp = st.model.d_spatial(st.psi_plus);
    Form dpm = st.model.d_spatial(st.psi_minus);
    c.require(contract(st.psi_plus, dpm, met) ==
                  apply_J(contract(st.psi_plus, dpp, met)),
              "psi+ hook d psi- = J(psi+ hook d psi+) on " + name);
    auto tp = type_split(dpp);
    auto tm = type_split(dpm);
    auto comp = [&](std::map<std::pair<int, int>, CForm>& ts) {
      auto it = ts.find({3, 1});
      return it == ts.end() ? CForm(6, 4) : it->second;
    };
    CForm a = comp(tp), b = comp(tm);
    c.require(a.re == -b.im && a.im == b.re,
              "(d psi+)^{3,1} = i (d psi-)^{3,1} on " + name);
  }
}

}  // namespace

std::vector<CheckResult> run_acceptance() {
  using CheckFn = std::function<void(Checker&)>;
  const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"canonical-identities", check_canonical_identities},
      {"w4-w5-normalization", check_w4_w5_normalization},
      {"w2-minus-nilmanifold", check_w2_minus_nilmanifold},
      {"irrep-memberships", check_irrep_memberships},
      {"conformal-invariant", check_conformal_invariant},
      {"warped-iwasawa", check_warped_iwasawa},
      {"warped-two-step", check_warped_two_step},
      {"three-step-half-flat", check_three_step_half_flat},
      {"flow-regression", check_flow_regression},
      {"torus-bundle-criteria", check_torus_bundle_criteria},
      {"stable-form-recovery", check_stable_form_recovery},
      {"property-suites", check_property_suites},
  };
  std::vector<CheckResult> results;
  for (const auto& [name, fn] : checks) {
    Checker c;
    std::string detail;
    try {
      fn(c);
      detail = c.ok ? std::to_string(c.count) + " identities"
                    : c.first;
    } catch (const std::exception& ex) {
      c.ok = false;
      detail = std::string("exception: ") + ex.what();
    }
    results.push_back(CheckResult{name, c.ok, detail});
  }
  return results;
}

}  // namespace g2cal
