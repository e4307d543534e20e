#include "g2cal/g2.hpp"

#include "g2cal/formlin.hpp"

namespace g2cal {

Form reframe(const Form& a, int n) {
  Form out(n, a.degree());
  for (const auto& [b, c] : a.terms()) out.add_term(b, c);
  return out;
}

namespace {

Form slot_covector(int n, int slot) {
  return Form::term(n, Blade::single(slot), RingElement(Rational(1)));
}

std::vector<int> frame_slots(const Metric& m) {
  std::vector<int> out;
  if (m.has_dt) out.push_back(Blade::kDt);
  for (int i = 1; i <= m.n; ++i) out.push_back(i);
  return out;
}

}  // namespace

G2Structure make_g2(FrameModel model, Form alpha, Form omega, Form psi_plus,
                    Form psi_minus, Form rho, std::optional<SU3Structure> base) {
  const Metric& m = model.metric();
  if (m.slot_count() != 7)
    throw ValidationError("G2-structures need a 7-slot frame");
  if (alpha.degree() != 1 || omega.degree() != 2 || psi_plus.degree() != 3)
    throw ValidationError("structure forms have wrong degrees");
  if (!(inner(alpha, alpha, m) == RingElement(Rational(1))))
    throw ValidationError("alpha must be a unit 1-form");
  Form phi = wedge(omega, alpha) + psi_plus;
  Form star_phi = wedge(psi_minus, alpha) +
                  RingElement(Rational(1, 2)) * wedge(omega, omega);
  if (!(hodge(phi, m) == star_phi))
    throw ValidationError("psi- ∧ alpha + ½ omega² must equal *phi");
  Form vol = Form::term(phi.frame_dim(), m.volume_blade(), m.volume_scale());
  if (!(wedge(phi, star_phi) == RingElement(Rational(7)) * vol))
    throw ValidationError("phi ∧ *phi must equal 7 · vol");
  return G2Structure{std::move(model), std::move(alpha),     std::move(omega),
                     std::move(psi_plus), std::move(psi_minus), std::move(phi),
                     std::move(star_phi), std::move(rho),    std::move(base)};
}

G2Structure build_product(const SU3Structure& s) {
  Metric m = s.model.metric();
  if (m.has_dt) throw ValidationError("base model already has a dt slot");
  m.has_dt = true;
  std::vector<Form> gens;
  for (int i = 1; i <= 6; ++i) gens.push_back(s.model.d_generator(i));
  FrameModel model(6, std::move(gens), m);
  Form alpha = slot_covector(6, Blade::kDt);
  return make_g2(std::move(model), alpha, s.omega, s.psi_plus, s.psi_minus,
                 Form(6, 2), s);
}

G2Structure build_circle_extension(const SU3Structure& s, const Form& rho) {
  if (s.model.warped())
    throw ValidationError("circle extensions need an unwarped base");
  if (rho.degree() != 2) throw ValidationError("rho must be a 2-form");
  if (!s.model.d_spatial(rho).is_zero())
    throw ValidationError("curvature rho must be closed");
  std::vector<Form> gens;
  for (int i = 1; i <= 6; ++i) gens.push_back(reframe(s.model.d_generator(i), 7));
  gens.push_back(reframe(rho, 7));
  FrameModel model(7, std::move(gens), Metric::orthonormal(7));
  Form alpha = slot_covector(7, 7);
  return make_g2(std::move(model), alpha, reframe(s.omega, 7),
                 reframe(s.psi_plus, 7), reframe(s.psi_minus, 7),
                 reframe(rho, 7), s);
}

G2Structure build_cone(const SU3Structure& s) {
  Metric m = s.model.metric();
  if (m.has_dt || !m.trivial())
    throw ValidationError("cones need an unwarped orthonormal base");
  m.has_dt = true;
  for (int i = 1; i <= 6; ++i) m.scales[i] = RingElement::monomial(1);
  std::vector<Form> gens;
  for (int i = 1; i <= 6; ++i) gens.push_back(s.model.d_generator(i));
  FrameModel model(6, std::move(gens), m);
  Form alpha = slot_covector(6, Blade::kDt);
  return make_g2(std::move(model), alpha,
                 RingElement::monomial(2) * s.omega,
                 RingElement::monomial(3) * s.psi_plus,
                 RingElement::monomial(3) * s.psi_minus, Form(6, 2), s);
}

std::map<int, Form> irrep_project(const Form& a, const G2Structure& g) {
  const Metric& m = g.model.metric();
  const int deg = a.degree();
  const int n = a.frame_dim();
  if (deg < 2 || deg > 5) throw FormError("irrep projection needs degree 2..5");
  if (deg >= 4) {
    // Hodge conjugation: the components of a are the duals of the
    // components of *a (star is an isometry and ** = id in 7 slots).
    auto dual = irrep_project(hodge(a, m), g);
    std::map<int, Form> out;
    for (const auto& [dim, comp] : dual) out.emplace(dim, hodge(comp, m));
    return out;
  }
  auto slots = frame_slots(m);
  if (deg == 2) {
    std::vector<Form> span7;
    for (int slot : slots)
      span7.push_back(contract(slot_covector(n, slot), g.phi, m));
    Form p7 = OrthoProjector(span7, m).apply(a);
    return {{7, p7}, {14, a - p7}};
  }
  Form p1 = OrthoProjector({g.phi}, m).apply(a);
  std::vector<Form> span7;
  for (int slot : slots)
    span7.push_back(hodge(wedge(slot_covector(n, slot), g.phi), m));
  Form p7 = OrthoProjector(span7, m).apply(a);
  return {{1, p1}, {7, p7}, {27, a - p1 - p7}};
}

std::set<std::string> G2TorsionReport::classes() const {
  std::set<std::string> out;
  if (!dphi_1.is_zero()) out.insert("X1");
  if (!dstarphi_14.is_zero()) out.insert("X2");
  if (!dphi_27.is_zero()) out.insert("X3");
  if (!dphi_7.is_zero() || !dstarphi_7.is_zero()) out.insert("X4");
  return out;
}

G2TorsionReport g2_torsion_from_derivatives(const G2Structure& g,
                                            const Form& dphi,
                                            const Form& dstar) {
  const Metric& m = g.model.metric();
  const int n = g.phi.frame_dim();

  G2TorsionReport rep{{},         Form(n, 4), Form(n, 4), Form(n, 5),
                      Form(n, 5), {},         Form(n, 1)};

  auto comps4 = irrep_project(dphi, g);
  {
    auto c = solve_combination({g.star_phi}, comps4.at(1));
    if (!c) throw FormError("scalar part of dphi is not a *phi multiple");
    rep.dphi_1 = (*c)[0];
  }
  rep.dphi_7 = comps4.at(7);
  rep.dphi_27 = comps4.at(27);

  auto comps5 = irrep_project(dstar, g);
  rep.dstarphi_7 = comps5.at(7);
  rep.dstarphi_14 = comps5.at(14);

  {
    Form six = wedge(g.phi, dphi);
    Blade vol = m.volume_blade();
    auto c = RingElement::divide_exact(six.coeff(vol), m.volume_scale());
    if (!c) throw RingError("phi ∧ dphi left the Laurent ring");
    rep.x1 = *c;
  }
  rep.x4vec = hodge(wedge(hodge(dstar, m), g.star_phi), m);

  rep.calibrated = dphi.is_zero();
  rep.cocalibrated = dstar.is_zero();
  rep.nearly_parallel = rep.cocalibrated && rep.dphi_7.is_zero() &&
                        rep.dphi_27.is_zero();
  return rep;
}

G2TorsionReport g2_torsion(const G2Structure& g) {
  return g2_torsion_from_derivatives(g, g.model.d(g.phi),
                                     g.model.d(g.star_phi));
}

}  // namespace g2cal
