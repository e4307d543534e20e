#include "g2cal/catalog.hpp"

#include <sstream>

#include "g2cal/model.hpp"

namespace g2cal {

namespace {

Form two_form(int n, std::initializer_list<std::pair<Blade, Rational>> ts) {
  Form f(n, 2);
  for (const auto& [b, c] : ts) f.add_term(b, RingElement(c));
  return f;
}

/// Flat torus with the standard structure; every torsion component zero.
CatalogEntry make_torus6() {
  CatalogEntry e;
  e.name = "torus6";
  e.note = "flat 6-torus with the standard structure; torsion-free";
  e.su3 = make_su3(FrameModel::abelian(6), standard_omega(),
                   standard_psi_plus(), standard_psi_minus());
  e.expect_half_flat = true;
  return e;
}

/// Nilpotent algebra d e3 = e25, d e6 = -e24 with the standard structure;
/// only the primitive (1,1) part of d psi- survives.
CatalogEntry make_nil_sec3ex2() {
  CatalogEntry e;
  e.name = "nil-sec3ex2";
  e.note = "2-step nilmanifold (d e3 = e25, d e6 = -e24); torsion in W2-";
  std::vector<Form> gens(6, Form(6, 2));
  gens[2] = two_form(6, {{Blade({2, 5}), Rational(1)}});
  gens[5] = two_form(6, {{Blade({2, 4}), Rational(-1)}});
  e.su3 = make_su3(FrameModel(6, std::move(gens), Metric::orthonormal(6)),
                   standard_omega(), standard_psi_plus(),
                   standard_psi_minus());
  e.expected_classes = {"W2-"};
  e.expect_half_flat = true;
  return e;
}

/// 3-step nilpotent algebra d e3 = e25, d e6 = e14 - e23; half-flat with
/// d psi- = -e1256.
CatalogEntry make_nil3step() {
  CatalogEntry e;
  e.name = "nil3step";
  e.note = "3-step nilmanifold (d e3 = e25, d e6 = e14 - e23); half-flat";
  std::vector<Form> gens(6, Form(6, 2));
  gens[2] = two_form(6, {{Blade({2, 5}), Rational(1)}});
  gens[5] = two_form(6, {{Blade({1, 4}), Rational(1)},
                         {Blade({2, 3}), Rational(-1)}});
  e.su3 = make_su3(FrameModel(6, std::move(gens), Metric::orthonormal(6)),
                   standard_omega(), standard_psi_plus(),
                   standard_psi_minus());
  e.expected_classes = {"W1-", "W2-", "W3"};
  e.expect_half_flat = true;
  return e;
}

std::vector<Form> iwasawa_generators() {
  std::vector<Form> gens(6, Form(6, 2));
  gens[4] = two_form(6, {{Blade({1, 4}), Rational(-1)},
                         {Blade({2, 3}), Rational(-1)}});
  gens[5] = two_form(6, {{Blade({1, 3}), Rational(-1)},
                         {Blade({2, 4}), Rational(1)}});
  return gens;
}

/// Warped structure on the Iwasawa-type algebra d e5 = -e14 - e23,
/// d e6 = -e13 + e24: coframe weights (t,t,t,t,1/t,1/t) with unit covector
/// t^2 dt on the parameter direction; omega = t^2(e12 + e34) + t^-2 e56 and
/// psi± = t · standard. phi and *phi are symbolically closed.
CatalogEntry make_iwasawa_variant() {
  CatalogEntry e;
  e.name = "iwasawa-variant";
  e.note =
      "warped structure on the Iwasawa-type algebra; closed phi and *phi";
  Metric met{6, true, {}};
  for (int i = 1; i <= 4; ++i) met.scales[i] = RingElement::monomial(1);
  met.scales[5] = RingElement::monomial(-1);
  met.scales[6] = RingElement::monomial(-1);
  met.scales[0] = RingElement::monomial(2);
  FrameModel model(6, iwasawa_generators(), met);

  Form omega(6, 2);
  omega.add_term(Blade({1, 2}), RingElement::monomial(2));
  omega.add_term(Blade({3, 4}), RingElement::monomial(2));
  omega.add_term(Blade({5, 6}), RingElement::monomial(-2));
  Form pp = RingElement::monomial(1) * standard_psi_plus();
  Form pm = RingElement::monomial(1) * standard_psi_minus();
  e.su3 = make_su3(model, omega, pp, pm);
  e.expected_classes = {"W1-", "W2-"};
  e.expect_half_flat = true;

  Form alpha = Form::term(6, Blade::single(0), RingElement::monomial(2));
  e.g2 = make_g2(model, alpha, omega, pp, pm, Form(6, 2), *e.su3);
  e.expect_closed = true;
  return e;
}

/// Warped structure on the 2-step algebra d e5 = -e14 - e23, d e6 = e24:
/// coframe weights (t,t^2,t,t^2,t^-2,t^-1) with unit covector 2 t^4 dt;
/// the blade-weighted forms close phi and *phi but the 3-form weights are
/// incompatible with the fixed coordinate pairing, so the entry is
/// 7-dimensional only.
CatalogEntry make_nil2step() {
  CatalogEntry e;
  e.name = "nil2step";
  e.note = "warped 2-step nilmanifold structure; closed phi and *phi";
  std::vector<Form> gens(6, Form(6, 2));
  gens[4] = two_form(6, {{Blade({1, 4}), Rational(-1)},
                         {Blade({2, 3}), Rational(-1)}});
  gens[5] = two_form(6, {{Blade({2, 4}), Rational(1)}});
  Metric met{6, true, {}};
  const int wts[7] = {0, 1, 2, 1, 2, -2, -1};
  for (int i = 1; i <= 6; ++i) met.scales[i] = RingElement::monomial(wts[i]);
  met.scales[0] = RingElement::monomial(4, Rational(2));
  FrameModel model(6, std::move(gens), met);

  Form omega(6, 2);
  omega.add_term(Blade({1, 2}), RingElement::monomial(3));
  omega.add_term(Blade({3, 4}), RingElement::monomial(3));
  omega.add_term(Blade({5, 6}), RingElement::monomial(-3));
  auto weight = [&](Blade b) {
    int s = 0;
    for (int i : b.indices()) s += wts[i];
    return s;
  };
  Form pp(6, 3), pm(6, 3);
  Form spp = standard_psi_plus();
  Form spm = standard_psi_minus();
  for (const auto& [b, c] : spp.terms())
    pp.add_term(b, RingElement::monomial(weight(b)) * c);
  for (const auto& [b, c] : spm.terms())
    pm.add_term(b, RingElement::monomial(weight(b)) * c);
  Form alpha = Form::term(6, Blade::single(0), RingElement::monomial(4, Rational(2)));
  e.g2 = make_g2(model, alpha, omega, pp, pm, Form(6, 2));
  e.expect_closed = true;
  return e;
}

void verify_entry(const CatalogEntry& e) {
  if (e.su3) {
    auto rep = su3_torsion(*e.su3);
    if (rep.classes() != e.expected_classes)
      throw CatalogError("catalog entry '" + e.name +
                         "' does not reproduce its stated torsion classes");
    if (half_flat_check(*e.su3) != e.expect_half_flat)
      throw CatalogError("catalog entry '" + e.name +
                         "' does not match its half-flat expectation");
  }
  if (e.g2 && e.expect_closed) {
    auto res = symbolic_verify_closed(*e.g2);
    if (!res.closed())
      throw CatalogError("catalog entry '" + e.name +
                         "' is expected to have closed phi and *phi");
  }
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{
      "torus6", "nil-sec3ex2", "nil3step", "iwasawa-variant", "nil2step"};
  return names;
}

CatalogEntry get_example(const std::string& name) {
  CatalogEntry e;
  if (name == "torus6") e = make_torus6();
  else if (name == "nil-sec3ex2") e = make_nil_sec3ex2();
  else if (name == "nil3step") e = make_nil3step();
  else if (name == "iwasawa-variant") e = make_iwasawa_variant();
  else if (name == "nil2step") e = make_nil2step();
  else {
    std::ostringstream msg;
    msg << "unknown example '" << name << "'; available:";
    for (const auto& n : catalog_names()) msg << ' ' << n;
    throw CatalogError(msg.str());
  }
  verify_entry(e);
  return e;
}

std::string export_entry(const CatalogEntry& e) {
  ModelFile file{e.su3   ? e.su3->model
                 : e.g2 ? e.g2->model
                        : FrameModel::abelian(6),
                 {}, {}, {}, {}, false};
  if (e.su3) {
    file.omega = e.su3->omega;
    file.psi_plus = e.su3->psi_plus;
    file.psi_minus = e.su3->psi_minus;
  } else if (e.g2) {
    file.omega = e.g2->omega;
    file.psi_plus = e.g2->psi_plus;
    file.psi_minus = e.g2->psi_minus;
    if (!e.g2->rho.is_zero()) file.rho = e.g2->rho;
  }
  return format_model(file);
}

}  // namespace g2cal
