#include "g2cal/su3.hpp"

#include <array>

#include "g2cal/formlin.hpp"

namespace g2cal {

namespace {

// Complex scalar over the Laurent ring.
struct CC {
  RingElement re, im;
  CC() = default;
  CC(RingElement r, RingElement i) : re(std::move(r)), im(std::move(i)) {}
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  CC operator*(const CC& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CC& operator+=(const CC& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
};

const RingElement kHalf{Rational(1, 2)};

// Expansion of a coordinate covector in the theta basis, as (coeff, slot)
// pairs. Slot 2j-1 stands for theta^j, slot 2j for its conjugate.
std::array<std::pair<CC, int>, 2> theta_expansion(int index) {
  int j = (index + 1) / 2;
  if (index % 2 == 1) {
    // e^{2j-1} = (theta^j + conj)/2
    return {{{CC{kHalf, {}}, 2 * j - 1}, {CC{kHalf, {}}, 2 * j}}};
  }
  // e^{2j} = (-i theta^j + i conj)/2
  return {{{CC{{}, -kHalf}, 2 * j - 1}, {CC{{}, kHalf}, 2 * j}}};
}

std::array<std::pair<CC, int>, 2> e_expansion(int theta_slot) {
  int j = (theta_slot + 1) / 2;
  RingElement one{Rational(1)};
  if (theta_slot % 2 == 1) {
    // theta^j = e^{2j-1} + i e^{2j}
    return {{{CC{one, {}}, 2 * j - 1}, {CC{{}, one}, 2 * j}}};
  }
  return {{{CC{one, {}}, 2 * j - 1}, {CC{{}, -one}, 2 * j}}};
}

// Applies a slotwise basis expansion to every blade of a complex form.
template <class Expansion>
std::map<Blade, CC> change_basis(const std::map<Blade, CC>& terms,
                                 const Expansion& expand) {
  std::map<Blade, CC> out;
  for (const auto& [blade, coeff] : terms) {
    std::vector<std::pair<CC, Blade>> partial{{coeff, Blade()}};
    for (int idx : blade.indices()) {
      std::vector<std::pair<CC, Blade>> next;
      for (const auto& [c, b] : partial)
        for (const auto& [fc, slot] : expand(idx)) {
          Blade s = Blade::single(slot);
          int ws = wedge_sign(b, s);
          if (ws == 0) continue;
          CC nc = c * fc;
          if (ws < 0) nc = CC{-nc.re, -nc.im};
          next.emplace_back(nc, blade_union(b, s));
        }
      partial = std::move(next);
    }
    for (const auto& [c, b] : partial) {
      if (c.is_zero()) continue;
      out[b] += c;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

Form apply_J(const Form& a) {
  Form out(a.frame_dim(), a.degree());
  for (const auto& [blade, coeff] : a.terms()) {
    Blade image;
    int sign = 1;
    for (int idx : blade.indices()) {
      int target;
      if (idx == Blade::kDt) {
        target = idx;
      } else if (idx % 2 == 1) {
        target = idx + 1;  // J e^{2j-1} = -e^{2j}
        sign = -sign;
      } else {
        target = idx - 1;  // J e^{2j} = e^{2j-1}
      }
      Blade s = Blade::single(target);
      int ws = wedge_sign(image, s);
      sign *= ws;
      image = blade_union(image, s);
    }
    out.add_term(image, sign < 0 ? -coeff : coeff);
  }
  return out;
}

std::map<std::pair<int, int>, CForm> type_split(const Form& a) {
  auto [pure, rest] = a.split_dt();
  (void)rest;
  std::map<Blade, CC> terms;
  for (const auto& [b, c] : pure.terms()) terms[b] = CC{c, {}};
  auto theta_terms = change_basis(terms, theta_expansion);

  std::map<std::pair<int, int>, std::map<Blade, CC>> grouped;
  for (const auto& [b, c] : theta_terms) {
    int p = 0, q = 0;
    for (int slot : b.indices()) (slot % 2 == 1 ? p : q)++;
    grouped[{p, q}][b] = c;
  }
  std::map<std::pair<int, int>, CForm> out;
  for (const auto& [pq, part] : grouped) {
    auto back = change_basis(part, e_expansion);
    CForm f(a.frame_dim(), a.degree());
    for (const auto& [b, c] : back) {
      f.re.add_term(b, c.re);
      f.im.add_term(b, c.im);
    }
    if (!f.is_zero()) out.emplace(pq, std::move(f));
  }
  return out;
}

Form real_type_component(const Form& a, int p, int q) {
  auto split = type_split(a);
  Form out(a.frame_dim(), a.degree());
  auto add = [&](int pp, int qq) {
    auto it = split.find({pp, qq});
    if (it != split.end()) out += it->second.re;
  };
  add(p, q);
  if (p != q) add(q, p);
  return out;
}

Form standard_omega(int n) {
  Form w(n, 2);
  w.add_term({1, 2}, RingElement(Rational(1)));
  w.add_term({3, 4}, RingElement(Rational(1)));
  w.add_term({5, 6}, RingElement(Rational(1)));
  return w;
}

Form standard_psi_plus(int n) {
  Form p(n, 3);
  p.add_term({1, 3, 5}, RingElement(Rational(1)));
  p.add_term({1, 4, 6}, RingElement(Rational(-1)));
  p.add_term({2, 3, 6}, RingElement(Rational(-1)));
  p.add_term({2, 4, 5}, RingElement(Rational(-1)));
  return p;
}

Form standard_psi_minus(int n) {
  Form p(n, 3);
  p.add_term({1, 3, 6}, RingElement(Rational(1)));
  p.add_term({1, 4, 5}, RingElement(Rational(1)));
  p.add_term({2, 3, 5}, RingElement(Rational(1)));
  p.add_term({2, 4, 6}, RingElement(Rational(-1)));
  return p;
}

SU3Structure make_su3(FrameModel model, Form omega, Form psi_plus,
                      Form psi_minus) {
  if (model.n() != 6) throw ValidationError("SU(3)-structures need a 6-frame");
  if (omega.degree() != 2 || psi_plus.degree() != 3 || psi_minus.degree() != 3)
    throw ValidationError("structure forms have wrong degrees");
  for (const Form* f : {&omega, &psi_plus, &psi_minus})
    for (const auto& [b, c] : f->terms()) {
      (void)c;
      if (b.has_dt())
        throw ValidationError("structure forms may not contain dt");
    }
  if (!wedge(omega, psi_plus).is_zero())
    throw ValidationError("omega ∧ psi+ must vanish");
  if (!wedge(omega, psi_minus).is_zero())
    throw ValidationError("omega ∧ psi- must vanish");
  Form omega3 = wedge(omega, wedge(omega, omega));
  Form lhs = wedge(psi_plus, psi_minus);
  if (!(lhs == RingElement(Rational(2, 3)) * omega3))
    throw ValidationError("psi+ ∧ psi- must equal (2/3) omega³");
  Blade vol({1, 2, 3, 4, 5, 6});
  RingElement v = omega3.coeff(vol);
  if (v.is_zero() || !v.is_monomial())
    throw ValidationError("omega³ must be an invertible multiple of the volume");
  if (!real_type_component(omega, 2, 0).is_zero())
    throw ValidationError("omega must have type (1,1)");
  if (!real_type_component(psi_plus, 2, 1).is_zero())
    throw ValidationError("psi+ must have type (3,0)+(0,3)");
  return SU3Structure{std::move(model), std::move(omega), std::move(psi_plus),
                      std::move(psi_minus)};
}

PrimitiveSplit primitive_decompose(const Form& a, const SU3Structure& s) {
  const int n = a.frame_dim();
  const int deg = a.degree();
  if (deg > 4) throw FormError("primitive decomposition needs degree <= 4");
  for (const auto& [b, c] : a.terms()) {
    (void)c;
    if (b.has_dt()) throw FormError("primitive decomposition is dt-free");
  }
  const Form& w = s.omega;
  if (deg <= 1)
    return {a, Form(n, deg), Form(n, deg >= 2 ? deg - 2 : 0)};
  if (deg == 2) {
    Form w3 = wedge(w, wedge(w, w));
    Form aw2 = wedge(a, wedge(w, w));
    Blade vol({1, 2, 3, 4, 5, 6});
    auto c = RingElement::divide_exact(aw2.coeff(vol), w3.coeff(vol));
    if (!c) throw RingError("omega-trace left the Laurent ring");
    Form rest = Form::scalar(n, *c);
    Form wpart = *c * w;
    return {a - wpart, wpart, rest};
  }
  if (deg == 3) {
    std::vector<Form> span;
    Form w2 = wedge(w, w);
    for (int i = 1; i <= 6; ++i)
      span.push_back(wedge(w2, Form::term(n, Blade::single(i), RingElement(Rational(1)))));
    auto x = solve_combination(span, wedge(w, a));
    if (!x) throw FormError("Lefschetz solve failed in degree 3");
    Form gamma(n, 1);
    for (int i = 1; i <= 6; ++i)
      gamma.add_term(Blade::single(i), (*x)[std::size_t(i - 1)]);
    Form wpart = wedge(w, gamma);
    return {a - wpart, wpart, gamma};
  }
  // Degree 4: everything is omega-divisible; invert the Lefschetz map.
  std::vector<Form> span;
  auto basis2 = blades_of(2, Metric::orthonormal(6).slot_mask());
  for (Blade b : basis2)
    span.push_back(wedge(w, Form::term(n, b, RingElement(Rational(1)))));
  auto x = solve_combination(span, a);
  if (!x) throw FormError("Lefschetz solve failed in degree 4");
  Form b2(n, 2);
  for (std::size_t i = 0; i < basis2.size(); ++i) b2.add_term(basis2[i], (*x)[i]);
  return {Form(n, 4), a, b2};
}

RhoSplit rho_split(const Form& rho, const SU3Structure& s) {
  if (rho.degree() != 2) throw FormError("rho must be a 2-form");
  auto prim = primitive_decompose(rho, s);
  RingElement rho0 = prim.rest.coeff(Blade());
  Form rho1 = real_type_component(prim.primitive, 1, 1);
  Form rho2 = real_type_component(prim.primitive, 2, 0);
  if (!(rho1 + rho2 == prim.primitive))
    throw FormError("type split of rho is inconsistent");
  return {rho0, rho1, rho2};
}

namespace {

SU3TorsionReport torsion_core(const SU3Structure& s, const Form& dw,
                              const Form& dp, const Form& dm) {
  const int n = 6;
  const Form& w = s.omega;
  const Metric& metric = s.model.metric();
  SU3TorsionReport rep{{},      {},          Form(n, 2), Form(n, 2),
                       Form(n, 3), Form(n, 1), Form(n, 1)};

  const Blade vol({1, 2, 3, 4, 5, 6});
  Form w2 = wedge(w, w);
  Form w3 = wedge(w, w2);
  const RingElement vol_coeff = w3.coeff(vol);

  auto scalar_ratio = [&](const Form& six_form) {
    auto c = RingElement::divide_exact(six_form.coeff(vol), vol_coeff);
    if (!c) throw RingError("W1 component left the Laurent ring");
    return *c;
  };
  rep.w1p = scalar_ratio(wedge(dp, w));
  rep.w1m = scalar_ratio(wedge(dm, w));

  auto w2_solve = [&](const Form& d_psi, const RingElement& w1) {
    Form target = real_type_component(d_psi, 2, 2) - w1 * w2;
    std::vector<Form> span;
    auto basis2 = blades_of(2, Metric::orthonormal(6).slot_mask());
    for (Blade b : basis2)
      span.push_back(wedge(Form::term(n, b, RingElement(Rational(1))), w));
    auto x = solve_combination(span, target);
    if (!x) throw FormError("W2 solve failed");
    Form out(n, 2);
    for (std::size_t i = 0; i < basis2.size(); ++i) out.add_term(basis2[i], (*x)[i]);
    return out;
  };
  rep.w2p = w2_solve(dp, rep.w1p);
  rep.w2m = w2_solve(dm, rep.w1m);

  Form dw21 = real_type_component(dw, 2, 1);
  {
    std::vector<Form> span;
    for (int i = 1; i <= 6; ++i)
      span.push_back(
          wedge(w2, Form::term(n, Blade::single(i), RingElement(Rational(1)))));
    auto x = solve_combination(span, wedge(w, dw21));
    if (!x) throw FormError("W3 solve failed");
    Form gamma(n, 1);
    for (int i = 1; i <= 6; ++i)
      gamma.add_term(Blade::single(i), (*x)[std::size_t(i - 1)]);
    rep.w3 = dw21 - wedge(w, gamma);
  }

  // W4 and W5 are the coefficient 1-forms of the omega ∧ Λ¹ part of d omega
  // and the psi+ ∧ Λ¹ part of d psi+, extracted by an exact Gram solve
  // (irreducible parts are metric-orthogonal, so this isolates them). This
  // agrees with ½ omega ⌟ d omega on dt-free forms but stays correct for the
  // dt components of conformally rescaled frames.
  auto coeff_extract = [&](const Form& dform, const Form& carrier) {
    std::vector<int> slots;
    if (metric.has_dt && !dform.split_dt().second.is_zero())
      slots.push_back(Blade::kDt);
    for (int i = 1; i <= 6; ++i) slots.push_back(i);
    std::vector<Form> betas, span;
    for (int slot : slots) {
      betas.push_back(Form::term(n, Blade::single(slot), RingElement(Rational(1))));
      span.push_back(wedge(carrier, betas.back()));
    }
    auto x = orthogonal_coefficients(span, dform, metric);
    Form out(n, 1);
    for (std::size_t i = 0; i < slots.size(); ++i)
      out.add_term(Blade::single(slots[i]), x[i]);
    return out;
  };
  rep.w4 = coeff_extract(dw, w);
  rep.w5 = coeff_extract(dp, s.psi_plus);

  // Exact rank of the 2 x (1 + 15) coefficient matrix of (W1±, W2±).
  {
    auto basis2 = blades_of(2, Metric::orthonormal(6).slot_mask());
    ExactMat<RingFraction> m(2, 1 + int(basis2.size()));
    m.at(0, 0) = RingFraction(rep.w1p);
    m.at(1, 0) = RingFraction(rep.w1m);
    for (std::size_t i = 0; i < basis2.size(); ++i) {
      m.at(0, 1 + int(i)) = RingFraction(rep.w2p.coeff(basis2[i]));
      m.at(1, 1 + int(i)) = RingFraction(rep.w2m.coeff(basis2[i]));
    }
    rep.rank_w12 = exact_rank(std::move(m));
  }

  rep.half_flat = dp.is_zero() && wedge(w, dw).is_zero();
  rep.self_dual = real_type_component(dm, 2, 2).is_zero();
  rep.anti_self_dual = real_type_component(dp, 2, 2).is_zero();
  return rep;
}

}  // namespace

std::set<std::string> SU3TorsionReport::classes() const {
  std::set<std::string> out;
  if (!w1p.is_zero()) out.insert("W1+");
  if (!w1m.is_zero()) out.insert("W1-");
  if (!w2p.is_zero()) out.insert("W2+");
  if (!w2m.is_zero()) out.insert("W2-");
  if (!w3.is_zero()) out.insert("W3");
  if (!w4.is_zero()) out.insert("W4");
  if (!w5.is_zero()) out.insert("W5");
  return out;
}

SU3TorsionReport su3_torsion(const SU3Structure& s, DtMode mode) {
  auto d = [&](const Form& f) {
    return mode == DtMode::full ? s.model.d(f) : s.model.d_spatial(f);
  };
  return torsion_core(s, d(s.omega), d(s.psi_plus), d(s.psi_minus));
}

SU3TorsionReport su3_torsion_from_derivatives(const SU3Structure& s,
                                              const Form& d_omega,
                                              const Form& d_psi_plus,
                                              const Form& d_psi_minus) {
  return torsion_core(s, d_omega, d_psi_plus, d_psi_minus);
}

SU3Structure rotate_B(const SU3Structure& s, const Rational& a,
                      const Rational& b) {
  if (a * a + b * b != 1)
    throw ValidationError("rotation pair must satisfy a² + b² = 1");
  Form psi_p = RingElement(a) * s.psi_plus + RingElement(b) * s.psi_minus;
  Form psi_m = RingElement(-b) * s.psi_plus + RingElement(a) * s.psi_minus;
  return make_su3(s.model, s.omega, std::move(psi_p), std::move(psi_m));
}

SU3Structure conformal_rescale(const SU3Structure& s, int k) {
  Metric metric = s.model.metric();
  metric.has_dt = true;
  RingElement tk = RingElement::monomial(k);
  for (int slot = 0; slot <= 6; ++slot) metric.scales[slot] = metric.scale(slot) * tk;
  std::vector<Form> gens;
  for (int i = 1; i <= 6; ++i) gens.push_back(s.model.d_generator(i));
  FrameModel model(6, std::move(gens), metric);
  return SU3Structure{std::move(model),
                      RingElement::monomial(2 * k) * s.omega,
                      RingElement::monomial(3 * k) * s.psi_plus,
                      RingElement::monomial(3 * k) * s.psi_minus};
}

bool half_flat_check(const SU3Structure& s) {
  return s.model.d_spatial(s.psi_plus).is_zero() &&
         wedge(s.omega, s.model.d_spatial(s.omega)).is_zero();
}

}  // namespace g2cal
