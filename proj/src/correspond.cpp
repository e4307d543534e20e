#include "g2cal/correspond.hpp"

#include <array>
#include <random>

#include "g2cal/formlin.hpp"

namespace g2cal {

const FreezeTable& frozen_constants() {
  static const FreezeTable table{};
  return table;
}

namespace {

/// One fit row: a target 1-form and the basis 1-forms it should combine.
struct FitRow {
  Form target;
  std::vector<Form> basis;
};

/// Solves the stacked coordinate system target = sum c_k basis_k over all
/// rows. Throws FreezeError unless the system has full rank, is
/// consistent, and the solution is rational.
std::vector<Rational> exact_fit(const std::vector<FitRow>& rows,
                                int unknowns) {
  std::vector<Blade> slots;
  for (int i = 0; i <= 7; ++i) slots.push_back(Blade::single(i));
  const int m = int(rows.size() * slots.size());
  ExactMat<RingFraction> a(m, unknowns);
  std::vector<RingFraction> b(static_cast<std::size_t>(m));
  int r = 0;
  for (const auto& row : rows) {
    for (Blade sl : slots) {
      for (int k = 0; k < unknowns; ++k)
        a.at(r, k) = RingFraction(row.basis[std::size_t(k)].coeff(sl));
      b[std::size_t(r)] = RingFraction(row.target.coeff(sl));
      ++r;
    }
  }
  if (exact_rank(a) != unknowns)
    throw FreezeError("sample not generic: fit system is rank-deficient");
  auto x = exact_solve(a, b);
  if (!x) throw FreezeError("fit system is inconsistent");
  std::vector<Rational> out;
  out.reserve(x->size());
  for (const auto& v : *x) {
    auto rr = v.to_ring();
    if (!rr || !rr->is_constant())
      throw FreezeError("fit coefficient is not rational");
    out.push_back(rr->constant_value());
  }
  return out;
}

/// The unique ratio num/den over samples with den nonzero. Throws
/// FreezeError if no sample has den nonzero or the ratios disagree.
Rational exact_ratio(
    const std::vector<std::pair<RingElement, RingElement>>& pairs) {
  std::optional<Rational> ratio;
  for (const auto& [num, den] : pairs) {
    if (den.is_zero()) {
      if (!num.is_zero())
        throw FreezeError("scalar fit has no proportionality");
      continue;
    }
    auto q = RingElement::divide_exact(num, den);
    if (!q || !q->is_constant())
      throw FreezeError("scalar ratio is not rational");
    Rational v = q->constant_value();
    if (ratio && *ratio != v)
      throw FreezeError("scalar ratio differs between samples");
    ratio = v;
  }
  if (!ratio) throw FreezeError("sample not generic: scalar source vanishes");
  return *ratio;
}

struct ProductBatch {
  std::vector<Rational> x4;  // W4, JW4, W5, JW5, W1p alpha, W1m alpha
  Rational x1_w1p, d1_w1p;
};

struct TorusBatch {
  std::vector<Rational> x4;  // rho2 hook psi+, rho2 hook psi-
  Rational x1_rho0, d1_rho0;
};

Form covector(int n, int slot) {
  return Form::term(n, Blade::single(slot), RingElement(Rational(1)));
}

/// Random solvable 6-frames (de4, de5 in Lambda²(e1..3), de6 in
/// Lambda²(e1..5)) carrying the standard structure, extended to products.
ProductBatch product_batch(std::mt19937& rng, int count) {
  Form w = standard_omega();
  Form pp = standard_psi_plus();
  Form pm = standard_psi_minus();
  auto coeff = [&] { return Rational(int(rng() % 7) - 3); };
  std::vector<FitRow> rows;
  std::vector<std::pair<RingElement, RingElement>> x1s, d1s;
  while (int(rows.size()) < count) {
    std::vector<Form> gens(6, Form(6, 2));
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j) {
        gens[3].add_term({i, j}, RingElement(coeff()));
        gens[4].add_term({i, j}, RingElement(coeff()));
      }
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j)
        gens[5].add_term({i, j}, RingElement(coeff()));
    std::optional<SU3Structure> s;
    try {
      s = make_su3(FrameModel(6, std::move(gens), Metric::orthonormal(6)), w,
                   pp, pm);
    } catch (const JacobiError&) {
      continue;  // resample
    }
    auto ws = su3_torsion(*s);
    if (ws.w4.is_zero() && ws.w5.is_zero()) continue;
    auto gs = g2_torsion(build_product(*s));
    Form alpha = covector(6, Blade::kDt);
    rows.push_back(FitRow{gs.x4vec,
                          {ws.w4, apply_J(ws.w4), ws.w5, apply_J(ws.w5),
                           ws.w1p * alpha, ws.w1m * alpha}});
    x1s.emplace_back(gs.x1, ws.w1p);
    d1s.emplace_back(gs.dphi_1, ws.w1p);
  }
  return ProductBatch{exact_fit(rows, 6), exact_ratio(x1s), exact_ratio(d1s)};
}

/// Circle extensions of the flat torus by random constant curvatures.
TorusBatch torus_batch(std::mt19937& rng, int count) {
  auto s = make_su3(FrameModel::abelian(6), standard_omega(),
                    standard_psi_plus(), standard_psi_minus());
  const Metric triv = Metric::orthonormal(6);
  auto coeff = [&] { return Rational(int(rng() % 7) - 3); };
  std::vector<FitRow> rows;
  std::vector<std::pair<RingElement, RingElement>> x1s, d1s;
  while (int(rows.size()) < count) {
    Form rho(6, 2);
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) rho.add_term({i, j}, RingElement(coeff()));
    auto rs = rho_split(rho, s);
    if (rs.rho2.is_zero()) continue;
    auto gs = g2_torsion(build_circle_extension(s, rho));
    rows.push_back(FitRow{gs.x4vec,
                          {reframe(contract(rs.rho2, s.psi_plus, triv), 7),
                           reframe(contract(rs.rho2, s.psi_minus, triv), 7)}});
    x1s.emplace_back(gs.x1, rs.rho0);
    d1s.emplace_back(gs.dphi_1, rs.rho0);
  }
  return TorusBatch{exact_fit(rows, 2), exact_ratio(x1s), exact_ratio(d1s)};
}

}  // namespace

FreezeTable proportionality_freeze(unsigned seed) {
  std::mt19937 rng(seed);
  ProductBatch p1 = product_batch(rng, 5);
  ProductBatch p2 = product_batch(rng, 5);
  if (p1.x4 != p2.x4 || p1.x1_w1p != p2.x1_w1p || p1.d1_w1p != p2.d1_w1p)
    throw FreezeError("product batches disagree");
  TorusBatch t1 = torus_batch(rng, 4);
  TorusBatch t2 = torus_batch(rng, 4);
  if (t1.x4 != t2.x4 || t1.x1_rho0 != t2.x1_rho0 || t1.d1_rho0 != t2.d1_rho0)
    throw FreezeError("torus batches disagree");

  FreezeTable t;
  t.x1_w1p = p1.x1_w1p;
  t.x1_rho0 = t1.x1_rho0;
  t.d1_w1p = p1.d1_w1p;
  t.d1_rho0 = t1.d1_rho0;
  t.x4_w4 = p1.x4[0];
  t.x4_jw4 = p1.x4[1];
  t.x4_w5 = p1.x4[2];
  t.x4_jw5 = p1.x4[3];
  t.x4_w1p_a = p1.x4[4];
  t.x4_w1m_a = p1.x4[5];
  t.x4_r2pp = t1.x4[0];
  t.x4_r2pm = t1.x4[1];
  return t;
}

CorrespondenceReport verify_correspondence(const SU3Structure& s,
                                           const Form& rho,
                                           const G2Structure& g) {
  const Metric& bm = s.model.metric();
  if (bm.has_dt || !bm.trivial())
    throw ProvenanceError(
        "correspondence checks need an unwarped orthonormal base");
  if (!g.model.metric().trivial())
    throw ProvenanceError(
        "correspondence checks apply to products and circle extensions");
  if (!g.base || !(g.base->model == s.model) || !(g.base->omega == s.omega) ||
      !(g.base->psi_plus == s.psi_plus) ||
      !(g.base->psi_minus == s.psi_minus))
    throw ProvenanceError("7-structure was not built from this 6-structure");
  const int n = g.phi.frame_dim();
  if (!(reframe(rho, n) == g.rho))
    throw ProvenanceError("curvature 2-form does not match the extension");

  const FreezeTable& t = frozen_constants();
  auto ws = su3_torsion(s);
  auto rs = rho_split(rho, s);
  auto gs = g2_torsion(g);

  Form dw = s.model.d(s.omega);
  Form dpp = s.model.d(s.psi_plus);
  Form dpm = s.model.d(s.psi_minus);
  Form dw_n = reframe(dw, n);
  Form rho_n = reframe(rho, n);
  Form w_n = reframe(s.omega, n);
  Form pm_n = reframe(s.psi_minus, n);

  CorrespondenceReport rep;
  rep.structure_equations =
      g.model.d(g.phi) ==
          wedge(dw_n, g.alpha) + reframe(dpp, n) + wedge(w_n, rho_n) &&
      g.model.d(g.star_phi) ==
          wedge(reframe(dpm, n), g.alpha) + wedge(w_n, dw_n) -
              wedge(pm_n, rho_n);

  RingElement x1_expect =
      RingElement(t.x1_w1p) * ws.w1p + RingElement(t.x1_rho0) * rs.rho0;
  RingElement d1_expect =
      RingElement(t.d1_w1p) * ws.w1p + RingElement(t.d1_rho0) * rs.rho0;
  rep.x1_match = gs.x1 == x1_expect;
  rep.dphi1_match = gs.dphi_1 == d1_expect;

  const Metric triv = Metric::orthonormal(6);
  Form x4_expect(n, 1);
  auto add = [&](const Rational& c, const Form& f) {
    if (!(c == 0)) x4_expect += RingElement(c) * reframe(f, n);
  };
  add(t.x4_w4, ws.w4);
  add(t.x4_jw4, apply_J(ws.w4));
  add(t.x4_w5, ws.w5);
  add(t.x4_jw5, apply_J(ws.w5));
  x4_expect += (RingElement(t.x4_w1p_a) * ws.w1p +
                RingElement(t.x4_w1m_a) * ws.w1m) *
               g.alpha;
  add(t.x4_r2pp, contract(rs.rho2, s.psi_plus, triv));
  add(t.x4_r2pm, contract(rs.rho2, s.psi_minus, triv));
  rep.x4_match = gs.x4vec == x4_expect;

  auto classes = ws.classes();
  auto within = [&](std::initializer_list<const char*> allowed) {
    for (const auto& c : classes) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || c == a;
      if (!ok) return false;
    }
    return true;
  };
  rep.w2m_implies_calibrated =
      !(within({"W2-"}) && rho.is_zero()) || gs.calibrated;
  rep.calibrated_implications =
      !gs.calibrated ||
      (dw.is_zero() && (dpp + wedge(s.omega, rho)).is_zero());
  rep.parallel_implications =
      !(gs.calibrated && gs.cocalibrated) ||
      (dw.is_zero() && dpm.is_zero() && within({"W2+"}) &&
       s.model.d(rs.rho1).is_zero());
  return rep;
}

}  // namespace g2cal
