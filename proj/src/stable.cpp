#include "g2cal/stable.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>

namespace g2cal {

namespace {

const Blade kVol6({1, 2, 3, 4, 5, 6});

Form covector(int i) {
  return Form::term(6, Blade::single(i), RingElement(Rational(1)));
}

RingElement& mat_at(Mat6& m, int i, int j) { return m[std::size_t(6 * i + j)]; }
const RingElement& mat_at(const Mat6& m, int i, int j) {
  return m[std::size_t(6 * i + j)];
}

/// √ of a one-term Laurent element with positive coefficient; nullopt if
/// the exponent is odd or the coefficient is not a rational square.
std::optional<RingElement> ring_sqrt(const RingElement& x) {
  if (!x.is_monomial()) return std::nullopt;
  auto [e, c] = x.monomial_value();
  if (e % 2 != 0 || c <= 0) return std::nullopt;
  auto r = rational_sqrt(c);
  if (!r) return std::nullopt;
  return RingElement::monomial(e / 2, *r);
}

}  // namespace

StableData stable_data(const Form& psi) {
  if (psi.frame_dim() != 6 || psi.degree() != 3)
    throw StabilityError("stable-form data needs a 3-form on a 6-frame");
  for (const auto& [b, c] : psi.terms()) {
    (void)c;
    if (b.has_dt()) throw StabilityError("psi may not contain dt");
  }
  const Metric triv = Metric::orthonormal(6);
  const Form vol = Form::term(6, kVol6, RingElement(Rational(1)));

  // Interior products e_i ⌟ psi and the trivialization signs of e_j ⌟ vol.
  std::vector<Form> hooks;
  std::vector<Rational> vol_sign(7);
  for (int i = 1; i <= 6; ++i) {
    hooks.push_back(contract(covector(i), psi, triv));
    Form f = contract(covector(i), vol, triv);
    vol_sign[std::size_t(i)] = f.coeff(blade_minus(kVol6, Blade::single(i)))
                                   .constant_value();
  }

  StableData out{{}, Mat6(36), std::nullopt, std::nullopt};
  for (int i = 1; i <= 6; ++i) {
    Form w = wedge(hooks[std::size_t(i - 1)], psi);
    for (int j = 1; j <= 6; ++j) {
      RingElement c = w.coeff(blade_minus(kVol6, Blade::single(j)));
      mat_at(out.k, j - 1, i - 1) =
          RingElement(1 / vol_sign[std::size_t(j)]) * c;
    }
  }

  Mat6 k2(36);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      RingElement s;
      for (int r = 0; r < 6; ++r)
        s += mat_at(out.k, i, r) * mat_at(out.k, r, j);
      mat_at(k2, i, j) = s;
    }
  for (int i = 0; i < 6; ++i) out.lambda += mat_at(k2, i, i);
  out.lambda = RingElement(Rational(1, 6)) * out.lambda;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (!(mat_at(k2, i, j) == (i == j ? out.lambda : RingElement())))
        throw StabilityError("K² is not a scalar (internal inconsistency)");

  // Stability of SL(3,C) type: lambda < 0 as a single Laurent term.
  if (out.lambda.is_zero() || !out.lambda.is_monomial())
    throw StabilityError("quartic invariant is not negative: " +
                         out.lambda.str());
  auto [le, lc] = out.lambda.monomial_value();
  (void)le;
  if (lc > 0)
    throw StabilityError("quartic invariant is positive: " + out.lambda.str());

  auto root = ring_sqrt(-out.lambda);
  if (!root) return out;  // stable, but J needs an irrational square root

  Mat6 j(36);
  RingElement inv_root = root->inverse();
  for (int i = 0; i < 36; ++i) j[std::size_t(i)] = inv_root * out.k[std::size_t(i)];

  // psi'(X,Y,Z) = psi(JX,Y,Z), reconstructed from its first-slot interior
  // products B_i = Σ_k J_{ki} (e_k ⌟ psi); the reconstruction certificate
  // checks slot independence.
  auto build_prime = [&](const Mat6& jm) {
    std::vector<Form> b(6, Form(6, 2));
    for (int i = 0; i < 6; ++i)
      for (int kk = 0; kk < 6; ++kk)
        b[std::size_t(i)] += mat_at(jm, kk, i) * hooks[std::size_t(kk)];
    Form prime(6, 3);
    for (int i = 0; i < 6; ++i)
      prime += wedge(covector(i + 1), b[std::size_t(i)]);
    prime = RingElement(Rational(1, 3)) * prime;
    for (int i = 0; i < 6; ++i)
      if (!(contract(covector(i + 1), prime, triv) == b[std::size_t(i)]))
        throw StabilityError("slot-inconsistent reconstruction (internal)");
    return prime;
  };
  Form psi_minus = -build_prime(j);

  // Orient the square root so psi ∧ psi_minus is a positive volume multiple.
  RingElement pairing = wedge(psi, psi_minus).coeff(kVol6);
  if (pairing.is_zero() || !pairing.is_monomial())
    throw StabilityError("psi ∧ psi_minus is not a volume multiple");
  if (pairing.monomial_value().second < 0) {
    for (auto& v : j) v = -v;
    psi_minus = -psi_minus;
  }
  out.j = std::move(j);
  out.psi_minus = std::move(psi_minus);
  return out;
}

ClosureResidual symbolic_verify_closed(const G2Structure& g) {
  return {g.model.d(g.phi), g.model.d(g.star_phi)};
}

std::vector<Blade> flow_basis2() {
  return blades_of(2, Metric::orthonormal(6).slot_mask());
}
std::vector<Blade> flow_basis3() {
  return blades_of(3, Metric::orthonormal(6).slot_mask());
}

}  // namespace g2cal

// Numeric blade calculus for the flow. This lives outside namespace g2cal
// so Eigen's operator templates never compete with the exact-form operator
// overloads during unqualified lookup.
namespace flownum {

using g2cal::Blade;
using g2cal::FrameModel;
using g2cal::Metric;
using g2cal::StabilityError;
using g2cal::blade_minus;
using g2cal::blade_union;
using g2cal::blades_of;
using g2cal::wedge_sign;

const Blade kVol6({1, 2, 3, 4, 5, 6});

using NumForm = std::map<Blade, double>;

void add_scaled(NumForm& a, const NumForm& b, double s) {
  for (const auto& [bl, c] : b) {
    double& v = a[bl];
    v += s * c;
    if (v == 0.0) a.erase(bl);
  }
}

NumForm wedge_num(const NumForm& a, const NumForm& b) {
  NumForm out;
  for (const auto& [ba, ca] : a)
    for (const auto& [bb, cb] : b) {
      int s = wedge_sign(ba, bb);
      if (s == 0) continue;
      out[blade_union(ba, bb)] += s * ca * cb;
    }
  return out;
}

NumForm hook_num(int index, const NumForm& a) {
  NumForm out;
  Blade e = Blade::single(index);
  for (const auto& [b, c] : a) {
    if (!b.contains(index)) continue;
    Blade rest = blade_minus(b, e);
    out[rest] += wedge_sign(e, rest) * c;
  }
  return out;
}

double max_abs(const NumForm& a) {
  double m = 0;
  for (const auto& [b, c] : a) {
    (void)b;
    m = std::max(m, std::abs(c));
  }
  return m;
}

NumForm to_num(const g2cal::Form& f, double t) {
  NumForm out;
  for (const auto& [b, c] : f.terms()) {
    double v = c.eval_double(t);
    if (v != 0.0) out[b] = v;
  }
  return out;
}

std::vector<double> coords_num(const NumForm& f, const std::vector<Blade>& basis) {
  std::vector<double> out(basis.size(), 0.0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto it = f.find(basis[i]);
    if (it != f.end()) out[i] = it->second;
  }
  return out;
}

NumForm from_coords(const std::vector<double>& x, const std::vector<Blade>& basis) {
  NumForm out;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (x[i] != 0.0) out[basis[i]] = x[i];
  return out;
}

/// Numeric differential tables d̂(e^b) for the basis blades of one degree.
std::map<Blade, NumForm> d_table(const FrameModel& m, int degree) {
  std::map<Blade, NumForm> out;
  for (Blade b : blades_of(degree, Metric::orthonormal(6).slot_mask())) {
    g2cal::Form db = m.d_spatial(
        g2cal::Form::term(6, b, g2cal::RingElement(g2cal::Rational(1))));
    out[b] = to_num(db, 1.0);
  }
  return out;
}

NumForm apply_d(const std::map<Blade, NumForm>& table, const NumForm& a) {
  NumForm out;
  for (const auto& [b, c] : a) add_scaled(out, table.at(b), c);
  return out;
}

struct NumStable {
  double lambda = 0;
  NumForm psi_minus;
};

NumStable stable_num(const NumForm& psi) {
  std::vector<NumForm> hooks(6);
  std::vector<double> vol_sign(7);
  NumForm vol{{kVol6, 1.0}};
  for (int i = 1; i <= 6; ++i) {
    hooks[std::size_t(i - 1)] = hook_num(i, psi);
    NumForm f = hook_num(i, vol);
    vol_sign[std::size_t(i)] = f.begin()->second;
  }
  Eigen::Matrix<double, 6, 6> k;
  for (int i = 1; i <= 6; ++i) {
    NumForm w = wedge_num(hooks[std::size_t(i - 1)], psi);
    for (int j = 1; j <= 6; ++j) {
      Blade bj = blade_minus(kVol6, Blade::single(j));
      auto it = w.find(bj);
      double c = it == w.end() ? 0.0 : it->second;
      k(j - 1, i - 1) = c / vol_sign[std::size_t(j)];
    }
  }
  double lambda = (k * k).trace() / 6.0;
  if (!(lambda < 0)) throw StabilityError("stability lost: lambda >= 0");
  Eigen::Matrix<double, 6, 6> j = k / std::sqrt(-lambda);

  NumForm prime;
  for (int i = 0; i < 6; ++i) {
    NumForm bi;
    for (int kk = 0; kk < 6; ++kk)
      add_scaled(bi, hooks[std::size_t(kk)], j(kk, i));
    NumForm ei{{Blade::single(i + 1), 1.0}};
    add_scaled(prime, wedge_num(ei, bi), 1.0 / 3.0);
  }
  NumForm psi_minus;
  add_scaled(psi_minus, prime, -1.0);
  NumForm pairing = wedge_num(psi, psi_minus);
  auto it = pairing.find(kVol6);
  double p = it == pairing.end() ? 0.0 : it->second;
  if (p < 0) {
    NumForm flipped;
    add_scaled(flipped, psi_minus, -1.0);
    psi_minus = std::move(flipped);
  }
  return {lambda, std::move(psi_minus)};
}

/// Least-squares solve of omega ∧ x = rhs over 2-forms; returns x and the
/// residual sup-norm.
NumForm solve_lefschetz(const NumForm& omega, const NumForm& rhs,
                        const std::vector<Blade>& b2,
                        const std::vector<Blade>& b4, double* residual) {
  Eigen::MatrixXd lm(int(b4.size()), int(b2.size()));
  Eigen::VectorXd bvec(int(b4.size()));
  for (std::size_t j = 0; j < b2.size(); ++j) {
    NumForm col = wedge_num(omega, NumForm{{b2[j], 1.0}});
    auto cc = coords_num(col, b4);
    for (std::size_t i = 0; i < b4.size(); ++i) lm(int(i), int(j)) = cc[i];
  }
  auto rc = coords_num(rhs, b4);
  for (std::size_t i = 0; i < b4.size(); ++i) bvec(int(i)) = rc[i];
  Eigen::VectorXd x = lm.colPivHouseholderQr().solve(bvec);
  if (residual) *residual = (lm * x - bvec).lpNorm<Eigen::Infinity>();
  std::vector<double> xc(b2.size());
  for (std::size_t j = 0; j < b2.size(); ++j) xc[j] = x(int(j));
  return from_coords(xc, b2);
}

}  // namespace flownum

namespace g2cal {

std::vector<FlowState> flow_run(const FrameModel& model, const Form& omega0,
                                const Form& psi_plus0, double t0, double t1,
                                double dt) {
  using namespace flownum;
  if (model.n() != 6 || model.warped())
    throw StabilityError("the flow needs an unwarped 6-model");
  if (!(dt > 0) || !(t1 > t0)) throw StabilityError("need t1 > t0 and dt > 0");

  const auto b2 = flow_basis2();
  const auto b3 = flow_basis3();
  const auto b4 = blades_of(4, Metric::orthonormal(6).slot_mask());
  const auto d2 = d_table(model, 2);
  const auto d3 = d_table(model, 3);

  struct State {
    NumForm omega, psi;
  };
  State y{to_num(omega0, t0), to_num(psi_plus0, t0)};

  auto rhs = [&](const State& s, double* residual) {
    State out;
    out.psi = apply_d(d2, s.omega);  // d psi+/dt = d̂ omega
    NumForm psi_minus = stable_num(s.psi).psi_minus;
    NumForm r = apply_d(d3, psi_minus);
    NumForm neg;
    add_scaled(neg, r, -1.0);
    out.omega = solve_lefschetz(s.omega, neg, b2, b4, residual);
    return out;
  };

  auto diagnostics = [&](const State& s, FlowState& fs) {
    NumStable st = stable_num(s.psi);
    fs.lambda = st.lambda;
    NumForm w3 = wedge_num(wedge_num(s.omega, s.omega), s.omega);
    NumForm compat1 = wedge_num(s.omega, s.psi);
    NumForm compat2 = wedge_num(s.psi, st.psi_minus);
    add_scaled(compat2, w3, -2.0 / 3.0);
    fs.compat_residual = std::max(max_abs(compat1), max_abs(compat2));
    // d(omega²) = 2 d̂omega ∧ omega.
    fs.closure_residual =
        std::max(max_abs(apply_d(d3, s.psi)),
                 max_abs(wedge_num(apply_d(d2, s.omega), s.omega)));
  };

  std::vector<FlowState> out;
  auto record = [&](double t, const State& s, double lefschetz) {
    FlowState fs;
    fs.t = t;
    fs.omega = coords_num(s.omega, b2);
    fs.psi_plus = coords_num(s.psi, b3);
    fs.lefschetz_residual = lefschetz;
    diagnostics(s, fs);
    out.push_back(std::move(fs));
  };

  record(t0, y, 0.0);
  if (out.front().closure_residual > 1e-8)
    throw StabilityError("initial structure is not half-flat");

  double t = t0;
  while (t < t1 - 1e-12) {
    double h = std::min(dt, t1 - t);
    double lefschetz = 0;
    State k1 = rhs(y, &lefschetz);
    State y2{y.omega, y.psi};
    add_scaled(y2.omega, k1.omega, h / 2);
    add_scaled(y2.psi, k1.psi, h / 2);
    State k2 = rhs(y2, nullptr);
    State y3{y.omega, y.psi};
    add_scaled(y3.omega, k2.omega, h / 2);
    add_scaled(y3.psi, k2.psi, h / 2);
    State k3 = rhs(y3, nullptr);
    State y4{y.omega, y.psi};
    add_scaled(y4.omega, k3.omega, h);
    add_scaled(y4.psi, k3.psi, h);
    State k4 = rhs(y4, nullptr);
    add_scaled(y.omega, k1.omega, h / 6);
    add_scaled(y.omega, k2.omega, h / 3);
    add_scaled(y.omega, k3.omega, h / 3);
    add_scaled(y.omega, k4.omega, h / 6);
    add_scaled(y.psi, k1.psi, h / 6);
    add_scaled(y.psi, k2.psi, h / 3);
    add_scaled(y.psi, k3.psi, h / 3);
    add_scaled(y.psi, k4.psi, h / 6);
    t += h;
    record(t, y, lefschetz);
  }
  return out;
}

}  // namespace g2cal
