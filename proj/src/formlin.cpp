#include "g2cal/formlin.hpp"

namespace g2cal {

std::vector<Blade> form_basis(int degree, const Metric& m) {
  return blades_of(degree, m.slot_mask());
}

std::vector<RingElement> form_coords(const Form& f,
                                     const std::vector<Blade>& basis) {
  std::vector<RingElement> out;
  out.reserve(basis.size());
  for (Blade b : basis) out.push_back(f.coeff(b));
  return out;
}

Form form_from_coords(int n, int degree, const std::vector<Blade>& basis,
                      const std::vector<RingElement>& coords) {
  Form f(n, degree);
  for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], coords[i]);
  return f;
}

std::optional<std::vector<Rational>> rational_coords(
    const Form& f, const std::vector<Blade>& basis) {
  std::vector<Rational> out;
  out.reserve(basis.size());
  for (Blade b : basis) {
    RingElement c = f.coeff(b);
    if (!c.is_constant()) return std::nullopt;
    out.push_back(c.constant_value());
  }
  return out;
}

std::optional<std::vector<RingElement>> solve_combination(
    const std::vector<Form>& span, const Form& target) {
  if (span.empty()) {
    if (target.is_zero()) return std::vector<RingElement>{};
    return std::nullopt;
  }
  const Metric m = Metric::orthonormal(target.frame_dim(), true);
  auto basis = form_basis(target.degree(), m);
  ExactMat<RingFraction> a(int(basis.size()), int(span.size()));
  std::vector<RingFraction> b(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < span.size(); ++j)
      a.at(int(i), int(j)) = RingFraction(span[j].coeff(basis[i]));
    b[i] = RingFraction(target.coeff(basis[i]));
  }
  auto x = exact_solve(a, b);
  if (!x) return std::nullopt;
  std::vector<RingElement> out;
  out.reserve(x->size());
  for (const auto& v : *x) {
    auto r = v.to_ring();
    if (!r) throw RingError("combination solution is not Laurent: " + v.str());
    out.push_back(*r);
  }
  return out;
}

std::vector<RingElement> orthogonal_coefficients(const std::vector<Form>& span,
                                                 const Form& target,
                                                 const Metric& m) {
  const int k = int(span.size());
  ExactMat<RingFraction> gram(k, k);
  std::vector<RingFraction> rhs(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j)
      gram.at(i, j) =
          RingFraction(inner(span[std::size_t(i)], span[std::size_t(j)], m));
    rhs[std::size_t(i)] = RingFraction(inner(span[std::size_t(i)], target, m));
  }
  auto x = exact_solve(gram, rhs);
  if (!x || exact_rank(gram) != k)
    throw FormError("projection span is linearly dependent");
  std::vector<RingElement> out;
  out.reserve(x->size());
  for (const auto& v : *x) {
    auto r = v.to_ring();
    if (!r) throw RingError("projection coefficient is not Laurent: " + v.str());
    out.push_back(*r);
  }
  return out;
}

OrthoProjector::OrthoProjector(const std::vector<Form>& span, const Metric& m) {
  if (span.empty()) throw FormError("empty span for projector");
  n_ = span[0].frame_dim();
  degree_ = span[0].degree();
  basis_ = form_basis(degree_, m);
  const int nb = int(basis_.size());
  const int k = int(span.size());

  // Weighted coordinate matrix B and the diagonal blade weights.
  std::vector<RingFraction> w(basis_.size());
  for (int i = 0; i < nb; ++i) {
    RingElement weight(Rational(1));
    for (int idx : basis_[std::size_t(i)].indices()) weight *= m.inv_metric(idx);
    w[std::size_t(i)] = RingFraction(weight);
  }
  ExactMat<RingFraction> bmat(nb, k);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < k; ++j)
      bmat.at(i, j) = RingFraction(span[std::size_t(j)].coeff(basis_[std::size_t(i)]));

  // Gram = B^T W B, rhs = B^T W; solve Gram * X = rhs, projector P = B X.
  ExactMat<RingFraction> gram(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      RingFraction s(0);
      for (int r = 0; r < nb; ++r) s = s + bmat.at(r, i) * w[std::size_t(r)] * bmat.at(r, j);
      gram.at(i, j) = s;
    }
  ExactMat<RingFraction> aug(k, k + nb);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) aug.at(i, j) = gram.at(i, j);
    for (int r = 0; r < nb; ++r) {
      RingFraction s = bmat.at(r, i) * w[std::size_t(r)];
      aug.at(i, k + r) = s;
    }
  }
  auto pivots = row_reduce(aug, k);
  if (int(pivots.size()) != k)
    throw FormError("projector span is linearly dependent");
  dim_ = k;
  ExactMat<RingFraction> p(nb, nb);
  for (int r = 0; r < nb; ++r)
    for (int c = 0; c < nb; ++c) {
      RingFraction s(0);
      for (int j = 0; j < k; ++j) s = s + bmat.at(r, j) * aug.at(j, k + c);
      p.at(r, c) = s;
    }

  bool all_rational = true;
  for (const auto& v : p.a) {
    auto r = v.to_ring();
    if (!r || !r->is_constant()) {
      all_rational = false;
      break;
    }
  }
  if (all_rational) {
    ExactMat<Rational> pr(nb, nb);
    for (std::size_t i = 0; i < p.a.size(); ++i)
      pr.a[i] = p.a[i].to_ring()->constant_value();
    fast_ = std::move(pr);
  } else {
    gen_ = std::move(p);
  }
}

Form OrthoProjector::apply(const Form& f) const {
  if (f.frame_dim() != n_ || f.degree() != degree_)
    throw FormError("projector degree/frame mismatch");
  const int nb = int(basis_.size());
  Form out(n_, degree_);
  if (fast_) {
    auto coords = form_coords(f, basis_);
    for (int r = 0; r < nb; ++r) {
      RingElement acc;
      for (int c = 0; c < nb; ++c) {
        const Rational& p = fast_->at(r, c);
        if (p == 0 || coords[std::size_t(c)].is_zero()) continue;
        acc += RingElement(p) * coords[std::size_t(c)];
      }
      out.add_term(basis_[std::size_t(r)], acc);
    }
    return out;
  }
  for (int r = 0; r < nb; ++r) {
    RingFraction acc(0);
    for (int c = 0; c < nb; ++c) {
      RingElement fc = f.coeff(basis_[std::size_t(c)]);
      if (fc.is_zero()) continue;
      acc = acc + gen_->at(r, c) * RingFraction(fc);
    }
    auto rr = acc.to_ring();
    if (!rr) throw RingError("projection left the Laurent ring");
    out.add_term(basis_[std::size_t(r)], *rr);
  }
  return out;
}

}  // namespace g2cal
