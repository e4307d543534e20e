#include "g2cal/form.hpp"

namespace g2cal {

RingElement Metric::volume_scale() const {
  RingElement v(Rational(1));
  for (const auto& [slot, s] : scales) {
    (void)slot;
    v *= s;
  }
  return v;
}

bool Metric::trivial() const {
  for (const auto& [slot, s] : scales)
    if (!(s == RingElement(Rational(1)))) return false;
  return true;
}

Form Form::scalar(int n, RingElement c) {
  Form f(n, 0);
  f.add_term(Blade(), c);
  return f;
}

Form Form::term(int n, Blade b, RingElement c) {
  Form f(n, b.degree());
  f.add_term(b, c);
  return f;
}

RingElement Form::coeff(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? RingElement() : it->second;
}

void Form::add_term(Blade b, const RingElement& c) {
  if (b.degree() != degree_)
    throw FormError("blade degree " + std::to_string(b.degree()) +
                    " does not match form degree " + std::to_string(degree_));
  if (c.is_zero()) return;
  auto it = terms_.find(b);
  if (it == terms_.end()) {
    terms_[b] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form Form::operator-() const {
  Form out(n_, degree_);
  for (const auto& [b, c] : terms_) out.terms_[b] = -c;
  return out;
}

Form& Form::operator+=(const Form& o) {
  if (n_ != o.n_) throw FormError("frame dimension mismatch");
  if (degree_ != o.degree_ && !o.is_zero() && !is_zero())
    throw FormError("degree mismatch in form sum");
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form operator*(const RingElement& c, const Form& a) {
  Form out(a.n_, a.degree_);
  if (c.is_zero()) return out;
  for (const auto& [b, x] : a.terms_) out.add_term(b, c * x);
  return out;
}

std::pair<Form, Form> Form::split_dt() const {
  Form pure(n_, degree_), rest(n_, degree_ > 0 ? degree_ - 1 : 0);
  for (const auto& [b, c] : terms_) {
    if (!b.has_dt()) {
      pure.add_term(b, c);
    } else {
      // a_B dt ∧ e^I: dt is the lowest index, so no extra sign.
      rest.add_term(blade_minus(b, Blade::single(Blade::kDt)), c);
    }
  }
  return {pure, rest};
}

std::string Form::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    std::string cs = c.str();
    bool negated = false;
    if (c.terms().size() == 1 && cs.size() && cs[0] == '-') {
      negated = true;
      cs = cs.substr(1);
    }
    out += first ? (negated ? "-" : "") : (negated ? " - " : " + ");
    first = false;
    bool needs_paren = c.terms().size() > 1;
    bool unit = (cs == "1") && !b.empty();
    if (needs_paren)
      out += "(" + c.str() + ")*";
    else if (!unit)
      out += cs + (b.empty() ? "" : "*");
    if (!b.empty()) out += b.str();
  }
  return out;
}

Form wedge(const Form& a, const Form& b) {
  if (a.frame_dim() != b.frame_dim()) throw FormError("frame dimension mismatch");
  Form out(a.frame_dim(), a.degree() + b.degree());
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms()) {
      int s = wedge_sign(ba, bb);
      if (s == 0) continue;
      RingElement c = ca * cb;
      if (s < 0) c = -c;
      out.add_term(blade_union(ba, bb), c);
    }
  return out;
}

Form contract(const Form& a, const Form& b, const Metric& m) {
  if (a.frame_dim() != b.frame_dim()) throw FormError("frame dimension mismatch");
  if (a.degree() > b.degree())
    throw FormError("contraction degree error: deg a > deg b");
  Form out(b.frame_dim(), b.degree() - a.degree());
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms()) {
      if (!blade_subset(ba, bb)) continue;
      Blade rest = blade_minus(bb, ba);
      int s = wedge_sign(ba, rest);  // e^A ∧ e^rest = s e^B
      RingElement weight(Rational(1));
      for (int i : ba.indices()) weight *= m.inv_metric(i);
      RingElement c = ca * cb * weight;
      if (s < 0) c = -c;
      out.add_term(rest, c);
    }
  return out;
}

Form hodge(const Form& a, const Metric& m) {
  const Blade vol = m.volume_blade();
  Form out(a.frame_dim(), m.slot_count() - a.degree());
  const RingElement vs = m.volume_scale();
  for (const auto& [b, c] : a.terms()) {
    if (!blade_subset(b, vol))
      throw FormError("blade outside the model's slots in hodge");
    Blade comp = blade_minus(vol, b);
    int s = wedge_sign(b, comp);  // e^B ∧ e^comp = s vol
    RingElement weight = vs;
    for (int i : b.indices()) weight *= m.inv_metric(i);
    RingElement x = c * weight;
    if (s < 0) x = -x;
    out.add_term(comp, x);
  }
  return out;
}

RingElement inner(const Form& a, const Form& b, const Metric& m) {
  if (a.degree() != b.degree() && !a.is_zero() && !b.is_zero())
    throw FormError("inner product degree mismatch");
  RingElement acc;
  for (const auto& [ba, ca] : a.terms()) {
    RingElement cb = b.coeff(ba);
    if (cb.is_zero()) continue;
    RingElement weight(Rational(1));
    for (int i : ba.indices()) weight *= m.inv_metric(i);
    acc += ca * cb * weight;
  }
  return acc;
}

}  // namespace g2cal
