#include "g2cal/ring.hpp"

#include <cmath>
#include <utility>

namespace g2cal {

RingElement::RingElement(Rational c) {
  if (c != 0) terms_[0] = std::move(c);
}

RingElement RingElement::monomial(int exponent, Rational coeff) {
  RingElement r;
  if (coeff != 0) r.terms_[exponent] = std::move(coeff);
  return r;
}

bool RingElement::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational RingElement::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw RingError("RingElement is not constant: " + str());
  return terms_.begin()->second;
}

std::pair<int, Rational> RingElement::monomial_value() const {
  if (!is_monomial()) throw RingError("RingElement is not a monomial: " + str());
  return *terms_.begin();
}

int RingElement::min_exponent() const {
  if (terms_.empty()) throw RingError("zero has no exponent");
  return terms_.begin()->first;
}

int RingElement::max_exponent() const {
  if (terms_.empty()) throw RingError("zero has no exponent");
  return terms_.rbegin()->first;
}

void RingElement::set(int exponent, Rational c) {
  if (c == 0)
    terms_.erase(exponent);
  else
    terms_[exponent] = std::move(c);
}

RingElement RingElement::operator-() const {
  RingElement r;
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  for (const auto& [k, c] : o.terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_[k] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) { return *this += -o; }

RingElement operator*(const RingElement& a, const RingElement& b) {
  RingElement r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      auto it = r.terms_.find(ka + kb);
      if (it == r.terms_.end()) {
        Rational p = ca * cb;
        if (p != 0) r.terms_[ka + kb] = std::move(p);
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  return r;
}

RingElement& RingElement::operator*=(const RingElement& o) {
  *this = *this * o;
  return *this;
}

RingElement RingElement::derivative() const {
  RingElement r;
  for (const auto& [k, c] : terms_)
    if (k != 0) r.terms_[k - 1] = c * k;
  return r;
}

Rational RingElement::eval(const Rational& t) const {
  Rational acc(0);
  for (const auto& [k, c] : terms_) {
    if (t == 0 && k < 0) throw RingError("evaluating negative power at t = 0");
    Rational p(1);
    int e = k >= 0 ? k : -k;
    for (int i = 0; i < e; ++i) p *= t;
    acc += k >= 0 ? Rational(c * p) : Rational(c / p);
  }
  return acc;
}

double RingElement::eval_double(double t) const {
  double acc = 0;
  for (const auto& [k, c] : terms_) acc += to_double(c) * std::pow(t, k);
  return acc;
}

RingElement RingElement::inverse() const {
  auto [k, c] = monomial_value();
  return monomial(-k, Rational(1) / c);
}

std::optional<RingElement> RingElement::divide_exact(const RingElement& a,
                                                     const RingElement& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return RingElement();
  if (b.is_monomial()) return a * b.inverse();
  // Shift to ordinary polynomials and long-divide; the quotient exists iff
  // the remainder vanishes.
  const int sa = a.min_exponent(), sb = b.min_exponent();
  RingElement rem = a * monomial(-sa);
  const RingElement pb = b * monomial(-sb);
  const int db = pb.max_exponent();
  const Rational lead = pb.terms().rbegin()->second;
  RingElement quot;
  while (!rem.is_zero() && rem.max_exponent() >= db) {
    int k = rem.max_exponent() - db;
    Rational c = rem.terms().rbegin()->second / lead;
    RingElement m = monomial(k, c);
    quot += m;
    rem -= m * pb;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot * monomial(sa - sb);
}

std::string RingElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    Rational ac = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool unit = (ac == 1) && k != 0;
    if (!unit) out += rational_str(ac);
    if (k != 0) {
      if (!unit) out += "*";
      out += "t";
      if (k != 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

namespace {

// Ordinary-polynomial helpers (nonnegative exponents only).

RingElement poly_mod(const RingElement& a, const RingElement& b) {
  RingElement rem = a;
  const int db = b.max_exponent();
  const Rational lead = b.terms().rbegin()->second;
  while (!rem.is_zero() && rem.max_exponent() >= db) {
    int k = rem.max_exponent() - db;
    Rational c = rem.terms().rbegin()->second / lead;
    rem -= RingElement::monomial(k, c) * b;
  }
  return rem;
}

RingElement make_monic(const RingElement& p) {
  if (p.is_zero()) return p;
  return p * RingElement(Rational(1) / p.terms().rbegin()->second);
}

// gcd of two ordinary polynomials, monic.
RingElement poly_gcd(RingElement a, RingElement b) {
  while (!b.is_zero()) {
    RingElement r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

// Strips the t-power so the minimum exponent is zero.
RingElement to_poly(const RingElement& x, int* shift) {
  *shift = x.is_zero() ? 0 : x.min_exponent();
  return x * RingElement::monomial(-*shift);
}

}  // namespace

RingFraction::RingFraction(RingElement n) : num_(std::move(n)), den_(Rational(1)) {}

RingFraction::RingFraction(const RingElement& n, const RingElement& d)
    : num_(n), den_(d) {
  if (den_.is_zero()) throw RingError("division by zero");
  normalize();
}

void RingFraction::normalize() {
  if (num_.is_zero()) {
    den_ = RingElement(Rational(1));
    return;
  }
  int sn = 0, sd = 0;
  RingElement pn = to_poly(num_, &sn);
  RingElement pd = to_poly(den_, &sd);
  RingElement g = poly_gcd(pn, pd);
  if (!(g == RingElement(Rational(1)))) {
    pn = *RingElement::divide_exact(pn, g);
    pd = *RingElement::divide_exact(pd, g);
  }
  // Make the denominator monic; push the leading unit into the numerator.
  Rational lead = pd.terms().rbegin()->second;
  pd = pd * RingElement(Rational(1) / lead);
  pn = pn * RingElement(Rational(1) / lead);
  num_ = pn * RingElement::monomial(sn - sd);
  den_ = pd;
}

RingFraction RingFraction::operator-() const {
  RingFraction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RingFraction operator+(const RingFraction& a, const RingFraction& b) {
  return RingFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RingFraction operator-(const RingFraction& a, const RingFraction& b) {
  return a + (-b);
}

RingFraction operator*(const RingFraction& a, const RingFraction& b) {
  return RingFraction(a.num_ * b.num_, a.den_ * b.den_);
}

RingFraction operator/(const RingFraction& a, const RingFraction& b) {
  if (b.is_zero()) throw RingError("division by zero fraction");
  return RingFraction(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RingFraction& a, const RingFraction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::optional<RingElement> RingFraction::to_ring() const {
  return RingElement::divide_exact(num_, den_);
}

std::string RingFraction::str() const {
  if (den_ == RingElement(Rational(1))) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace g2cal
