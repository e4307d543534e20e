#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "g2cal/blade.hpp"
#include "g2cal/ring.hpp"

namespace g2cal {

class FormError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Diagonal metric data for a coframe {dt?, e^1..e^n}: the covector
/// scale_i * (coordinate covector i) has unit norm. Scales are invertible
/// Laurent monomials; the plain orthonormal case has every scale equal to 1.
struct Metric {
  int n = 6;
  bool has_dt = false;
  std::map<int, RingElement> scales;  // slot index -> scale, absent means 1

  static Metric orthonormal(int n, bool has_dt = false) {
    return Metric{n, has_dt, {}};
  }

  RingElement scale(int slot) const {
    auto it = scales.find(slot);
    return it == scales.end() ? RingElement(Rational(1)) : it->second;
  }
  /// <e^i, e^i> = scale_i^{-2}.
  RingElement inv_metric(int slot) const {
    RingElement s = scale(slot);
    return (s * s).inverse();
  }

  std::uint16_t slot_mask() const {
    std::uint16_t m = has_dt ? 1u : 0u;
    m |= std::uint16_t(((1u << n) - 1u) << 1);
    return m;
  }
  int slot_count() const { return n + (has_dt ? 1 : 0); }
  Blade volume_blade() const { return Blade(slot_mask()); }
  /// sqrt(det g) in the coordinate coframe.
  RingElement volume_scale() const;

  bool trivial() const;
  friend bool operator==(const Metric&, const Metric&) = default;
};

/// A homogeneous exterior form with exact coefficients over a fixed frame.
class Form {
 public:
  Form(int n, int degree) : n_(n), degree_(degree) {}

  static Form zero(int n, int degree) { return Form(n, degree); }
  static Form scalar(int n, RingElement c);
  static Form term(int n, Blade b, RingElement c);

  int frame_dim() const { return n_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Blade, RingElement>& terms() const { return terms_; }

  RingElement coeff(Blade b) const;
  void add_term(Blade b, const RingElement& c);

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const RingElement& c, const Form& a);
  friend bool operator==(const Form& a, const Form& b) = default;

  /// Applies an exact scalar function coefficient-wise.
  Form map_coeffs(const auto& fn) const {
    Form out(n_, degree_);
    for (const auto& [b, c] : terms_) out.add_term(b, fn(c));
    return out;
  }

  /// Splits into the dt-free part p and the form r with a = p + dt ∧ r.
  std::pair<Form, Form> split_dt() const;

  std::string str() const;

 private:
  int n_;
  int degree_;
  std::map<Blade, RingElement> terms_;
};

Form wedge(const Form& a, const Form& b);

/// Interior contraction a ⌟ b for the given metric; deg a must not exceed
/// deg b. Adjoint to wedging with a.
Form contract(const Form& a, const Form& b, const Metric& m);

/// Hodge star for the orientation dt ∧ e^1 ∧ ... ∧ e^n (dt slot first when
/// present).
Form hodge(const Form& a, const Metric& m);

/// Pointwise inner product of two forms of equal degree.
RingElement inner(const Form& a, const Form& b, const Metric& m);

inline Form operator*(const Rational& c, const Form& a) {
  return RingElement(c) * a;
}

}  // namespace g2cal
