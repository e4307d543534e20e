#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "g2cal/model.hpp"

namespace g2cal {

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Real and imaginary parts of a complexified form.
struct CForm {
  Form re, im;

  CForm(int n, int degree) : re(n, degree), im(n, degree) {}
  CForm(Form r, Form i) : re(std::move(r)), im(std::move(i)) {}
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  CForm conj() const { return {re, -im}; }
  friend CForm operator+(const CForm& a, const CForm& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend CForm operator-(const CForm& a, const CForm& b) {
    return {a.re - b.re, a.im - b.im};
  }
};

/// An SU(3)-structure on a 6-dimensional frame model. The almost-complex
/// structure pairs coordinates as theta^j = e^{2j-1} + i e^{2j}, so
/// J e^{2j-1} = -e^{2j} and J e^{2j} = e^{2j-1}. Forms may carry Laurent
/// coefficients on warped models.
struct SU3Structure {
  FrameModel model;
  Form omega, psi_plus, psi_minus;
};

/// Validates the compatibility relations (omega ∧ psi± = 0,
/// psi+ ∧ psi- = (2/3) omega³, omega³ a nonzero volume multiple, omega of
/// type (1,1) and psi+ of type (3,0)+(0,3)). Throws ValidationError.
SU3Structure make_su3(FrameModel model, Form omega, Form psi_plus,
                      Form psi_minus);

/// J acting on the e-part of a form (slotwise pullback by J; dt terms are
/// carried through unchanged on their e-part).
Form apply_J(const Form& a);

/// Decomposition of the dt-free part of a form into (p,q)-types. The dt
/// part of the input is ignored.
std::map<std::pair<int, int>, CForm> type_split(const Form& a);

/// The real form a^{(p,q)} + a^{(q,p)} (just a^{(p,p)} when p == q).
Form real_type_component(const Form& a, int p, int q);

/// a = primitive + omega ∧ rest (rest of degree deg a - 2; for 4-forms the
/// primitive part is zero and everything is omega-divisible).
struct PrimitiveSplit {
  Form primitive;
  Form omega_part;  // the full omega ∧ rest summand
  Form rest;        // the factor multiplying omega
};
PrimitiveSplit primitive_decompose(const Form& a, const SU3Structure& s);

/// rho = rho0 * omega + rho1 + rho2 with rho1 primitive (1,1) and rho2 of
/// type (2,0)+(0,2).
struct RhoSplit {
  RingElement rho0;
  Form rho1, rho2;
};
RhoSplit rho_split(const Form& rho, const SU3Structure& s);

struct SU3TorsionReport {
  RingElement w1p, w1m;
  Form w2p, w2m;  // primitive (1,1) 2-forms
  Form w3;        // primitive real (2,1)+(1,2) 3-form
  Form w4, w5;    // 1-forms (may carry a dt component on warped models)
  int rank_w12 = 0;
  bool half_flat = false;
  bool self_dual = false;       // (d psi-)^{2,2} = 0
  bool anti_self_dual = false;  // (d psi+)^{2,2} = 0
  /// Nonvanishing components among {"W1+","W1-","W2+","W2-","W3","W4","W5"}.
  std::set<std::string> classes() const;
};

enum class DtMode {
  /// Differentiate with the structure-constant part only (a fixed-t slice).
  spatial,
  /// Include dt ∧ d/dt terms (conformally rescaled frames).
  full,
};

SU3TorsionReport su3_torsion(const SU3Structure& s,
                             DtMode mode = DtMode::spatial);

/// Torsion computed from explicitly supplied derivative forms instead of a
/// model differential.
SU3TorsionReport su3_torsion_from_derivatives(const SU3Structure& s,
                                              const Form& d_omega,
                                              const Form& d_psi_plus,
                                              const Form& d_psi_minus);

/// psi+ -> a psi+ + b psi-, psi- -> -b psi+ + a psi-; requires a² + b² = 1.
SU3Structure rotate_B(const SU3Structure& s, const Rational& a,
                      const Rational& b);

/// Conformal rescale by t^k: coframe scales multiply by t^k (declared
/// orthonormal again), omega by t^{2k}, psi± by t^{3k}. The result lives on
/// a warped model with a dt slot.
SU3Structure conformal_rescale(const SU3Structure& s, int k);

bool half_flat_check(const SU3Structure& s);

/// Standard frame forms: omega = e12+e34+e56, psi± as induced by
/// theta¹∧theta²∧theta³.
Form standard_omega(int n = 6);
Form standard_psi_plus(int n = 6);
Form standard_psi_minus(int n = 6);

}  // namespace g2cal
