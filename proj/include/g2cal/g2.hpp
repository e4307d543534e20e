#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "g2cal/su3.hpp"

namespace g2cal {

/// A G2-structure on a 7-slot frame (either n = 7, or n = 6 with a dt
/// slot). phi = omega ∧ alpha + psi+ and star_phi = psi- ∧ alpha + ½ omega²,
/// with star_phi equal to the metric Hodge dual of phi.
struct G2Structure {
  FrameModel model;
  Form alpha;
  Form omega, psi_plus, psi_minus;
  Form phi, star_phi;
  /// Curvature of the circle extension (zero for products and cones).
  Form rho;
  /// The 6-dimensional structure the builders started from; used to check
  /// provenance in the correspondence verifier.
  std::optional<SU3Structure> base;
};

/// Validates phi ∧ star_phi = 7 · vol and star_phi = *phi. Throws
/// ValidationError.
G2Structure make_g2(FrameModel model, Form alpha, Form omega, Form psi_plus,
                    Form psi_minus, Form rho,
                    std::optional<SU3Structure> base = std::nullopt);

/// Riemannian product with a line: 6-model plus a dt slot, alpha = dt.
G2Structure build_product(const SU3Structure& s);

/// Circle extension with connection form alpha = e7, d e7 = rho (rho must
/// be a closed 2-form on the base).
G2Structure build_circle_extension(const SU3Structure& s, const Form& rho);

/// Conical metric: coframe scales t on the base slots, omega ↦ t² omega,
/// psi± ↦ t³ psi±, alpha = dt.
G2Structure build_cone(const SU3Structure& s);

/// Irreducible components keyed by dimension: degree 2 and 5 split as
/// {7, 14}; degree 3 and 4 split as {1, 7, 27}. Components sum to the
/// input; projections are exact and metric-orthogonal.
std::map<int, Form> irrep_project(const Form& a, const G2Structure& g);

struct G2TorsionReport {
  RingElement dphi_1;            // (dphi)_1 = dphi_1 · star_phi
  Form dphi_7, dphi_27;          // 4-form components of dphi
  Form dstarphi_7, dstarphi_14;  // 5-form components of d star_phi
  RingElement x1;                // phi ∧ dphi = x1 · vol
  Form x4vec;                    // *( (*d star_phi) ∧ star_phi ), a 1-form
  bool calibrated = false;
  bool cocalibrated = false;
  bool nearly_parallel = false;
  /// Nonvanishing classes among {"X1","X2","X3","X4"}: X1 from the scalar
  /// part of dphi, X2 from the 14-part of d star_phi, X3 from the 27-part
  /// of dphi, X4 from the 7-parts.
  std::set<std::string> classes() const;
};

G2TorsionReport g2_torsion(const G2Structure& g);

/// Torsion computed from explicitly supplied derivative forms instead of
/// the model differential.
G2TorsionReport g2_torsion_from_derivatives(const G2Structure& g,
                                            const Form& dphi,
                                            const Form& dstar_phi);

/// Rebinds a form to a frame of different dimension (same blades).
Form reframe(const Form& a, int n);

}  // namespace g2cal
