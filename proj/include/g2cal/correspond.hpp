#pragma once

#include <stdexcept>

#include "g2cal/g2.hpp"

namespace g2cal {

class FreezeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ProvenanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact rational constants tying the scalar and vector extractions of the
/// 7-dimensional torsion report to the seven 6-dimensional torsion
/// components plus the curvature split (rho0, rho1, rho2). Derived once
/// from generic random samples via proportionality_freeze and frozen here:
///
///   x1     = x1_w1p * W1+  +  x1_rho0 * rho0
///   dphi_1 = d1_w1p * W1+  +  d1_rho0 * rho0
///   x4vec  = x4_w4 * W4 + x4_jw4 * J(W4) + x4_w5 * W5 + x4_jw5 * J(W5)
///          + (x4_w1p_a * W1+ + x4_w1m_a * W1-) * alpha
///          + x4_r2pp * (rho2 hook psi+) + x4_r2pm * (rho2 hook psi-)
///
/// where alpha is the unit covector of the extra direction. The hooks of
/// rho1 into psi± are identically zero by type and carry no constants.
struct FreezeTable {
  int version = 1;

  Rational x1_w1p{12};
  Rational x1_rho0{6};
  Rational d1_w1p{12, 7};
  Rational d1_rho0{6, 7};

  Rational x4_w4{2};
  Rational x4_jw4{0};
  Rational x4_w5{-2};
  Rational x4_jw5{0};
  Rational x4_w1p_a{0};
  Rational x4_w1m_a{6};
  Rational x4_r2pp{0};
  Rational x4_r2pm{-1};

  friend bool operator==(const FreezeTable&, const FreezeTable&) = default;
};

/// The table compiled into the library.
const FreezeTable& frozen_constants();

/// Re-derives the constant table from scratch: random solvable 6-frames for
/// the product part and flat-torus circle extensions for the curvature
/// part, fitted exactly and cross-checked on two independent batches.
/// Throws FreezeError if a batch is rank-deficient (sample not generic) or
/// the two batches disagree.
FreezeTable proportionality_freeze(unsigned seed);

struct CorrespondenceReport {
  /// (dd)/(ddd): d phi and d *phi decompose through the base derivatives
  /// and the curvature exactly.
  bool structure_equations = false;
  /// The three frozen linear identities hold exactly.
  bool x1_match = false;
  bool dphi1_match = false;
  bool x4_match = false;
  /// Base torsion in the W2- class with rho = 0 implies d phi = 0
  /// (vacuously true when the premise fails).
  bool w2m_implies_calibrated = false;
  /// d phi = 0 implies d omega = 0 and d psi+ + omega ∧ rho = 0.
  bool calibrated_implications = false;
  /// d phi = 0 = d *phi implies d omega = 0, d psi- = 0, base classes
  /// within {W2+}, and rho1 closed.
  bool parallel_implications = false;

  bool ok() const {
    return structure_equations && x1_match && dphi1_match && x4_match &&
           w2m_implies_calibrated && calibrated_implications &&
           parallel_implications;
  }
};

/// Checks the correspondence table for a 7-structure built from the given
/// 6-structure, either as a product (rho must be zero) or as a circle
/// extension with curvature rho. Throws ProvenanceError unless g was built
/// from s with that rho; the base must be unwarped.
CorrespondenceReport verify_correspondence(const SU3Structure& s,
                                           const Form& rho,
                                           const G2Structure& g);

}  // namespace g2cal
