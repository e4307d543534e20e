#pragma once

#include <optional>
#include <vector>

#include "g2cal/g2.hpp"

namespace g2cal {

class StabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Row-major 6×6 exact matrix.
using Mat6 = std::vector<RingElement>;  // size 36, entry (i,j) at 6*i + j

/// Hitchin data of a stable 3-form psi on a 6-frame, in the volume
/// trivialization by e¹...e⁶: K is the endomorphism with
/// (e_i ⌟ psi) ∧ psi = Σ_j K_{ji} (e_j ⌟ e¹²³⁴⁵⁶), lambda = (1/6) tr K²,
/// and for lambda < 0 the almost-complex structure is J = ±K/√(−lambda)
/// with the sign fixed so psi ∧ psi_minus is a positive volume multiple,
/// where psi_minus(X,Y,Z) = −psi(JX,Y,Z).
struct StableData {
  RingElement lambda;
  Mat6 k;
  /// Present when √(−lambda) is exact (a rational times an integer power
  /// of t).
  std::optional<Mat6> j;
  std::optional<Form> psi_minus;
};

/// Throws StabilityError when lambda fails to be negative-definite in the
/// exact sense (a single Laurent term of even degree with negative
/// coefficient), or when the reconstruction is slot-inconsistent.
StableData stable_data(const Form& psi);

struct ClosureResidual {
  Form d_phi, d_star_phi;
  bool closed() const { return d_phi.is_zero() && d_star_phi.is_zero(); }
};

/// Exact dphi and d*phi of a (typically warped) structure, including the
/// dt ∧ d/dt terms.
ClosureResidual symbolic_verify_closed(const G2Structure& g);

struct FlowState {
  double t = 0;
  std::vector<double> omega;     // 15 coefficients, 2-form blade order
  std::vector<double> psi_plus;  // 20 coefficients, 3-form blade order
  double lambda = 0;
  double compat_residual = 0;    // max of |omega ∧ psi+| and
                                 // |psi+ ∧ psi- − (2/3) omega³| coefficients
  double closure_residual = 0;   // max of |d psi+| and |d(omega²)|
  double lefschetz_residual = 0; // consistency of the omega-equation solve
};

/// Blade bases used for the flow coefficient vectors.
std::vector<Blade> flow_basis2();
std::vector<Blade> flow_basis3();

/// Classical fixed-step 4th-order integration of the half-flat evolution
///   d psi+ / dt = d̂ omega,   d omega / dt = −L_omega⁻¹(d̂ psi−)
/// on an unwarped 6-model, with psi− recovered from psi+ at every
/// evaluation. Throws StabilityError if the initial structure is not
/// half-flat or stability is lost along the way.
std::vector<FlowState> flow_run(const FrameModel& model, const Form& omega0,
                                const Form& psi_plus0, double t0, double t1,
                                double dt);

}  // namespace g2cal
