#pragma once

#include <optional>
#include <vector>

#include "g2cal/form.hpp"
#include "g2cal/linsolve.hpp"

namespace g2cal {

/// Blade basis of degree-k forms over the metric's slots, in bit order.
std::vector<Blade> form_basis(int degree, const Metric& m);

std::vector<RingElement> form_coords(const Form& f,
                                     const std::vector<Blade>& basis);
Form form_from_coords(int n, int degree, const std::vector<Blade>& basis,
                      const std::vector<RingElement>& coords);

/// Coordinates as rationals; empty if any coefficient is t-dependent.
std::optional<std::vector<Rational>> rational_coords(
    const Form& f, const std::vector<Blade>& basis);

/// Solves sum_k x_k span[k] = target over the Laurent fraction field.
/// Returns nullopt if inconsistent; throws RingError if a solution exists
/// but is not Laurent.
std::optional<std::vector<RingElement>> solve_combination(
    const std::vector<Form>& span, const Form& target);

/// Coefficients of the metric-orthogonal projection of target onto the span
/// (a Gram solve); the span must be linearly independent. Throws RingError
/// if a coefficient leaves the Laurent ring.
std::vector<RingElement> orthogonal_coefficients(const std::vector<Form>& span,
                                                 const Form& target,
                                                 const Metric& m);

/// Exact orthogonal projector onto the span of the given forms with respect
/// to the blade inner product of the metric.
class OrthoProjector {
 public:
  OrthoProjector(const std::vector<Form>& span, const Metric& m);

  Form apply(const Form& f) const;
  int subspace_dim() const { return dim_; }

 private:
  int n_;
  int degree_;
  int dim_;
  std::vector<Blade> basis_;
  std::optional<ExactMat<Rational>> fast_;     // used when all entries rational
  std::optional<ExactMat<RingFraction>> gen_;  // fallback
};

}  // namespace g2cal
