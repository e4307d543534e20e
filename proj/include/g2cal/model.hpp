#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2cal/form.hpp"

namespace g2cal {

class JacobiError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

/// A frame model: structure constants de^i = sum c^i_{jk} e^{jk} over a
/// coordinate coframe, plus monomial scales declaring which rescaled
/// coframe is orthonormal. Warped models carry an additional dt slot.
class FrameModel {
 public:
  /// d_generators[i-1] is de^i (a 2-form, dt-free). Throws JacobiError
  /// unless d∘d vanishes on every generator.
  FrameModel(int n, std::vector<Form> d_generators,
             Metric metric = Metric::orthonormal(6));

  static FrameModel abelian(int n, bool has_dt = false);

  int n() const { return n_; }
  bool has_dt() const { return metric_.has_dt; }
  bool warped() const { return has_dt() || !metric_.trivial(); }
  const Metric& metric() const { return metric_; }
  const Form& d_generator(int i) const { return d_gen_[std::size_t(i - 1)]; }

  /// Full differential: structure-constant part plus dt ∧ d/dt of the
  /// coefficients when the model has a dt slot.
  Form d(const Form& a) const;

  /// Structure-constant part only (coefficients treated as constants).
  Form d_spatial(const Form& a) const;

  friend bool operator==(const FrameModel&, const FrameModel&) = default;

 private:
  int n_;
  std::vector<Form> d_gen_;
  Metric metric_;
};

/// Entries (i, d²e^i) for every generator with nonvanishing d²; empty
/// means the constants satisfy the Jacobi identity.
std::vector<std::pair<int, Form>> jacobi_report(
    int n, const std::vector<Form>& d_generators, const Metric& metric);

/// A parsed structure file: the model plus any attached forms.
struct ModelFile {
  FrameModel model;
  std::optional<Form> omega, psi_plus, psi_minus, rho;
  bool has_alpha_e7 = false;
};

/// Parses the line-oriented structure-file grammar:
///   dim <n>
///   param t
///   d e<i> = <sum of terms>
///   warp e<i> = <monomial>      warp dt = <monomial>
///   omega = ... | psi+ = ... | psi- = ... | rho = ... | alpha = e7
/// Terms are products of rationals, t-powers, and index monomials such as
/// e14 (order-sensitive: e42 = -e24). '#' starts a comment.
ModelFile parse_model(const std::string& text);

/// Inverse of parse_model for a model plus attached forms; round-trips
/// exactly.
std::string format_model(const ModelFile& file);

}  // namespace g2cal
