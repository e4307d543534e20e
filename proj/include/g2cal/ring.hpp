#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "g2cal/rational.hpp"

namespace g2cal {

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact scalar: a finite Laurent polynomial sum q_k t^k with rational
/// coefficients. Plain rationals are the k = 0 case.
class RingElement {
 public:
  RingElement() = default;
  RingElement(Rational c);  // NOLINT: implicit by design
  RingElement(long long c) : RingElement(Rational(c)) {}
  RingElement(int c) : RingElement(Rational(c)) {}

  static RingElement monomial(int exponent, Rational coeff = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  /// Requires is_constant().
  Rational constant_value() const;

  /// The single (exponent, coeff) pair. Requires is_monomial().
  std::pair<int, Rational> monomial_value() const;

  const std::map<int, Rational>& terms() const { return terms_; }
  int min_exponent() const;  // requires nonzero
  int max_exponent() const;  // requires nonzero

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const RingElement& o);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend bool operator==(const RingElement& a, const RingElement& b) = default;

  /// Formal d/dt.
  RingElement derivative() const;

  Rational eval(const Rational& t) const;
  double eval_double(double t) const;

  /// Multiplicative inverse; defined for monomials only.
  RingElement inverse() const;

  /// Exact quotient a/b when the division is remainder-free.
  static std::optional<RingElement> divide_exact(const RingElement& a,
                                                const RingElement& b);

  std::string str() const;

 private:
  void set(int exponent, Rational c);
  std::map<int, Rational> terms_;  // exponent -> coeff, never zero-valued
};

/// Field of fractions of the Laurent ring, used by the exact linear solvers.
/// Normalized so the denominator is a polynomial with nonzero constant term
/// and leading coefficient one.
class RingFraction {
 public:
  RingFraction() : num_(), den_(Rational(1)) {}
  RingFraction(RingElement n);  // NOLINT: implicit by design
  RingFraction(int n) : RingFraction(RingElement(n)) {}  // NOLINT
  RingFraction(const RingElement& n, const RingElement& d);

  const RingElement& num() const { return num_; }
  const RingElement& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RingFraction operator-() const;
  friend RingFraction operator+(const RingFraction& a, const RingFraction& b);
  friend RingFraction operator-(const RingFraction& a, const RingFraction& b);
  friend RingFraction operator*(const RingFraction& a, const RingFraction& b);
  friend RingFraction operator/(const RingFraction& a, const RingFraction& b);
  friend bool operator==(const RingFraction& a, const RingFraction& b);

  /// Converts back to a ring element; fails if the reduced denominator is
  /// not a monomial.
  std::optional<RingElement> to_ring() const;

  std::string str() const;

 private:
  void normalize();
  RingElement num_, den_;
};

}  // namespace g2cal
