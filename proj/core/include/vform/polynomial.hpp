#pragma once

#include "vform/rational.hpp"

#include <array>
#include <map>
#include <span>
#include <vector>

namespace vform {

/// Monomial exponents. Axes beyond the spatial dimension stay zero,
/// so the same key type serves 2D and 3D polynomials.
using Exponents = std::array<int, 3>;

inline int total_degree(const Exponents& m) { return m[0] + m[1] + m[2]; }

/// Multivariate polynomial on the reference simplex with exact rational
/// coefficients. Zero coefficients are never stored.
class Polynomial {
public:
  explicit Polynomial(int dim);
  static Polynomial constant(int dim, const Rational& c);
  static Polynomial monomial(int dim, const Exponents& m, const Rational& c);

  int dim() const { return dim_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const; // 0 for the zero polynomial

  void add_term(const Exponents& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial& o) const = default;

  Polynomial scaled(const Rational& c) const;
  Polynomial diff(int axis) const;

  /// Exact evaluation at a rational point (size = dim).
  Rational operator()(std::span<const Rational> point) const;

private:
  int dim_;
  std::map<Exponents, Rational> terms_;
};

/// ∫ X^m over the unit d-simplex = (∏ mᵢ!) / (|m| + d)!.
Rational monomial_integral(int dim, const Exponents& m);

/// Exact integral of p over the unit simplex of its dimension.
Rational integrate(const Polynomial& p);

/// ∫ p·q without materialising the product polynomial.
Rational integrate_product(const Polynomial& p, const Polynomial& q);

} // namespace vform
