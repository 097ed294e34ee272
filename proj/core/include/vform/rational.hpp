#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace vform {

/// Exact rational number. Always canonical: lowest terms, denominator > 0.
/// Backed by GMP so numerators and denominators are arbitrary precision.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {} // NOLINT: implicit by design, mirrors integer literals
  Rational(long num, long den);
  static Rational from_string(const std::string& s); // "n" or "n/d"
  static Rational factorial(unsigned n);

  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o); // o must be nonzero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const;

  /// The double nearest to the exact value (not GMP's truncating conversion).
  double to_double() const;

  /// "0", "-7", "2/3", "-1/6".
  std::string str() const;

  const mpq_class& raw() const { return v_; }

private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace vform
